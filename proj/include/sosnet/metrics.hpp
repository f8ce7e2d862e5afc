#pragma once

#include <span>
#include <utility>
#include <vector>

#include "sosnet/world.hpp"

namespace sosnet::metrics {

/// Mean absolute difference over all ordered pairs divided by twice the mean.
/// Computed in O(n log n) from the sorted values. All-zero input returns 0
/// with a warning on stderr.
double gini(std::span<const double> values);

/// Brandes shortest-path betweenness over the phones flagged alive, as the
/// number of unordered pairs {s, t} routed through v (split across equal
/// shortest paths), not normalized.
std::vector<double> betweenness_raw(const LinkGraph& graph, std::span<const Phone> phones);

/// betweenness_raw divided by (n_alive - 1)(n_alive - 2) / 2; all zeros when
/// fewer than three phones are alive.
std::vector<double> betweenness(const LinkGraph& graph, std::span<const Phone> phones);

struct Participation {
  double alive = 0.0;      // alive / n_phones
  double connected = 0.0;  // alive with degree >= 1, over n_phones
};

Participation participation(const LinkGraph& graph, std::span<const Phone> phones);

struct SeriesPoint {
  double hour = 0.0;
  double alive = 0.0;
};

/// Hour of the first point whose alive fraction is below theta; `horizon_hours`
/// if the series never drops below it.
double longevity(std::span<const SeriesPoint> series, double theta, double horizon_hours);

/// Spearman rank correlation with average ranks for ties. Returns 0 when
/// either side is constant.
double spearman(std::span<const double> a, std::span<const double> b);

/// Population coefficient of variation (sd / mean); 0 for a zero mean.
double coefficient_of_variation(std::span<const double> values);

}  // namespace sosnet::metrics
