#include "sosnet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numeric>

namespace sosnet::metrics {

double gini(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n <= 1) return 0.0;
  std::vector<double> x(values.begin(), values.end());
  std::sort(x.begin(), x.end());
  // sum_{i,j} |x_i - x_j| = 2 * sum_i (2i - n + 1) x_(i), 0-based sorted order.
  double weighted = 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    weighted += (2.0 * static_cast<double>(i) - static_cast<double>(n) + 1.0) * x[i];
    total += x[i];
  }
  if (total <= 0.0) {
    std::cerr << "warning: gini of an all-zero vector is undefined; reporting 0\n";
    return 0.0;
  }
  // 2*weighted / (2 n^2 mean) with mean = total / n.
  return std::max(0.0, weighted / (static_cast<double>(n) * total));
}

std::vector<double> betweenness_raw(const LinkGraph& graph, std::span<const Phone> phones) {
  const std::size_t n = graph.node_count();
  std::vector<double> bc(n, 0.0);
  std::vector<double> sigma(n), delta(n);
  std::vector<int> dist(n, -1);
  std::vector<PhoneId> order;
  order.reserve(n);
  std::vector<std::vector<PhoneId>> preds(n);

  for (PhoneId s = 0; s < n; ++s) {
    if (!phones[s].alive || graph.degree(s) == 0) continue;
    order.clear();
    sigma[s] = 1.0;
    dist[s] = 0;
    order.push_back(s);
    for (std::size_t i = 0; i < order.size(); ++i) {
      const PhoneId v = order[i];
      for (PhoneId w : graph.neighbors(v)) {
        if (!phones[w].alive) continue;
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          order.push_back(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] += sigma[v];
          preds[w].push_back(v);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const PhoneId w = *it;
      for (PhoneId v : preds[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      if (w != s) bc[w] += delta[w];
    }
    for (PhoneId v : order) {
      sigma[v] = 0.0;
      delta[v] = 0.0;
      dist[v] = -1;
      preds[v].clear();
    }
  }
  // Each unordered pair was counted from both endpoints.
  for (double& b : bc) b *= 0.5;
  return bc;
}

std::vector<double> betweenness(const LinkGraph& graph, std::span<const Phone> phones) {
  const auto n_alive = static_cast<double>(
      std::count_if(phones.begin(), phones.end(), [](const Phone& p) { return p.alive; }));
  if (n_alive < 3.0) return std::vector<double>(graph.node_count(), 0.0);
  auto bc = betweenness_raw(graph, phones);
  const double norm = (n_alive - 1.0) * (n_alive - 2.0) / 2.0;
  for (double& b : bc) b /= norm;
  return bc;
}

Participation participation(const LinkGraph& graph, std::span<const Phone> phones) {
  if (phones.empty()) return {};
  std::size_t alive = 0, connected = 0;
  for (const Phone& p : phones) {
    if (!p.alive) continue;
    ++alive;
    if (graph.degree(p.id) > 0) ++connected;
  }
  const auto n = static_cast<double>(phones.size());
  return {static_cast<double>(alive) / n, static_cast<double>(connected) / n};
}

double longevity(std::span<const SeriesPoint> series, double theta, double horizon_hours) {
  for (const SeriesPoint& pt : series)
    if (pt.alive < theta) return pt.hour;
  return horizon_hours;
}

namespace {

std::vector<double> average_ranks(std::span<const double> v) {
  const std::size_t n = v.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> rank(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j + 1 < n && v[idx[j + 1]] == v[idx[i]]) ++j;
    const double r = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) rank[idx[k]] = r;
    i = j + 1;
  }
  return rank;
}

double pearson(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size();
  const double ma = std::accumulate(a.begin(), a.end(), 0.0) / static_cast<double>(n);
  const double mb = std::accumulate(b.begin(), b.end(), 0.0) / static_cast<double>(n);
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  if (saa == 0.0 || sbb == 0.0) return 0.0;
  return sab / std::sqrt(saa * sbb);
}

}  // namespace

double spearman(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.size() < 2) return 0.0;
  const auto ra = average_ranks(a);
  const auto rb = average_ranks(b);
  return pearson(ra, rb);
}

double coefficient_of_variation(std::span<const double> values) {
  if (values.empty()) return 0.0;
  const double n = static_cast<double>(values.size());
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  if (mean == 0.0) return 0.0;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / n) / mean;
}

}  // namespace sosnet::metrics
