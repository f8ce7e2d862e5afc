#pragma once

// World geometry, phone state and the undirected link graph shared by both
// topology protocols.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sosnet {

using PhoneId = std::uint32_t;

/// Raised when an engine invariant breaks (cycle, stale label, ledger drift,
/// charging a dead phone). Always indicates a bug, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct WorldConfig {
  double width = 25.0;
  double height = 25.0;
  std::uint32_t n_phones = 500;
  double tx_range = 5.0;
  double speed = 0.1;               // length units per tick
  double tick_minutes = 1.0;
  std::uint32_t horizon_ticks = 4320;
  std::uint32_t msg_period_ticks = 15;
  std::uint32_t msgs_per_period = 1;
  std::uint64_t seed = 42;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;

  double hours_at(std::uint32_t tick) const { return tick * tick_minutes / 60.0; }
};

struct Position {
  double x = 0.0;
  double y = 0.0;
};

Position wrap(Position p, const WorldConfig& cfg);

/// Euclidean distance under the minimal image in each axis.
double torus_distance(Position a, Position b, const WorldConfig& cfg);
double torus_distance_sq(Position a, Position b, const WorldConfig& cfg);

struct Phone {
  PhoneId id = 0;
  Position pos;
  double battery = 0.0;
  bool alive = true;
  PhoneId network_id = 0;
};

/// Symmetric adjacency over dense phone ids. Neighbor lists are kept sorted so
/// iteration order is ascending id everywhere.
class LinkGraph {
 public:
  LinkGraph() = default;
  explicit LinkGraph(std::size_t n) : adj_(n) {}

  std::size_t node_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_; }

  bool has_edge(PhoneId a, PhoneId b) const;
  /// Returns false if the edge already existed.
  bool add_edge(PhoneId a, PhoneId b);
  bool remove_edge(PhoneId a, PhoneId b);
  /// Drops every edge at p and returns the former neighbors.
  std::vector<PhoneId> isolate(PhoneId p);

  std::span<const PhoneId> neighbors(PhoneId p) const { return adj_[p]; }
  std::size_t degree(PhoneId p) const { return adj_[p].size(); }

  /// All edges as (a, b) with a < b, lexicographically ascending.
  std::vector<std::pair<PhoneId, PhoneId>> edges() const;

 private:
  std::vector<std::vector<PhoneId>> adj_;
  std::size_t edges_ = 0;
};

/// Uniform cell grid over the torus for range queries. Cells are at least
/// tx_range wide so a query only inspects the 3x3 block around a cell; when
/// the world is too small for three cells per axis it degrades to a scan.
class SpatialGrid {
 public:
  void rebuild(std::span<const Phone> phones, const WorldConfig& cfg);

  /// Alive phones q != p with torus_distance <= range, ascending id.
  void query(PhoneId p, std::span<const Phone> phones, const WorldConfig& cfg,
             std::vector<PhoneId>& out) const;

 private:
  std::size_t cell_of(Position pos) const;

  std::size_t cols_ = 0;
  std::size_t rows_ = 0;
  double cell_w_ = 0.0;
  double cell_h_ = 0.0;
  bool scan_ = true;
  std::vector<std::vector<PhoneId>> cells_;
};

/// Label every component containing one of `seeds` with its minimum member
/// id. Dead phones are singletons labelled with their own id.
void relabel_components(std::span<Phone> phones, const LinkGraph& graph,
                        std::span<const PhoneId> seeds);

/// Minimum-id component label for every phone, computed from scratch.
std::vector<PhoneId> component_minima(const LinkGraph& graph);

std::size_t count_components(const LinkGraph& graph, std::span<const Phone> phones);

}  // namespace sosnet
