#pragma once

#include <span>
#include <vector>

#include "sosnet/energy.hpp"
#include "sosnet/world.hpp"

namespace sosnet {

/// Mutable state of one simulation run.
struct World {
  WorldConfig cfg;
  EnergyCostTable costs;
  std::vector<Phone> phones;
  LinkGraph graph;
  SpatialGrid grid;
  EnergyLedger ledger;
  /// Keep network_id canonical on every topology change (SOS only).
  bool maintain_labels = false;

  /// Phones placed at `positions` with the given batteries; ids are indices.
  World(const WorldConfig& cfg, const EnergyCostTable& costs,
        std::span<const Position> positions, std::span<const double> batteries);

  std::size_t size() const { return phones.size(); }
  bool alive(PhoneId p) const { return phones[p].alive; }

  void rebuild_grid() { grid.rebuild(phones, cfg); }

  /// Alive phones within range of p, ascending id. Uses the grid, which must
  /// be current with respect to positions.
  std::vector<PhoneId> neighbors_in_range(PhoneId p) const;
  bool in_range(PhoneId a, PhoneId b) const;

  double remaining_total() const;
};

/// Deduct the cost of `action` from p (floored at zero) and record the amount
/// actually taken. A phone whose battery reaches zero dies at once: its links
/// are dropped and, under label maintenance, the affected components are
/// relabelled. Returns true if p died. Charging a dead phone throws
/// InvariantViolation.
bool charge(World& world, PhoneId p, Action action);

/// Same as charge() with an explicit amount (multiples of a table entry).
bool charge_amount(World& world, PhoneId p, Action action, double amount);

/// Drop p's links (free) and fix labels of its former neighbors.
void detach(World& world, PhoneId p);

/// Remove edges and relabel the touched components if labels are maintained.
void remove_links(World& world, std::span<const std::pair<PhoneId, PhoneId>> edges);

}  // namespace sosnet
