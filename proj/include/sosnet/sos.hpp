#pragma once

// Battery-aware preferential attachment. Every phone links to the
// highest-battery phone in range that is not already in its own component,
// which keeps the topology a forest whose hubs are the best-charged phones.
// Components share a network identifier, kept equal to the component's
// minimum phone id; it is what rules out loops.

#include <cstddef>
#include <optional>
#include <vector>

#include "sosnet/state.hpp"

namespace sosnet::sos {

struct LocalKnowledge {
  PhoneId phone_id = 0;
  double battery = 0.0;
  PhoneId network_id = 0;
};

struct ReconfigRequest {
  PhoneId origin = 0;
  std::vector<PhoneId> scope;  // origin followed by its tree neighbors, ascending
};

/// Broadcast p's knowledge and collect that of every alive phone in range.
/// p pays `beacon` once (even with nobody in range).
std::vector<LocalKnowledge> beacon(World& world, PhoneId p);

/// Highest-battery record whose network id differs from `own_network`;
/// ties go to the lower phone id.
std::optional<PhoneId> choose_attachment(PhoneId own_network,
                                         const std::vector<LocalKnowledge>& knowledge);

/// Link a and b, charge both `connect`, and give the merged component the
/// smaller of the two labels. Throws InvariantViolation if a and b already
/// share a component. Returns false (no link) if a phone died paying.
bool connect(World& world, PhoneId a, PhoneId b);

struct BootstrapStats {
  std::size_t rounds = 0;
  std::size_t links = 0;
};

/// Repeated attachment rounds over all alive phones until a round adds no
/// link. In each round every phone beacons first; then, in ascending id, each
/// phone re-reads the labels of what it heard and attaches per
/// choose_attachment.
BootstrapStats bootstrap(World& world);

/// Drop links whose endpoints are dead or out of range and relabel the
/// pieces. Returns the number of links removed.
std::size_t drop_broken_links(World& world);

/// Relabel the components touched by already-removed edges.
void on_link_break(World& world, std::span<const std::pair<PhoneId, PhoneId>> broken);

ReconfigRequest make_request(const World& world, PhoneId origin);

/// Event-driven repair after a failed route from `origin`. An isolated origin
/// looks for a link on its own; otherwise origin and its direct neighbors all
/// beacon and try to attach, in ascending id, re-reading labels before each
/// link. Returns the number of links created.
std::size_t reconfigure(World& world, PhoneId origin);

}  // namespace sosnet::sos
