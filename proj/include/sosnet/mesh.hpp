#pragma once

#include <cstddef>

#include "sosnet/state.hpp"

namespace sosnet::mesh {

struct LinkChanges {
  std::size_t removed = 0;
  std::size_t created = 0;
};

/// Bring the link graph to the unit-disk graph of alive phones. Stale links
/// are dropped for free; each new link charges both endpoints `connect`.
/// Pairs are visited in ascending (a, b) order; a phone that dies while
/// paying for a link takes no further links this tick.
LinkChanges update(World& world);

}  // namespace sosnet::mesh
