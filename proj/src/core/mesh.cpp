#include "sosnet/mesh.hpp"

#include <algorithm>
#include <iterator>

namespace sosnet::mesh {

LinkChanges update(World& world) {
  LinkChanges changes;
  const std::size_t n = world.size();

  std::vector<std::pair<PhoneId, PhoneId>> stale;
  for (PhoneId a = 0; a < n; ++a)
    for (PhoneId b : world.graph.neighbors(a))
      if (a < b && (!world.alive(a) || !world.alive(b) || !world.in_range(a, b)))
        stale.emplace_back(a, b);
  remove_links(world, stale);
  changes.removed = stale.size();

  std::vector<PhoneId> in_range;
  std::vector<PhoneId> missing;
  for (PhoneId a = 0; a < n; ++a) {
    if (!world.alive(a)) continue;
    world.grid.query(a, world.phones, world.cfg, in_range);
    missing.clear();
    auto current = world.graph.neighbors(a);
    std::set_difference(in_range.begin(), in_range.end(), current.begin(), current.end(),
                        std::back_inserter(missing));
    for (PhoneId b : missing) {
      if (b < a || !world.alive(b)) continue;
      world.graph.add_edge(a, b);
      ++changes.created;
      const bool a_died = charge(world, a, Action::connect);
      if (world.alive(b)) charge(world, b, Action::connect);
      if (a_died) break;
    }
  }
  return changes;
}

}  // namespace sosnet::mesh
