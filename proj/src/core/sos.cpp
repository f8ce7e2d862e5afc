#include "sosnet/sos.hpp"

#include <algorithm>
#include <string>

namespace sosnet::sos {

std::vector<LocalKnowledge> beacon(World& world, PhoneId p) {
  charge(world, p, Action::beacon);
  std::vector<LocalKnowledge> heard;
  if (!world.alive(p)) return heard;
  for (PhoneId q : world.neighbors_in_range(p)) {
    const Phone& ph = world.phones[q];
    heard.push_back({q, ph.battery, ph.network_id});
  }
  return heard;
}

std::optional<PhoneId> choose_attachment(PhoneId own_network,
                                         const std::vector<LocalKnowledge>& knowledge) {
  const LocalKnowledge* best = nullptr;
  for (const LocalKnowledge& k : knowledge) {
    if (k.network_id == own_network) continue;
    if (!best || k.battery > best->battery ||
        (k.battery == best->battery && k.phone_id < best->phone_id))
      best = &k;
  }
  if (!best) return std::nullopt;
  return best->phone_id;
}

namespace {

// Relabel every member of the component containing `start` to `label`.
void flood_label(World& world, PhoneId start, PhoneId label) {
  std::vector<PhoneId> queue{start};
  world.phones[start].network_id = label;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (PhoneId w : world.graph.neighbors(queue[i]))
      if (world.phones[w].network_id != label) {
        world.phones[w].network_id = label;
        queue.push_back(w);
      }
}

// Re-read the labels in `heard` from the live world, dropping phones that
// died since the beacon.
void refresh(const World& world, std::vector<LocalKnowledge>& heard) {
  std::erase_if(heard, [&](const LocalKnowledge& k) { return !world.alive(k.phone_id); });
  for (LocalKnowledge& k : heard) k.network_id = world.phones[k.phone_id].network_id;
}

}  // namespace

bool connect(World& world, PhoneId a, PhoneId b) {
  if (!world.alive(a) || !world.alive(b))
    throw InvariantViolation("connect on dead phone");
  const PhoneId la = world.phones[a].network_id;
  const PhoneId lb = world.phones[b].network_id;
  if (la == lb)
    throw InvariantViolation("connect " + std::to_string(a) + "-" + std::to_string(b) +
                             " would close a cycle in component " + std::to_string(la));
  world.graph.add_edge(a, b);
  const PhoneId merged = std::min(la, lb);
  flood_label(world, la == merged ? b : a, merged);

  bool linked = true;
  if (charge(world, a, Action::connect)) linked = false;
  if (world.alive(b) && charge(world, b, Action::connect)) linked = false;
  return linked;
}

BootstrapStats bootstrap(World& world) {
  BootstrapStats stats;
  const std::size_t n = world.size();
  std::vector<std::vector<LocalKnowledge>> heard(n);
  for (;;) {
    ++stats.rounds;
    for (PhoneId p = 0; p < n; ++p) {
      heard[p].clear();
      if (world.alive(p)) heard[p] = beacon(world, p);
    }
    std::size_t made = 0;
    for (PhoneId p = 0; p < n; ++p) {
      if (!world.alive(p)) continue;
      refresh(world, heard[p]);
      const auto q = choose_attachment(world.phones[p].network_id, heard[p]);
      if (!q) continue;
      connect(world, p, *q);
      ++made;
    }
    stats.links += made;
    if (made == 0) break;
  }
  return stats;
}

void on_link_break(World& world, std::span<const std::pair<PhoneId, PhoneId>> broken) {
  std::vector<PhoneId> seeds;
  seeds.reserve(broken.size() * 2);
  for (auto [a, b] : broken) {
    seeds.push_back(a);
    seeds.push_back(b);
  }
  relabel_components(world.phones, world.graph, seeds);
}

std::size_t drop_broken_links(World& world) {
  std::vector<std::pair<PhoneId, PhoneId>> broken;
  for (PhoneId a = 0; a < world.size(); ++a)
    for (PhoneId b : world.graph.neighbors(a))
      if (a < b && (!world.alive(a) || !world.alive(b) || !world.in_range(a, b)))
        broken.emplace_back(a, b);
  for (auto [a, b] : broken) world.graph.remove_edge(a, b);
  if (!broken.empty()) on_link_break(world, broken);
  return broken.size();
}

ReconfigRequest make_request(const World& world, PhoneId origin) {
  ReconfigRequest req;
  req.origin = origin;
  req.scope.push_back(origin);
  for (PhoneId q : world.graph.neighbors(origin)) req.scope.push_back(q);
  return req;
}

std::size_t reconfigure(World& world, PhoneId origin) {
  if (!world.alive(origin)) return 0;
  const ReconfigRequest req = make_request(world, origin);

  std::vector<PhoneId> order = req.scope;
  std::sort(order.begin(), order.end());

  // Everyone in scope exchanges knowledge first, then links are made one at
  // a time with labels re-read before each choice.
  std::vector<std::vector<LocalKnowledge>> heard(order.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    if (world.alive(order[i])) heard[i] = beacon(world, order[i]);

  std::size_t made = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const PhoneId p = order[i];
    if (!world.alive(p)) continue;
    refresh(world, heard[i]);
    const auto target = choose_attachment(world.phones[p].network_id, heard[i]);
    if (!target) continue;
    connect(world, p, *target);
    ++made;
  }
  return made;
}

}  // namespace sosnet::sos
