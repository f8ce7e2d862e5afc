#include "sosnet/state.hpp"

#include <numeric>
#include <string>

namespace sosnet {

World::World(const WorldConfig& config, const EnergyCostTable& cost_table,
             std::span<const Position> positions, std::span<const double> batteries)
    : cfg(config), costs(cost_table), graph(positions.size()), ledger(batteries) {
  if (positions.size() != batteries.size())
    throw std::invalid_argument("positions and batteries differ in length");
  phones.resize(positions.size());
  for (PhoneId i = 0; i < phones.size(); ++i) {
    Phone& p = phones[i];
    p.id = i;
    p.pos = wrap(positions[i], cfg);
    p.battery = batteries[i];
    p.alive = batteries[i] > 0.0;
    p.network_id = i;
  }
  rebuild_grid();
}

std::vector<PhoneId> World::neighbors_in_range(PhoneId p) const {
  std::vector<PhoneId> out;
  grid.query(p, phones, cfg, out);
  return out;
}

bool World::in_range(PhoneId a, PhoneId b) const {
  return torus_distance_sq(phones[a].pos, phones[b].pos, cfg) <= cfg.tx_range * cfg.tx_range;
}

double World::remaining_total() const {
  double sum = 0.0;
  for (const Phone& p : phones) sum += p.battery;
  return sum;
}

void detach(World& world, PhoneId p) {
  const auto former = world.graph.isolate(p);
  world.phones[p].network_id = p;
  if (world.maintain_labels && !former.empty())
    relabel_components(world.phones, world.graph, former);
}

void remove_links(World& world, std::span<const std::pair<PhoneId, PhoneId>> edges) {
  std::vector<PhoneId> touched;
  for (auto [a, b] : edges)
    if (world.graph.remove_edge(a, b)) {
      touched.push_back(a);
      touched.push_back(b);
    }
  if (world.maintain_labels && !touched.empty())
    relabel_components(world.phones, world.graph, touched);
}

bool charge_amount(World& world, PhoneId p, Action action, double amount) {
  Phone& ph = world.phones[p];
  if (!ph.alive)
    throw InvariantViolation("charged dead phone " + std::to_string(p) + " for " +
                             std::string(action_name(action)));
  const double taken = std::min(amount, ph.battery);
  ph.battery -= taken;
  world.ledger.record(p, action, taken);
  if (ph.battery <= 0.0) {
    ph.battery = 0.0;
    ph.alive = false;
    detach(world, p);
    return true;
  }
  return false;
}

bool charge(World& world, PhoneId p, Action action) {
  return charge_amount(world, p, action, world.costs.cost(action));
}

}  // namespace sosnet
