#pragma once

#include <vector>

#include "sosnet/state.hpp"

namespace fixture {

struct Placed {
  double x, y, battery;
};

// Small hand-placed world on the default 25x25 torus.
inline sosnet::World world(const std::vector<Placed>& phones, sosnet::WorldConfig cfg = {},
                           sosnet::EnergyCostTable costs = {}) {
  std::vector<sosnet::Position> pos;
  std::vector<double> bat;
  for (const auto& p : phones) {
    pos.push_back({p.x, p.y});
    bat.push_back(p.battery);
  }
  cfg.n_phones = static_cast<std::uint32_t>(phones.size());
  sosnet::World w(cfg, costs, pos, bat);
  w.rebuild_grid();
  return w;
}

// Costs of 1 per action, 0 idle: makes energy arithmetic readable.
inline sosnet::EnergyCostTable unit_costs() {
  sosnet::EnergyCostTable c;
  c.connect = c.beacon = c.send = c.receive = c.relay = 1.0;
  c.idle = 0.0;
  return c;
}

}  // namespace fixture
