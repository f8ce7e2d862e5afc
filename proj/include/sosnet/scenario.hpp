#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sosnet/energy.hpp"
#include "sosnet/traffic.hpp"
#include "sosnet/world.hpp"

namespace sosnet {

/// Everything needed to reproduce one run.
struct Scenario {
  WorldConfig world;
  EnergyCostTable costs;
  BatteryDistribution batteries;
  Protocol protocol = Protocol::sos;
  double theta = 0.5;               // longevity threshold on the alive fraction
  std::uint32_t dump_edges_every = 0;  // ticks; 0 disables topology dumps

  void validate() const;
};

/// Settable keys, shared by scenario files and CLI flags (flag = "--" + key):
///   protocol phones hours range speed width height msg-period-min
///   msgs-per-period seed theta dump-edges-every battery-mean battery-sd
///   battery-min battery-max cost-connect cost-send cost-receive cost-relay
///   cost-beacon cost-idle
/// Throws std::invalid_argument for unknown keys or unparsable values.
void apply_setting(Scenario& s, std::string_view key, std::string_view value);

std::string get_setting(const Scenario& s, std::string_view key);

const std::vector<std::string>& setting_keys();

/// Flat `key = value` lines; blank lines and `#` comments ignored.
void apply_scenario_text(Scenario& s, std::string_view text);
void load_scenario_file(Scenario& s, const std::string& path);

}  // namespace sosnet
