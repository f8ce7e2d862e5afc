#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "sosnet/world.hpp"

namespace sosnet {

enum class Action : std::uint8_t { connect = 0, beacon, send, receive, relay, idle };

inline constexpr std::size_t kActionCount = 6;

std::string_view action_name(Action a);

/// Battery cost of each radio action, in the same units as battery charge.
/// `connect` is paid by both endpoints of a new link; `idle` once per tick.
/// Defaults are calibrated against a 1000-unit mean battery, 1-minute ticks
/// and the default 500-phone world (see README, "Calibration").
struct EnergyCostTable {
  double connect = 1.0;
  double beacon = 0.05;
  double send = 0.03;
  double receive = 0.03;
  double relay = 0.06;
  double idle = 0.04;

  double cost(Action a) const;
  void validate() const;
};

struct BatteryDistribution {
  double mean = 1000.0;
  double sd = 230.0;
  double min = 100.0;
  double max = 2000.0;

  void validate() const;
};

/// Cumulative spend per phone and action. The identity
///   initial_total == remaining + spent_total()
/// is what the engine audits after every tick.
class EnergyLedger {
 public:
  EnergyLedger() = default;
  explicit EnergyLedger(std::span<const double> initial);

  void record(PhoneId p, Action a, double amount);

  double initial_total() const { return initial_total_; }
  double spent_total() const;
  double spent(Action a) const { return totals_[static_cast<std::size_t>(a)]; }
  double spent(PhoneId p, Action a) const {
    return per_phone_[p][static_cast<std::size_t>(a)];
  }

 private:
  double initial_total_ = 0.0;
  std::array<double, kActionCount> totals_{};
  std::vector<std::array<double, kActionCount>> per_phone_;
};

/// n draws from Normal(mean, sd) clamped into [min, max].
std::vector<double> initial_batteries(std::size_t n, const BatteryDistribution& dist,
                                      std::mt19937_64& rng);

}  // namespace sosnet
