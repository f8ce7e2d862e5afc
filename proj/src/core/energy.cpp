#include "sosnet/energy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sosnet/rng.hpp"

namespace sosnet {

std::string_view action_name(Action a) {
  switch (a) {
    case Action::connect: return "connect";
    case Action::beacon: return "beacon";
    case Action::send: return "send";
    case Action::receive: return "receive";
    case Action::relay: return "relay";
    case Action::idle: return "idle";
  }
  return "?";
}

double EnergyCostTable::cost(Action a) const {
  switch (a) {
    case Action::connect: return connect;
    case Action::beacon: return beacon;
    case Action::send: return send;
    case Action::receive: return receive;
    case Action::relay: return relay;
    case Action::idle: return idle;
  }
  return 0.0;
}

void EnergyCostTable::validate() const {
  for (std::size_t i = 0; i < kActionCount; ++i) {
    const auto a = static_cast<Action>(i);
    const double c = cost(a);
    if (!(c >= 0.0) || !std::isfinite(c))
      throw std::invalid_argument("cost-" + std::string(action_name(a)) + " must be >= 0");
  }
}

void BatteryDistribution::validate() const {
  if (!(sd >= 0.0)) throw std::invalid_argument("battery-sd must be >= 0");
  if (!(min > 0.0)) throw std::invalid_argument("battery-min must be > 0");
  if (!(max >= min)) throw std::invalid_argument("battery-max must be >= battery-min");
  if (!std::isfinite(mean)) throw std::invalid_argument("battery-mean must be finite");
}

EnergyLedger::EnergyLedger(std::span<const double> initial)
    : initial_total_(std::accumulate(initial.begin(), initial.end(), 0.0)),
      per_phone_(initial.size()) {}

void EnergyLedger::record(PhoneId p, Action a, double amount) {
  const auto i = static_cast<std::size_t>(a);
  per_phone_[p][i] += amount;
  totals_[i] += amount;
}

double EnergyLedger::spent_total() const {
  return std::accumulate(totals_.begin(), totals_.end(), 0.0);
}

std::vector<double> initial_batteries(std::size_t n, const BatteryDistribution& dist,
                                      std::mt19937_64& rng) {
  std::vector<double> out(n);
  for (double& b : out)
    b = std::clamp(dist.mean + dist.sd * rng::standard_normal(rng), dist.min, dist.max);
  return out;
}

double rng::standard_normal(std::mt19937_64& g) {
  // 1 - u keeps the log argument in (0, 1].
  const double u1 = 1.0 - uniform01(g);
  const double u2 = uniform01(g);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

}  // namespace sosnet
