#include "sosnet/scenario.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sosnet {

void Scenario::validate() const {
  world.validate();
  costs.validate();
  batteries.validate();
  if (!(theta > 0.0 && theta < 1.0)) throw std::invalid_argument("theta must be in (0, 1)");
}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value) {
  throw std::invalid_argument("invalid value '" + std::string(value) + "' for " +
                              std::string(key));
}

double parse_double(std::string_view key, std::string_view value) {
  // from_chars for double is available in libstdc++ 11.
  double out = 0.0;
  const auto* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end || !std::isfinite(out)) bad_value(key, value);
  return out;
}

std::uint64_t parse_uint(std::string_view key, std::string_view value) {
  std::uint64_t out = 0;
  const auto* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) bad_value(key, value);
  return out;
}

std::uint32_t parse_u32(std::string_view key, std::string_view value) {
  const auto v = parse_uint(key, value);
  if (v > UINT32_MAX) bad_value(key, value);
  return static_cast<std::uint32_t>(v);
}

// Whole-tick conversion for durations given in minutes/hours.
std::uint32_t to_ticks(std::string_view key, std::string_view value, double minutes,
                       double tick_minutes) {
  const double ticks = minutes / tick_minutes;
  const double rounded = std::round(ticks);
  if (ticks < 0.0 || std::fabs(ticks - rounded) > 1e-9 || rounded > UINT32_MAX)
    bad_value(key, value);
  return static_cast<std::uint32_t>(rounded);
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

struct Field {
  std::function<void(Scenario&, std::string_view, std::string_view)> set;
  std::function<std::string(const Scenario&)> get;
};

template <class Group>
Field real_field(Group Scenario::*group, double Group::*member) {
  return {[group, member](Scenario& s, std::string_view k, std::string_view v) {
            s.*group.*member = parse_double(k, v);
          },
          [group, member](const Scenario& s) { return fmt(s.*group.*member); }};
}

const std::map<std::string, Field, std::less<>>& fields() {
  static const std::map<std::string, Field, std::less<>> table = [] {
    std::map<std::string, Field, std::less<>> t;
    t["protocol"] = {[](Scenario& s, std::string_view k, std::string_view v) {
                       if (v == "mesh")
                         s.protocol = Protocol::mesh;
                       else if (v == "sos")
                         s.protocol = Protocol::sos;
                       else
                         bad_value(k, v);
                     },
                     [](const Scenario& s) { return std::string(protocol_name(s.protocol)); }};
    t["phones"] = {[](Scenario& s, std::string_view k, std::string_view v) {
                     s.world.n_phones = parse_u32(k, v);
                   },
                   [](const Scenario& s) { return std::to_string(s.world.n_phones); }};
    t["hours"] = {[](Scenario& s, std::string_view k, std::string_view v) {
                    s.world.horizon_ticks =
                        to_ticks(k, v, parse_double(k, v) * 60.0, s.world.tick_minutes);
                  },
                  [](const Scenario& s) { return fmt(s.world.hours_at(s.world.horizon_ticks)); }};
    t["msg-period-min"] = {
        [](Scenario& s, std::string_view k, std::string_view v) {
          s.world.msg_period_ticks = to_ticks(k, v, parse_double(k, v), s.world.tick_minutes);
        },
        [](const Scenario& s) { return fmt(s.world.msg_period_ticks * s.world.tick_minutes); }};
    t["msgs-per-period"] = {[](Scenario& s, std::string_view k, std::string_view v) {
                              s.world.msgs_per_period = parse_u32(k, v);
                            },
                            [](const Scenario& s) { return std::to_string(s.world.msgs_per_period); }};
    t["seed"] = {[](Scenario& s, std::string_view k, std::string_view v) {
                   s.world.seed = parse_uint(k, v);
                 },
                 [](const Scenario& s) { return std::to_string(s.world.seed); }};
    t["theta"] = {[](Scenario& s, std::string_view k, std::string_view v) {
                    s.theta = parse_double(k, v);
                  },
                  [](const Scenario& s) { return fmt(s.theta); }};
    t["dump-edges-every"] = {[](Scenario& s, std::string_view k, std::string_view v) {
                               s.dump_edges_every = parse_u32(k, v);
                             },
                             [](const Scenario& s) { return std::to_string(s.dump_edges_every); }};
    t["range"] = real_field(&Scenario::world, &WorldConfig::tx_range);
    t["speed"] = real_field(&Scenario::world, &WorldConfig::speed);
    t["width"] = real_field(&Scenario::world, &WorldConfig::width);
    t["height"] = real_field(&Scenario::world, &WorldConfig::height);
    t["battery-mean"] = real_field(&Scenario::batteries, &BatteryDistribution::mean);
    t["battery-sd"] = real_field(&Scenario::batteries, &BatteryDistribution::sd);
    t["battery-min"] = real_field(&Scenario::batteries, &BatteryDistribution::min);
    t["battery-max"] = real_field(&Scenario::batteries, &BatteryDistribution::max);
    t["cost-connect"] = real_field(&Scenario::costs, &EnergyCostTable::connect);
    t["cost-beacon"] = real_field(&Scenario::costs, &EnergyCostTable::beacon);
    t["cost-send"] = real_field(&Scenario::costs, &EnergyCostTable::send);
    t["cost-receive"] = real_field(&Scenario::costs, &EnergyCostTable::receive);
    t["cost-relay"] = real_field(&Scenario::costs, &EnergyCostTable::relay);
    t["cost-idle"] = real_field(&Scenario::costs, &EnergyCostTable::idle);
    return t;
  }();
  return table;
}

}  // namespace

void apply_setting(Scenario& s, std::string_view key, std::string_view value) {
  const auto it = fields().find(key);
  if (it == fields().end()) throw std::invalid_argument("unknown setting '" + std::string(key) + "'");
  it->second.set(s, key, trim(value));
}

std::string get_setting(const Scenario& s, std::string_view key) {
  const auto it = fields().find(key);
  if (it == fields().end()) throw std::invalid_argument("unknown setting '" + std::string(key) + "'");
  return it->second.get(s);
}

const std::vector<std::string>& setting_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const auto& [name, _] : fields()) k.push_back(name);
    return k;
  }();
  return keys;
}

void apply_scenario_text(Scenario& s, std::string_view text) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("scenario line " + std::to_string(line_no) + ": expected key = value");
    try {
      apply_setting(s, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("scenario line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

void load_scenario_file(Scenario& s, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  apply_scenario_text(s, buf.str());
}

}  // namespace sosnet
