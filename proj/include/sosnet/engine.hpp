#pragma once

// Tick loop. Phase order within a tick is fixed:
//   1. mobility (ascending id; dead phones stay put)
//   2. link maintenance: mesh rebuilds the unit-disk graph; SOS drops broken
//      links and relabels
//   3. message generation
//   4. routing and delivery (SOS reconfigures on failure)
//   5. idle drain, deaths, link cleanup
//   6. snapshot when tick % 15 == 0 or at the horizon
// SOS bootstraps its forest at tick 0, before the initial snapshot.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "sosnet/scenario.hpp"
#include "sosnet/state.hpp"
#include "sosnet/traffic.hpp"

namespace sosnet {

inline constexpr std::uint32_t kSnapshotEveryTicks = 15;

enum class InvariantChecks : std::uint8_t {
  none,
  cheap,  // symmetry, dead phones unlinked, forest + labels (SOS), ledger
  full,   // cheap + mesh graph equals brute-force unit-disk graph
};

struct Snapshot {
  std::uint32_t tick = 0;
  double hour = 0.0;
  double participation_alive = 0.0;
  double participation_connected = 0.0;
  double gini_alive = 0.0;
  double mean_battery = 0.0;  // over alive phones
  std::size_t n_edges = 0;
  std::size_t n_components = 0;  // among alive phones
  std::uint64_t msgs_delivered = 0;
  std::uint64_t msgs_pending = 0;
  std::uint64_t msgs_dropped = 0;
  double ledger_initial = 0.0;
  double ledger_remaining = 0.0;
  double ledger_spent = 0.0;
  std::vector<double> battery;      // per phone, empty unless recorded
  std::vector<double> betweenness;  // per phone, empty unless recorded
};

struct EdgeDump {
  std::uint32_t tick = 0;
  std::vector<std::pair<PhoneId, PhoneId>> edges;
};

struct RunResult {
  Protocol protocol = Protocol::sos;
  std::uint64_t seed = 0;
  std::vector<Snapshot> snapshots;
  std::vector<traffic::Message> messages;  // final-state messages, if logged
  std::vector<EdgeDump> edge_dumps;
  traffic::DeliveryReport deliveries;
  std::vector<double> initial_battery;
  std::vector<Position> initial_position;
  std::vector<std::uint32_t> first_death_tick;  // per phone; UINT32_MAX if never
  double longevity_h = 0.0;
};

struct EngineOptions {
  InvariantChecks checks = InvariantChecks::cheap;
  bool record_phone_state = true;  // battery + betweenness per snapshot
  bool log_messages = true;
};

class Engine {
 public:
  Engine(const Scenario& scenario, EngineOptions options = {});

  /// Advance one tick (no-op once the horizon is reached).
  void step();
  void run_to_end();
  bool done() const { return tick_ >= scenario_.world.horizon_ticks; }
  std::uint32_t tick() const { return tick_; }

  const World& world() const { return world_; }
  const RunResult& result() const { return result_; }
  RunResult take_result();

  /// Runs the enabled invariant checks; throws InvariantViolation.
  void check_invariants(InvariantChecks level) const;

 private:
  void take_snapshot();
  void dump_edges_if_due();

  Scenario scenario_;
  EngineOptions options_;
  World world_;
  traffic::Traffic traffic_;
  std::vector<std::mt19937_64> mobility_rng_;
  std::mt19937_64 traffic_rng_;
  std::uint32_t tick_ = 0;
  RunResult result_;
};

/// Builds the initial world (placement + batteries) for a scenario.
World make_world(const Scenario& scenario);

RunResult run(const Scenario& scenario, EngineOptions options = {});

}  // namespace sosnet
