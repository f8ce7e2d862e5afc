#include "sosnet/engine.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "sosnet/mesh.hpp"
#include "sosnet/metrics.hpp"
#include "sosnet/mobility.hpp"
#include "sosnet/rng.hpp"
#include "sosnet/sos.hpp"

namespace sosnet {

namespace {

constexpr std::uint32_t kNever = std::numeric_limits<std::uint32_t>::max();
constexpr double kLedgerTolerance = 1e-6;

[[noreturn]] void violation(std::uint32_t tick, const std::string& what) {
  std::ostringstream os;
  os << "invariant violated at tick " << tick << ": " << what;
  throw InvariantViolation(os.str());
}

}  // namespace

World make_world(const Scenario& scenario) {
  const WorldConfig& cfg = scenario.world;
  auto place = rng::stream(cfg.seed, rng::Purpose::placement);
  std::vector<Position> positions(cfg.n_phones);
  for (Position& p : positions) {
    p.x = rng::uniform01(place) * cfg.width;
    p.y = rng::uniform01(place) * cfg.height;
  }
  auto charge_rng = rng::stream(cfg.seed, rng::Purpose::batteries);
  const auto batteries = initial_batteries(cfg.n_phones, scenario.batteries, charge_rng);
  return World(cfg, scenario.costs, positions, batteries);
}

namespace {

const Scenario& validated(const Scenario& s) {
  s.validate();
  return s;
}

traffic::Traffic make_traffic(const WorldConfig& cfg) {
  auto offsets = rng::stream(cfg.seed, rng::Purpose::offsets);
  return traffic::Traffic(cfg, offsets);
}

}  // namespace

Engine::Engine(const Scenario& scenario, EngineOptions options)
    : scenario_(validated(scenario)),
      options_(options),
      world_(make_world(scenario_)),
      traffic_(make_traffic(scenario_.world)),
      traffic_rng_(rng::stream(scenario_.world.seed, rng::Purpose::traffic)) {
  const std::size_t n = world_.size();
  mobility_rng_.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    mobility_rng_.push_back(rng::stream(scenario_.world.seed, rng::Purpose::mobility, i));

  result_.protocol = scenario_.protocol;
  result_.seed = scenario_.world.seed;
  result_.first_death_tick.assign(n, kNever);
  for (const Phone& p : world_.phones) {
    result_.initial_battery.push_back(p.battery);
    result_.initial_position.push_back(p.pos);
  }

  if (scenario_.protocol == Protocol::sos) {
    world_.maintain_labels = true;
    sos::bootstrap(world_);
  }
  for (const Phone& p : world_.phones)
    if (!p.alive) result_.first_death_tick[p.id] = 0;
  check_invariants(options_.checks);
  dump_edges_if_due();
  take_snapshot();
}

void Engine::dump_edges_if_due() {
  if (scenario_.dump_edges_every > 0 && tick_ % scenario_.dump_edges_every == 0)
    result_.edge_dumps.push_back({tick_, world_.graph.edges()});
}

void Engine::step() {
  if (done()) return;
  ++tick_;
  const std::size_t n = world_.size();

  // 1. mobility
  for (PhoneId p = 0; p < n; ++p) {
    if (!world_.alive(p)) continue;
    world_.phones[p].pos =
        step_phone(world_.phones[p].pos, scenario_.world.speed, mobility_rng_[p], scenario_.world);
  }
  world_.rebuild_grid();

  // 2. link maintenance
  if (scenario_.protocol == Protocol::mesh)
    mesh::update(world_);
  else
    sos::drop_broken_links(world_);

  // 3-4. traffic
  traffic_.generate(tick_, world_, traffic_rng_);
  auto finished = traffic_.attempt_all(tick_, world_, scenario_.protocol);
  if (options_.log_messages)
    result_.messages.insert(result_.messages.end(), finished.begin(), finished.end());

  // 5. idle drain; charge() handles death cleanup and relabelling
  for (PhoneId p = 0; p < n; ++p)
    if (world_.alive(p)) charge(world_, p, Action::idle);

  for (PhoneId p = 0; p < n; ++p)
    if (!world_.alive(p) && result_.first_death_tick[p] == kNever) result_.first_death_tick[p] = tick_;

  check_invariants(options_.checks);
  dump_edges_if_due();

  // 6. snapshot
  if (tick_ % kSnapshotEveryTicks == 0 || done()) take_snapshot();
}

void Engine::run_to_end() {
  while (!done()) step();
}

RunResult Engine::take_result() { return std::move(result_); }

void Engine::take_snapshot() {
  const auto& phones = world_.phones;
  Snapshot s;
  s.tick = tick_;
  s.hour = scenario_.world.hours_at(tick_);
  const auto part = metrics::participation(world_.graph, phones);
  s.participation_alive = part.alive;
  s.participation_connected = part.connected;

  std::vector<double> alive_battery;
  for (const Phone& p : phones)
    if (p.alive) alive_battery.push_back(p.battery);
  if (!alive_battery.empty()) {
    s.gini_alive = metrics::gini(alive_battery);
    double sum = 0.0;
    for (double b : alive_battery) sum += b;
    s.mean_battery = sum / static_cast<double>(alive_battery.size());
  }
  s.n_edges = world_.graph.edge_count();
  s.n_components = count_components(world_.graph, phones);

  const auto rep = traffic_.report();
  s.msgs_delivered = rep.delivered;
  s.msgs_pending = rep.pending;
  s.msgs_dropped = rep.dropped;
  s.ledger_initial = world_.ledger.initial_total();
  s.ledger_remaining = world_.remaining_total();
  s.ledger_spent = world_.ledger.spent_total();

  if (options_.record_phone_state) {
    s.battery.reserve(phones.size());
    for (const Phone& p : phones) s.battery.push_back(p.battery);
    s.betweenness = metrics::betweenness(world_.graph, phones);
  }
  result_.snapshots.push_back(std::move(s));
  result_.deliveries = rep;

  std::vector<metrics::SeriesPoint> series;
  series.reserve(result_.snapshots.size());
  for (const Snapshot& snap : result_.snapshots) series.push_back({snap.hour, snap.participation_alive});
  result_.longevity_h = metrics::longevity(series, scenario_.theta,
                                           scenario_.world.hours_at(scenario_.world.horizon_ticks));
}

void Engine::check_invariants(InvariantChecks level) const {
  if (level == InvariantChecks::none) return;
  const auto& g = world_.graph;
  const auto& phones = world_.phones;
  const std::size_t n = world_.size();

  for (PhoneId a = 0; a < n; ++a) {
    if (phones[a].alive != (phones[a].battery > 0.0)) violation(tick_, "alive flag disagrees with battery");
    if (!phones[a].alive && g.degree(a) > 0)
      violation(tick_, "dead phone " + std::to_string(a) + " still has links");
    for (PhoneId b : g.neighbors(a)) {
      if (a == b) violation(tick_, "self-loop");
      if (!g.has_edge(b, a)) violation(tick_, "asymmetric link");
      if (!world_.in_range(a, b)) violation(tick_, "link out of range");
    }
  }

  const double initial = world_.ledger.initial_total();
  const double drift = std::fabs(initial - world_.remaining_total() - world_.ledger.spent_total());
  if (drift > kLedgerTolerance * std::max(1.0, initial)) violation(tick_, "energy ledger drift");

  if (scenario_.protocol == Protocol::sos) {
    const auto minima = component_minima(g);
    std::size_t components = 0;
    for (PhoneId v = 0; v < n; ++v) {
      if (minima[v] == v) ++components;
      if (phones[v].network_id != minima[v])
        violation(tick_, "phone " + std::to_string(v) + " label " +
                             std::to_string(phones[v].network_id) + " != component minimum " +
                             std::to_string(minima[v]));
    }
    if (g.edge_count() != n - components) violation(tick_, "SOS topology contains a cycle");
  }

  // The mesh graph is first built in tick 1; before that it must be empty.
  if (scenario_.protocol == Protocol::mesh && tick_ == 0 && g.edge_count() != 0)
    violation(tick_, "mesh links exist before the first maintenance pass");
  if (level == InvariantChecks::full && scenario_.protocol == Protocol::mesh && tick_ > 0) {
    const double r2 = scenario_.world.tx_range * scenario_.world.tx_range;
    std::size_t expected = 0;
    for (PhoneId a = 0; a < n; ++a) {
      if (!phones[a].alive) continue;
      for (PhoneId b = a + 1; b < n; ++b) {
        if (!phones[b].alive) continue;
        const bool near = torus_distance_sq(phones[a].pos, phones[b].pos, scenario_.world) <= r2;
        if (near) ++expected;
        if (near != g.has_edge(a, b)) violation(tick_, "mesh graph differs from unit-disk graph");
      }
    }
    if (expected != g.edge_count()) violation(tick_, "mesh edge count differs from unit-disk graph");
  }
}

RunResult run(const Scenario& scenario, EngineOptions options) {
  Engine engine(scenario, options);
  engine.run_to_end();
  return engine.take_result();
}

}  // namespace sosnet
