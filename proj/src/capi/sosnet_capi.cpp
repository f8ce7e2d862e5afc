#include "sosnet/sosnet.h"

#include <algorithm>
#include <cstring>
#include <filesystem>
#include <limits>
#include <memory>
#include <new>
#include <stdexcept>
#include <string>

#include "sosnet/engine.hpp"
#include "sosnet/output.hpp"
#include "sosnet/scenario.hpp"
#include "sosnet/sweep.hpp"

struct sosnet_scenario {
  sosnet::Scenario value;
};

struct sosnet_run {
  std::unique_ptr<sosnet::Engine> engine;
};

namespace {

thread_local std::string g_last_error;

sosnet_status fail(sosnet_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Maps the core's exceptions onto status codes.
template <class F>
sosnet_status guarded(F&& body, sosnet_status bad_arg = SOSNET_ERR_INVALID_ARGUMENT) {
  try {
    return body();
  } catch (const sosnet::InvariantViolation& e) {
    return fail(SOSNET_ERR_INVARIANT, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(bad_arg, e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(SOSNET_ERR_IO, e.what());
  } catch (const std::runtime_error& e) {
    const std::string what = e.what();
    if (what.rfind("refusing to overwrite", 0) == 0) return fail(SOSNET_ERR_EXISTS, what);
    return fail(SOSNET_ERR_IO, what);
  } catch (const std::bad_alloc&) {
    return fail(SOSNET_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SOSNET_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SOSNET_ERR_INTERNAL, "unknown error");
  }
}

#define SOSNET_REQUIRE(cond, msg) \
  do {                            \
    if (!(cond)) return fail(SOSNET_ERR_INVALID_ARGUMENT, msg); \
  } while (0)

}  // namespace

extern "C" {

const char* sosnet_version(void) { return "0.1.0"; }

const char* sosnet_status_string(sosnet_status status) {
  switch (status) {
    case SOSNET_OK: return "ok";
    case SOSNET_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SOSNET_ERR_INVALID_CONFIG: return "invalid configuration";
    case SOSNET_ERR_IO: return "i/o error";
    case SOSNET_ERR_EXISTS: return "output exists";
    case SOSNET_ERR_INVARIANT: return "invariant violation";
    case SOSNET_ERR_STATE: return "invalid state";
    case SOSNET_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case SOSNET_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* sosnet_last_error(void) { return g_last_error.c_str(); }

sosnet_status sosnet_scenario_create(sosnet_scenario** out) {
  SOSNET_REQUIRE(out, "out is null");
  return guarded([&] {
    *out = new sosnet_scenario{};
    return SOSNET_OK;
  });
}

void sosnet_scenario_destroy(sosnet_scenario* scenario) { delete scenario; }

sosnet_status sosnet_scenario_set(sosnet_scenario* scenario, const char* key, const char* value) {
  SOSNET_REQUIRE(scenario && key && value, "null argument");
  return guarded([&] {
    sosnet::apply_setting(scenario->value, key, value);
    return SOSNET_OK;
  });
}

sosnet_status sosnet_scenario_get(const sosnet_scenario* scenario, const char* key, char* buf,
                                  size_t buf_len, size_t* needed) {
  SOSNET_REQUIRE(scenario && key, "null argument");
  return guarded([&] {
    const std::string v = sosnet::get_setting(scenario->value, key);
    if (needed) *needed = v.size() + 1;
    if (!buf || buf_len < v.size() + 1)
      return fail(SOSNET_ERR_BUFFER_TOO_SMALL, "buffer too small for " + std::string(key));
    std::memcpy(buf, v.c_str(), v.size() + 1);
    return SOSNET_OK;
  });
}

sosnet_status sosnet_scenario_load(sosnet_scenario* scenario, const char* path) {
  SOSNET_REQUIRE(scenario && path, "null argument");
  return guarded([&] {
    sosnet::load_scenario_file(scenario->value, path);
    return SOSNET_OK;
  });
}

sosnet_status sosnet_scenario_validate(const sosnet_scenario* scenario) {
  SOSNET_REQUIRE(scenario, "null argument");
  return guarded(
      [&] {
        scenario->value.validate();
        return SOSNET_OK;
      },
      SOSNET_ERR_INVALID_CONFIG);
}

sosnet_status sosnet_run_create(const sosnet_scenario* scenario, sosnet_run** out) {
  SOSNET_REQUIRE(scenario && out, "null argument");
  return guarded(
      [&] {
        auto run = std::make_unique<sosnet_run>();
        run->engine = std::make_unique<sosnet::Engine>(scenario->value);
        *out = run.release();
        return SOSNET_OK;
      },
      SOSNET_ERR_INVALID_CONFIG);
}

void sosnet_run_destroy(sosnet_run* run) { delete run; }

sosnet_status sosnet_run_step(sosnet_run* run, uint32_t ticks) {
  SOSNET_REQUIRE(run, "null argument");
  return guarded([&] {
    for (uint32_t i = 0; i < ticks && !run->engine->done(); ++i) run->engine->step();
    return SOSNET_OK;
  });
}

sosnet_status sosnet_run_finish(sosnet_run* run) {
  SOSNET_REQUIRE(run, "null argument");
  return guarded([&] {
    run->engine->run_to_end();
    return SOSNET_OK;
  });
}

int sosnet_run_done(const sosnet_run* run) { return run && run->engine->done() ? 1 : 0; }

sosnet_status sosnet_run_summary(const sosnet_run* run, sosnet_summary* out) {
  SOSNET_REQUIRE(run && out, "null argument");
  return guarded([&] {
    const auto& r = run->engine->result();
    const auto& snap = r.snapshots.back();
    sosnet_summary s{};
    s.ticks_done = run->engine->tick();
    s.n_snapshots = static_cast<uint32_t>(r.snapshots.size());
    s.longevity_h = r.longevity_h;
    const auto first = *std::min_element(r.first_death_tick.begin(), r.first_death_tick.end());
    const auto& cfg = run->engine->world().cfg;
    s.first_death_h = first == std::numeric_limits<uint32_t>::max() ? -1.0 : cfg.hours_at(first);
    s.final_alive = snap.participation_alive;
    s.final_connected = snap.participation_connected;
    s.final_gini = snap.gini_alive;
    s.msgs_delivered = r.deliveries.delivered;
    s.msgs_pending = r.deliveries.pending;
    s.msgs_dropped = r.deliveries.dropped;
    s.mean_hops = r.deliveries.mean_hops();
    s.ledger_initial = snap.ledger_initial;
    s.ledger_remaining = snap.ledger_remaining;
    s.ledger_spent = snap.ledger_spent;
    *out = s;
    return SOSNET_OK;
  });
}

sosnet_status sosnet_run_write(const sosnet_run* run, const char* dir, int force) {
  SOSNET_REQUIRE(run && dir, "null argument");
  if (!run->engine->done()) return fail(SOSNET_ERR_STATE, "run has not reached its horizon");
  return guarded([&] {
    sosnet::output::write_run(dir, run->engine->result(), force != 0);
    return SOSNET_OK;
  });
}

uint32_t sosnet_run_phone_count(const sosnet_run* run) {
  return run ? static_cast<uint32_t>(run->engine->world().size()) : 0;
}

sosnet_status sosnet_run_batteries(const sosnet_run* run, double* out, size_t len) {
  SOSNET_REQUIRE(run && out, "null argument");
  const auto& phones = run->engine->world().phones;
  if (len < phones.size()) return fail(SOSNET_ERR_BUFFER_TOO_SMALL, "battery buffer too small");
  for (std::size_t i = 0; i < phones.size(); ++i) out[i] = phones[i].battery;
  return SOSNET_OK;
}

sosnet_status sosnet_run_degrees(const sosnet_run* run, uint32_t* out, size_t len) {
  SOSNET_REQUIRE(run && out, "null argument");
  const auto& w = run->engine->world();
  if (len < w.size()) return fail(SOSNET_ERR_BUFFER_TOO_SMALL, "degree buffer too small");
  for (sosnet::PhoneId i = 0; i < w.size(); ++i) out[i] = static_cast<uint32_t>(w.graph.degree(i));
  return SOSNET_OK;
}

void sosnet_sweep_spec_default(sosnet_sweep_spec* spec) {
  if (!spec) return;
  const sosnet::SweepSpec d;
  *spec = {d.phones_min, d.phones_max, d.phones_step, d.msgs_min,
           d.msgs_max,   d.n_seeds,    d.jobs};
}

sosnet_status sosnet_sweep_run(const sosnet_scenario* base, const sosnet_sweep_spec* spec,
                               const char* dir, int force) {
  SOSNET_REQUIRE(base && spec && dir, "null argument");
  return guarded([&] {
    sosnet::SweepSpec s;
    s.phones_min = spec->phones_min;
    s.phones_max = spec->phones_max;
    s.phones_step = spec->phones_step;
    s.msgs_min = spec->msgs_min;
    s.msgs_max = spec->msgs_max;
    s.n_seeds = spec->n_seeds;
    s.jobs = spec->jobs;
    const std::filesystem::path target = std::filesystem::path(dir) / "phase.csv";
    if (!force && std::filesystem::exists(target))
      return fail(SOSNET_ERR_EXISTS, "refusing to overwrite " + target.string() + " (use --force)");
    const auto rows = sosnet::run_sweep(base->value, s);
    sosnet::output::write_phase_file(dir, rows, force != 0);
    return SOSNET_OK;
  });
}

}  // extern "C"
