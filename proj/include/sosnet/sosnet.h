#ifndef SOSNET_SOSNET_H
#define SOSNET_SOSNET_H

/*
 * C interface to the sosnet simulator.
 *
 * Objects are opaque handles created and destroyed through this API. Every
 * fallible call returns a sosnet_status; on failure a human-readable reason
 * is available from sosnet_last_error() on the same thread until the next
 * failing call.
 *
 * Handles are not synchronized: use one handle from one thread at a time.
 * Distinct handles are fully independent.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SOSNET_BUILDING_LIBRARY)
#    define SOSNET_API __declspec(dllexport)
#  else
#    define SOSNET_API __declspec(dllimport)
#  endif
#else
#  define SOSNET_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sosnet_status {
  SOSNET_OK = 0,
  SOSNET_ERR_INVALID_ARGUMENT = 1, /* null handle, unknown key, bad value */
  SOSNET_ERR_INVALID_CONFIG = 2,   /* scenario fails validation */
  SOSNET_ERR_IO = 3,               /* file could not be read or written */
  SOSNET_ERR_EXISTS = 4,           /* output exists and force was not set */
  SOSNET_ERR_INVARIANT = 5,        /* simulation invariant broken (a bug) */
  SOSNET_ERR_STATE = 6,            /* call not valid in the handle's state */
  SOSNET_ERR_BUFFER_TOO_SMALL = 7,
  SOSNET_ERR_INTERNAL = 8
} sosnet_status;

typedef struct sosnet_scenario sosnet_scenario;
typedef struct sosnet_run sosnet_run;

typedef struct sosnet_summary {
  uint32_t ticks_done;
  uint32_t n_snapshots;
  double longevity_h;          /* first hour alive fraction < theta */
  double first_death_h;        /* negative if no phone died */
  double final_alive;
  double final_connected;
  double final_gini;
  uint64_t msgs_delivered;
  uint64_t msgs_pending;
  uint64_t msgs_dropped;
  double mean_hops;
  double ledger_initial;
  double ledger_remaining;
  double ledger_spent;
} sosnet_summary;

typedef struct sosnet_sweep_spec {
  uint32_t phones_min;
  uint32_t phones_max;
  uint32_t phones_step;
  uint32_t msgs_min;
  uint32_t msgs_max;
  uint32_t n_seeds;  /* replicates start at the scenario's seed */
  uint32_t jobs;     /* concurrent engine runs */
} sosnet_sweep_spec;

SOSNET_API const char* sosnet_version(void);
SOSNET_API const char* sosnet_status_string(sosnet_status status);
SOSNET_API const char* sosnet_last_error(void);

/* Scenario: all parameters of one run, initialised to the documented
 * defaults. Keys are the CLI flag names without the leading dashes, e.g.
 * "protocol", "phones", "cost-relay". */
SOSNET_API sosnet_status sosnet_scenario_create(sosnet_scenario** out);
SOSNET_API void sosnet_scenario_destroy(sosnet_scenario* scenario);
SOSNET_API sosnet_status sosnet_scenario_set(sosnet_scenario* scenario, const char* key,
                                             const char* value);
/* Writes the value as text. Fails with SOSNET_ERR_BUFFER_TOO_SMALL (and sets
 * *needed when non-null) if buf cannot hold it plus the terminator. */
SOSNET_API sosnet_status sosnet_scenario_get(const sosnet_scenario* scenario, const char* key,
                                             char* buf, size_t buf_len, size_t* needed);
/* Applies a flat "key = value" file on top of the current values. */
SOSNET_API sosnet_status sosnet_scenario_load(sosnet_scenario* scenario, const char* path);
SOSNET_API sosnet_status sosnet_scenario_validate(const sosnet_scenario* scenario);

/* Run: a simulation instance. Creation places phones, draws batteries and
 * (for SOS) builds the initial forest. */
SOSNET_API sosnet_status sosnet_run_create(const sosnet_scenario* scenario, sosnet_run** out);
SOSNET_API void sosnet_run_destroy(sosnet_run* run);
/* Advances up to `ticks` ticks; stops at the horizon. */
SOSNET_API sosnet_status sosnet_run_step(sosnet_run* run, uint32_t ticks);
SOSNET_API sosnet_status sosnet_run_finish(sosnet_run* run);
SOSNET_API int sosnet_run_done(const sosnet_run* run);
SOSNET_API sosnet_status sosnet_run_summary(const sosnet_run* run, sosnet_summary* out);
/* Writes timeseries.csv, betweenness.csv, deliveries.csv and any edge dumps
 * into dir (created if missing). Requires a finished run. */
SOSNET_API sosnet_status sosnet_run_write(const sosnet_run* run, const char* dir, int force);

/* Per-phone state at the current tick. `out` must hold n_phones values. */
SOSNET_API uint32_t sosnet_run_phone_count(const sosnet_run* run);
SOSNET_API sosnet_status sosnet_run_batteries(const sosnet_run* run, double* out, size_t len);
SOSNET_API sosnet_status sosnet_run_degrees(const sosnet_run* run, uint32_t* out, size_t len);

SOSNET_API void sosnet_sweep_spec_default(sosnet_sweep_spec* spec);
/* Runs the density x traffic grid for both protocols and writes phase.csv
 * into dir. */
SOSNET_API sosnet_status sosnet_sweep_run(const sosnet_scenario* base,
                                          const sosnet_sweep_spec* spec, const char* dir,
                                          int force);

#ifdef __cplusplus
}
#endif

#endif /* SOSNET_SOSNET_H */
