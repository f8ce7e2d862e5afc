#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sosnet/scenario.hpp"

namespace sosnet {

/// Density x traffic grid. Every (phones, msgs, seed) cell runs both
/// protocols on otherwise identical scenarios.
struct SweepSpec {
  std::uint32_t phones_min = 100;
  std::uint32_t phones_max = 800;
  std::uint32_t phones_step = 100;
  std::uint32_t msgs_min = 1;
  std::uint32_t msgs_max = 10;
  std::uint32_t n_seeds = 3;  // seeds base.seed .. base.seed + n_seeds - 1
  unsigned jobs = 1;

  void validate() const;
  std::vector<std::uint32_t> phone_counts() const;
  std::vector<std::uint32_t> msg_counts() const;
};

struct PhaseRow {
  std::uint32_t n_phones = 0;
  double density = 0.0;
  std::uint32_t msgs_per_period = 0;
  std::optional<std::uint64_t> seed;  // empty for the seed-averaged row
  double longevity_mesh_h = 0.0;
  double longevity_sos_h = 0.0;
  double diff_h = 0.0;  // sos - mesh
};

/// Runs the grid on up to spec.jobs threads. Rows come back in grid order
/// (phones, then msgs, then seed, with each cell's mean row after its seeds)
/// regardless of the thread count.
std::vector<PhaseRow> run_sweep(const Scenario& base, const SweepSpec& spec);

/// Longevity of one lightweight run (no per-phone recording, no message log).
double run_longevity(const Scenario& scenario);

}  // namespace sosnet
