#include "sosnet/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "sosnet/engine.hpp"

namespace sosnet {

void SweepSpec::validate() const {
  if (phones_min < 2 || phones_max < phones_min || phones_step == 0)
    throw std::invalid_argument("invalid phone range");
  if (msgs_max < msgs_min) throw std::invalid_argument("invalid message range");
  if (n_seeds == 0) throw std::invalid_argument("seeds must be >= 1");
  if (jobs == 0) throw std::invalid_argument("jobs must be >= 1");
}

std::vector<std::uint32_t> SweepSpec::phone_counts() const {
  std::vector<std::uint32_t> out;
  for (std::uint64_t n = phones_min; n <= phones_max; n += phones_step)
    out.push_back(static_cast<std::uint32_t>(n));
  return out;
}

std::vector<std::uint32_t> SweepSpec::msg_counts() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = msgs_min; m <= msgs_max; ++m) out.push_back(m);
  return out;
}

double run_longevity(const Scenario& scenario) {
  EngineOptions opts;
  opts.checks = InvariantChecks::none;
  opts.record_phone_state = false;
  opts.log_messages = false;
  Scenario s = scenario;
  s.dump_edges_every = 0;
  Engine engine(s, opts);
  engine.run_to_end();
  return engine.result().longevity_h;
}

std::vector<PhaseRow> run_sweep(const Scenario& base, const SweepSpec& spec) {
  spec.validate();
  base.validate();
  const auto phones = spec.phone_counts();
  const auto msgs = spec.msg_counts();

  struct Job {
    Scenario scenario;
    double longevity = 0.0;
  };
  std::vector<Job> jobs;
  for (auto n : phones)
    for (auto m : msgs)
      for (std::uint32_t k = 0; k < spec.n_seeds; ++k)
        for (Protocol proto : {Protocol::mesh, Protocol::sos}) {
          Scenario s = base;
          s.world.n_phones = n;
          s.world.msgs_per_period = m;
          s.world.seed = base.world.seed + k;
          s.protocol = proto;
          s.validate();
          jobs.push_back({s});
        }

  // Workers pull the next unclaimed job; each job owns its engine and RNG, and
  // results land in the job's own slot.
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        jobs[i].longevity = run_longevity(jobs[i].scenario);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned threads = std::min<std::size_t>(spec.jobs, jobs.size());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::vector<PhaseRow> rows;
  const double area = base.world.width * base.world.height;
  std::size_t j = 0;
  for (auto n : phones)
    for (auto m : msgs) {
      PhaseRow mean;
      mean.n_phones = n;
      mean.density = n / area;
      mean.msgs_per_period = m;
      for (std::uint32_t k = 0; k < spec.n_seeds; ++k) {
        PhaseRow row = mean;
        row.seed = base.world.seed + k;
        row.longevity_mesh_h = jobs[j++].longevity;
        row.longevity_sos_h = jobs[j++].longevity;
        row.diff_h = row.longevity_sos_h - row.longevity_mesh_h;
        mean.longevity_mesh_h += row.longevity_mesh_h;
        mean.longevity_sos_h += row.longevity_sos_h;
        rows.push_back(row);
      }
      mean.longevity_mesh_h /= spec.n_seeds;
      mean.longevity_sos_h /= spec.n_seeds;
      mean.diff_h = mean.longevity_sos_h - mean.longevity_mesh_h;
      rows.push_back(mean);
    }
  return rows;
}

}  // namespace sosnet
