// sosnet command-line front end: single runs and density x traffic sweeps.

#include <cstdio>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sosnet/sosnet.h"

namespace {

struct ScenarioHandle {
  sosnet_scenario* p = nullptr;
  ~ScenarioHandle() { sosnet_scenario_destroy(p); }
};

struct RunHandle {
  sosnet_run* p = nullptr;
  ~RunHandle() { sosnet_run_destroy(p); }
};

[[noreturn]] void die(sosnet_status st) {
  std::fprintf(stderr, "sosnet: %s: %s\n", sosnet_status_string(st), sosnet_last_error());
  std::exit(st == SOSNET_ERR_EXISTS ? 3 : 2);
}

void check(sosnet_status st) {
  if (st != SOSNET_OK) die(st);
}

// Flags that map one-to-one onto scenario keys. Only flags present on the
// command line are applied, so scenario-file values survive.
const std::vector<std::string> kScenarioFlags = {
    "protocol",    "phones",     "hours",       "range",        "speed",
    "width",       "height",     "msg-period-min", "msgs-per-period", "seed",
    "theta",       "dump-edges-every", "battery-mean", "battery-sd",
    "battery-min", "battery-max", "cost-connect", "cost-beacon", "cost-send",
    "cost-receive", "cost-relay", "cost-idle"};

struct Common {
  std::map<std::string, std::string> values;
  std::string scenario_file;
  std::string out = "out";
  bool force = false;
  unsigned seeds = 1;
};

void add_common(CLI::App* cmd, Common& c) {
  for (const auto& key : kScenarioFlags)
    cmd->add_option("--" + key, c.values[key], "scenario key '" + key + "'");
  cmd->add_option("--scenario", c.scenario_file, "key=value file applied before flags")
      ->check(CLI::ExistingFile);
  cmd->add_option("--out", c.out, "output directory")->capture_default_str();
  cmd->add_flag("--force", c.force, "overwrite existing outputs");
  cmd->add_option("--seeds", c.seeds, "number of seed replicates")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void build_scenario(CLI::App* cmd, const Common& c, ScenarioHandle& s) {
  check(sosnet_scenario_create(&s.p));
  if (!c.scenario_file.empty()) check(sosnet_scenario_load(s.p, c.scenario_file.c_str()));
  for (const auto& key : kScenarioFlags)
    if (cmd->count("--" + key) > 0) check(sosnet_scenario_set(s.p, key.c_str(), c.values.at(key).c_str()));
  const sosnet_status st = sosnet_scenario_validate(s.p);
  if (st != SOSNET_OK) die(st);
}

std::string get(const ScenarioHandle& s, const char* key) {
  char buf[128];
  check(sosnet_scenario_get(s.p, key, buf, sizeof buf, nullptr));
  return buf;
}

int cmd_run(CLI::App* cmd, const Common& c) {
  ScenarioHandle s;
  build_scenario(cmd, c, s);
  const unsigned long long seed0 = std::stoull(get(s, "seed"));
  for (unsigned k = 0; k < c.seeds; ++k) {
    const std::string seed = std::to_string(seed0 + k);
    check(sosnet_scenario_set(s.p, "seed", seed.c_str()));
    const std::string dir = c.seeds == 1 ? c.out : c.out + "/seed_" + seed;

    RunHandle r;
    check(sosnet_run_create(s.p, &r.p));
    check(sosnet_run_finish(r.p));
    check(sosnet_run_write(r.p, dir.c_str(), c.force ? 1 : 0));

    sosnet_summary sum;
    check(sosnet_run_summary(r.p, &sum));
    std::printf("%s seed %s -> %s\n", get(s, "protocol").c_str(), seed.c_str(), dir.c_str());
    std::printf("  longevity_h        %.6g\n", sum.longevity_h);
    if (sum.first_death_h < 0)
      std::printf("  first_death_h      none\n");
    else
      std::printf("  first_death_h      %.6g\n", sum.first_death_h);
    std::printf("  final_alive        %.6g\n", sum.final_alive);
    std::printf("  final_connected    %.6g\n", sum.final_connected);
    std::printf("  final_gini         %.6g\n", sum.final_gini);
    std::printf("  delivered/pending/dropped  %llu/%llu/%llu (mean hops %.6g)\n",
                static_cast<unsigned long long>(sum.msgs_delivered),
                static_cast<unsigned long long>(sum.msgs_pending),
                static_cast<unsigned long long>(sum.msgs_dropped), sum.mean_hops);
  }
  return 0;
}

int cmd_sweep(CLI::App* cmd, const Common& c, sosnet_sweep_spec spec) {
  ScenarioHandle s;
  build_scenario(cmd, c, s);
  spec.n_seeds = c.seeds;
  check(sosnet_sweep_run(s.p, &spec, c.out.c_str(), c.force ? 1 : 0));
  std::printf("wrote %s/phase.csv\n", c.out.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mesh vs SOS battery-aware topology simulator"};
  app.set_version_flag("--version", std::string(sosnet_version()));
  app.require_subcommand(1);

  Common run_opts;
  auto* run = app.add_subcommand("run", "simulate one scenario and write its CSVs");
  add_common(run, run_opts);

  Common sweep_opts;
  sosnet_sweep_spec spec;
  sosnet_sweep_spec_default(&spec);
  auto* sweep = app.add_subcommand("sweep", "longevity phase grid over density and traffic");
  sweep_opts.seeds = spec.n_seeds;
  add_common(sweep, sweep_opts);
  sweep->add_option("--jobs", spec.jobs, "concurrent runs")->check(CLI::PositiveNumber)->capture_default_str();
  sweep->add_option("--phones-min", spec.phones_min)->capture_default_str();
  sweep->add_option("--phones-max", spec.phones_max)->capture_default_str();
  sweep->add_option("--phones-step", spec.phones_step)->capture_default_str();
  sweep->add_option("--msgs-min", spec.msgs_min)->capture_default_str();
  sweep->add_option("--msgs-max", spec.msgs_max)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) return cmd_run(run, run_opts);
  return cmd_sweep(sweep, sweep_opts, spec);
}
