#include <string>
#include <vector>

#include "doctest.h"
#include "sosnet/sosnet.h"

TEST_CASE("scenario handle") {
  sosnet_scenario* s = nullptr;
  REQUIRE(sosnet_scenario_create(&s) == SOSNET_OK);
  char buf[64];
  size_t needed = 0;
  CHECK(sosnet_scenario_get(s, "phones", buf, sizeof buf, &needed) == SOSNET_OK);
  CHECK(std::string(buf) == "500");
  CHECK(needed == 4);
  CHECK(sosnet_scenario_get(s, "phones", buf, 2, &needed) == SOSNET_ERR_BUFFER_TOO_SMALL);

  CHECK(sosnet_scenario_set(s, "phones", "abc") == SOSNET_ERR_INVALID_ARGUMENT);
  CHECK(std::string(sosnet_last_error()).find("phones") != std::string::npos);
  CHECK(sosnet_scenario_set(s, "nope", "1") == SOSNET_ERR_INVALID_ARGUMENT);
  CHECK(sosnet_scenario_set(s, "range", "20") == SOSNET_OK);
  CHECK(sosnet_scenario_validate(s) == SOSNET_ERR_INVALID_CONFIG);
  sosnet_run* r = nullptr;
  CHECK(sosnet_run_create(s, &r) == SOSNET_ERR_INVALID_CONFIG);
  CHECK(r == nullptr);
  CHECK(sosnet_scenario_load(s, "/nonexistent/scenario.txt") == SOSNET_ERR_IO);

  CHECK(sosnet_scenario_set(nullptr, "phones", "1") == SOSNET_ERR_INVALID_ARGUMENT);
  CHECK(sosnet_scenario_create(nullptr) == SOSNET_ERR_INVALID_ARGUMENT);
  sosnet_scenario_destroy(s);
  sosnet_scenario_destroy(nullptr);
}

TEST_CASE("run handle") {
  sosnet_scenario* s = nullptr;
  REQUIRE(sosnet_scenario_create(&s) == SOSNET_OK);
  sosnet_scenario_set(s, "phones", "100");
  sosnet_scenario_set(s, "hours", "1");
  sosnet_run* r = nullptr;
  REQUIRE(sosnet_run_create(s, &r) == SOSNET_OK);
  CHECK(sosnet_run_phone_count(r) == 100);

  std::vector<uint32_t> deg(100);
  CHECK(sosnet_run_degrees(r, deg.data(), deg.size()) == SOSNET_OK);
  unsigned edges2 = 0;
  for (auto d : deg) edges2 += d;
  CHECK(edges2 > 0);  // SOS bootstrapped
  std::vector<double> bat(99);
  CHECK(sosnet_run_batteries(r, bat.data(), bat.size()) == SOSNET_ERR_BUFFER_TOO_SMALL);

  CHECK(sosnet_run_write(r, "/tmp/unused", 0) == SOSNET_ERR_STATE);
  CHECK(sosnet_run_step(r, 10) == SOSNET_OK);
  CHECK_FALSE(sosnet_run_done(r));
  CHECK(sosnet_run_finish(r) == SOSNET_OK);
  CHECK(sosnet_run_done(r));

  sosnet_summary sum;
  REQUIRE(sosnet_run_summary(r, &sum) == SOSNET_OK);
  CHECK(sum.ticks_done == 60);
  CHECK(sum.n_snapshots == 5);
  CHECK(sum.longevity_h == 1.0);
  CHECK(sum.ledger_initial == doctest::Approx(sum.ledger_remaining + sum.ledger_spent));
  CHECK(sum.msgs_delivered > 0);
  sosnet_run_destroy(r);
  sosnet_scenario_destroy(s);
}

TEST_CASE("status strings") {
  CHECK(std::string(sosnet_status_string(SOSNET_OK)) == "ok");
  CHECK(std::string(sosnet_status_string(SOSNET_ERR_EXISTS)) == "output exists");
  CHECK(std::string(sosnet_version()) == "0.1.0");
  sosnet_sweep_spec spec;
  sosnet_sweep_spec_default(&spec);
  CHECK(spec.phones_min == 100);
  CHECK(spec.phones_max == 800);
  CHECK(spec.msgs_max == 10);
  CHECK(spec.n_seeds == 3);
}
