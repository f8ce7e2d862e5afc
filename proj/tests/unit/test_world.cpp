#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "sosnet/world.hpp"

using namespace sosnet;

TEST_CASE("torus distance") {
  const WorldConfig cfg;
  CHECK(torus_distance({3, 3}, {3, 3}, cfg) == 0.0);
  CHECK(torus_distance({0, 0}, {24, 0}, cfg) == doctest::Approx(1.0));
  CHECK(torus_distance({1, 2}, {20, 22}, cfg) == doctest::Approx(std::sqrt(61.0)));
  CHECK(torus_distance({1, 2}, {20, 22}, cfg) ==
        doctest::Approx(oracle::torus_distance_images({1, 2}, {20, 22}, 25, 25)));

  std::mt19937_64 g(7);
  std::uniform_real_distribution<double> u(0.0, 25.0);
  for (int i = 0; i < 2000; ++i) {
    const Position a{u(g), u(g)}, b{u(g), u(g)}, c{u(g), u(g)};
    const double ab = torus_distance(a, b, cfg);
    CHECK(ab == doctest::Approx(oracle::torus_distance_images(a, b, 25, 25)).epsilon(1e-12));
    CHECK(ab == torus_distance(b, a, cfg));
    CHECK(torus_distance(a, c, cfg) <= ab + torus_distance(b, c, cfg) + 1e-12);
  }
}

TEST_CASE("wrap keeps positions inside the world") {
  const WorldConfig cfg;
  const Position p = wrap({-0.5, 25.0}, cfg);
  CHECK(p.x == doctest::Approx(24.5));
  CHECK(p.y == doctest::Approx(0.0));
  const Position q = wrap({51.0, -26.0}, cfg);
  CHECK(q.x == doctest::Approx(1.0));
  CHECK(q.y == doctest::Approx(24.0));
}

TEST_CASE("config validation") {
  WorldConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.tx_range = -1;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.n_phones = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.msg_period_ticks = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("neighbors in range") {
  SUBCASE("single phone") {
    auto w = fixture::world({{5, 5, 10}});
    CHECK(w.neighbors_in_range(0).empty());
  }
  SUBCASE("boundary is inclusive") {
    auto w = fixture::world({{1, 1, 10}, {6, 1, 10}});
    CHECK(w.neighbors_in_range(0) == std::vector<PhoneId>{1});
    CHECK(w.neighbors_in_range(1) == std::vector<PhoneId>{0});
  }
  SUBCASE("across the wrap") {
    auto w = fixture::world({{0.5, 12, 10}, {24.5, 12, 10}});
    CHECK(w.neighbors_in_range(0) == std::vector<PhoneId>{1});
  }
  SUBCASE("dead phones are not neighbors") {
    auto w = fixture::world({{1, 1, 10}, {2, 1, 0}});
    CHECK(w.neighbors_in_range(0).empty());
  }
  SUBCASE("random placements match the all-pairs filter") {
    std::mt19937_64 g(11);
    for (double range : {1.0, 5.0, 9.0, 12.0}) {
      for (std::size_t n : {20u, 200u}) {
        std::uniform_real_distribution<double> u(0.0, 25.0);
        std::vector<fixture::Placed> ps;
        for (std::size_t i = 0; i < n; ++i) ps.push_back({u(g), u(g), 10});
        WorldConfig cfg;
        cfg.tx_range = range;
        auto w = fixture::world(ps, cfg);
        for (PhoneId p = 0; p < n; ++p) {
          std::vector<PhoneId> expect;
          for (PhoneId q = 0; q < n; ++q)
            if (q != p && oracle::torus_distance_images(w.phones[p].pos, w.phones[q].pos, 25,
                                                        25) <= range)
              expect.push_back(q);
          CHECK(w.neighbors_in_range(p) == expect);
        }
      }
    }
  }
}

TEST_CASE("link graph") {
  LinkGraph g(5);
  CHECK(g.add_edge(3, 1));
  CHECK_FALSE(g.add_edge(1, 3));
  CHECK(g.add_edge(1, 0));
  CHECK(g.add_edge(1, 4));
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(3, 1));
  CHECK(std::vector<PhoneId>(g.neighbors(1).begin(), g.neighbors(1).end()) ==
        std::vector<PhoneId>{0, 3, 4});
  CHECK(g.edges() == std::vector<std::pair<PhoneId, PhoneId>>{{0, 1}, {1, 3}, {1, 4}});
  CHECK_THROWS(g.add_edge(2, 2));
  CHECK(g.isolate(1) == std::vector<PhoneId>{0, 3, 4});
  CHECK(g.edge_count() == 0);
  CHECK(g.degree(3) == 0);
  CHECK_FALSE(g.remove_edge(0, 1));
}

TEST_CASE("component labels") {
  std::mt19937_64 g(3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 30;
    auto graph = oracle::random_graph(n, 0.06, g);
    CHECK(component_minima(graph) == oracle::component_labels(graph));

    std::vector<Phone> phones(n);
    for (PhoneId i = 0; i < n; ++i) phones[i].id = phones[i].network_id = i;
    std::vector<PhoneId> all(n);
    for (PhoneId i = 0; i < n; ++i) all[i] = i;
    relabel_components(phones, graph, all);
    const auto expect = oracle::component_labels(graph);
    for (PhoneId i = 0; i < n; ++i) CHECK(phones[i].network_id == expect[i]);

    const auto distinct = std::set<PhoneId>(expect.begin(), expect.end()).size();
    CHECK(count_components(graph, phones) == distinct);
  }
}
