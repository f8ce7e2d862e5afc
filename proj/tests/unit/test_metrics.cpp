#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sosnet/metrics.hpp"

using namespace sosnet;

namespace {

std::vector<Phone> alive_phones(std::size_t n) {
  std::vector<Phone> ps(n);
  for (PhoneId i = 0; i < n; ++i) ps[i].id = i;
  return ps;
}

}  // namespace

TEST_CASE("gini") {
  CHECK(metrics::gini(std::vector<double>{5, 5, 5, 5}) == 0.0);
  CHECK(metrics::gini(std::vector<double>{1, 0, 0, 0}) == doctest::Approx(0.75));
  CHECK(metrics::gini(std::vector<double>{1, 2, 3, 4}) == doctest::Approx(0.25));
  CHECK(metrics::gini(std::vector<double>{7}) == 0.0);
  CHECK(metrics::gini(std::vector<double>{0, 0, 0}) == 0.0);

  std::mt19937_64 g(1);
  std::uniform_real_distribution<double> u(0.0, 100.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> x(1 + g() % 50);
    for (double& v : x) v = u(g);
    const double gi = metrics::gini(x);
    CHECK(gi == doctest::Approx(oracle::gini_pairwise(x)).epsilon(1e-12));
    CHECK(gi >= 0.0);
    CHECK(gi <= 1.0 - 1.0 / double(x.size()) + 1e-12);
    std::vector<double> scaled = x;
    for (double& v : scaled) v *= 3.7;
    CHECK(metrics::gini(scaled) == doctest::Approx(gi).epsilon(1e-12));
  }
}

TEST_CASE("betweenness") {
  SUBCASE("star") {
    LinkGraph star(4);
    for (PhoneId v = 1; v < 4; ++v) star.add_edge(0, v);
    const auto bc = metrics::betweenness(star, alive_phones(4));
    CHECK(bc[0] == doctest::Approx(1.0));
    for (PhoneId v = 1; v < 4; ++v) CHECK(bc[v] == 0.0);
  }
  SUBCASE("path") {
    LinkGraph path(4);
    for (PhoneId v = 0; v < 3; ++v) path.add_edge(v, v + 1);
    const auto bc = metrics::betweenness(path, alive_phones(4));
    CHECK(bc[1] == doctest::Approx(2.0 / 3.0));
    CHECK(bc[2] == doctest::Approx(2.0 / 3.0));
    CHECK(bc[0] == 0.0);
  }
  SUBCASE("fewer than three alive") {
    LinkGraph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    auto ps = alive_phones(3);
    ps[2].alive = false;
    for (double v : metrics::betweenness(g, ps)) CHECK(v == 0.0);
  }
  SUBCASE("dead phones are ignored") {
    LinkGraph g(5);
    for (PhoneId v = 1; v < 4; ++v) g.add_edge(0, v);
    auto ps = alive_phones(5);
    ps[4].alive = false;
    CHECK(metrics::betweenness(g, ps)[0] == doctest::Approx(1.0));
  }
  SUBCASE("small random graphs against path enumeration") {
    std::mt19937_64 g(2);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 3 + g() % 6;
      const auto graph = oracle::random_graph(n, 0.45, g);
      const auto fast = metrics::betweenness_raw(graph, alive_phones(n));
      const auto slow = oracle::betweenness_paths(graph);
      for (std::size_t v = 0; v < n; ++v) CHECK(fast[v] == doctest::Approx(slow[v]).epsilon(1e-12));
    }
  }
  SUBCASE("random trees against branch sizes") {
    std::mt19937_64 g(4);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t n = 3 + g() % 198;
      const auto tree = oracle::random_tree(n, g);
      const auto fast = metrics::betweenness_raw(tree, alive_phones(n));
      const auto closed = oracle::tree_betweenness(tree);
      for (std::size_t v = 0; v < n; ++v) CHECK(std::fabs(fast[v] - closed[v]) <= 1e-9 * (1 + closed[v]));
    }
  }
}

TEST_CASE("participation") {
  LinkGraph g(4);
  g.add_edge(0, 1);
  auto ps = alive_phones(4);
  auto p = metrics::participation(g, ps);
  CHECK(p.alive == 1.0);
  CHECK(p.connected == 0.5);
  for (auto& ph : ps) ph.alive = false;
  p = metrics::participation(LinkGraph(4), ps);
  CHECK(p.alive == 0.0);
  CHECK(p.connected == 0.0);
}

TEST_CASE("longevity") {
  std::vector<metrics::SeriesPoint> flat, drop;
  for (int h = 0; h <= 72; ++h) {
    flat.push_back({double(h), 1.0});
    drop.push_back({double(h), h < 30 ? 1.0 : 0.4});
  }
  CHECK(metrics::longevity(flat, 0.5, 72) == 72);
  CHECK(metrics::longevity(drop, 0.5, 72) == 30);
  CHECK(metrics::longevity(drop, 0.3, 72) == 72);
}

TEST_CASE("spearman and cv") {
  const std::vector<double> a{1, 2, 3, 4, 5};
  CHECK(metrics::spearman(a, std::vector<double>{10, 20, 30, 40, 50}) == doctest::Approx(1.0));
  CHECK(metrics::spearman(a, std::vector<double>{5, 4, 3, 2, 1}) == doctest::Approx(-1.0));
  CHECK(metrics::spearman(a, std::vector<double>{1, 1, 1, 1, 1}) == 0.0);
  // Ties take average ranks: ranks (1.5, 1.5, 3) vs (1, 2, 3).
  CHECK(metrics::spearman(std::vector<double>{1, 1, 2}, std::vector<double>{1, 2, 3}) ==
        doctest::Approx(0.8660254037844386));
  CHECK(metrics::coefficient_of_variation(std::vector<double>{2, 4, 4, 4, 5, 5, 7, 9}) ==
        doctest::Approx(0.4));
  CHECK(metrics::coefficient_of_variation(std::vector<double>{0, 0}) == 0.0);
}
