#pragma once

// Slow reference implementations used to check the fast ones.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "sosnet/world.hpp"

namespace oracle {

using sosnet::LinkGraph;
using sosnet::PhoneId;

// Σᵢ Σⱼ |xᵢ − xⱼ| / (2 n² x̄)
inline double gini_pairwise(const std::vector<double>& x) {
  const double n = static_cast<double>(x.size());
  double total = 0.0;
  for (double v : x) total += v;
  if (x.size() < 2 || total == 0.0) return 0.0;
  double sum = 0.0;
  for (double a : x)
    for (double b : x) sum += std::fabs(a - b);
  return sum / (2.0 * n * n * (total / n));
}

// Minimum over the 9 translated images of b.
inline double torus_distance_images(sosnet::Position a, sosnet::Position b, double w, double h) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = -1; i <= 1; ++i)
    for (int j = -1; j <= 1; ++j) {
      const double dx = a.x - (b.x + i * w);
      const double dy = a.y - (b.y + j * h);
      best = std::min(best, std::sqrt(dx * dx + dy * dy));
    }
  return best;
}

// Every simple path from s to t, as phone sequences.
inline void simple_paths(const LinkGraph& g, PhoneId s, PhoneId t,
                         std::vector<std::vector<PhoneId>>& out) {
  std::vector<PhoneId> path{s};
  std::vector<char> on(g.node_count(), 0);
  on[s] = 1;
  std::function<void(PhoneId)> dfs = [&](PhoneId u) {
    if (u == t) {
      out.push_back(path);
      return;
    }
    for (PhoneId w : g.neighbors(u)) {
      if (on[w]) continue;
      on[w] = 1;
      path.push_back(w);
      dfs(w);
      path.pop_back();
      on[w] = 0;
    }
  };
  dfs(s);
}

inline std::size_t min_hops(const LinkGraph& g, PhoneId s, PhoneId t) {
  std::vector<std::vector<PhoneId>> paths;
  simple_paths(g, s, t, paths);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& p : paths) best = std::min(best, p.size() - 1);
  return best;
}

// Raw betweenness by enumerating every shortest path of every unordered pair.
inline std::vector<double> betweenness_paths(const LinkGraph& g) {
  const std::size_t n = g.node_count();
  std::vector<double> bc(n, 0.0);
  for (PhoneId s = 0; s < n; ++s)
    for (PhoneId t = s + 1; t < n; ++t) {
      std::vector<std::vector<PhoneId>> paths;
      simple_paths(g, s, t, paths);
      if (paths.empty()) continue;
      std::size_t best = std::numeric_limits<std::size_t>::max();
      for (const auto& p : paths) best = std::min(best, p.size());
      std::vector<double> through(n, 0.0);
      double count = 0.0;
      for (const auto& p : paths) {
        if (p.size() != best) continue;
        count += 1.0;
        for (std::size_t i = 1; i + 1 < p.size(); ++i) through[p[i]] += 1.0;
      }
      for (PhoneId v = 0; v < n; ++v) bc[v] += through[v] / count;
    }
  return bc;
}

// Raw betweenness on a tree: pairs whose endpoints sit in different branches
// at v, i.e. Σ over branch pairs of size products.
inline std::vector<double> tree_betweenness(const LinkGraph& tree) {
  const std::size_t n = tree.node_count();
  std::vector<std::size_t> parent(n, n), order, size(n, 1);
  std::vector<char> seen(n, 0);
  order.reserve(n);
  order.push_back(0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (PhoneId w : tree.neighbors(static_cast<PhoneId>(order[i])))
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = order[i];
        order.push_back(w);
      }
  for (std::size_t i = order.size(); i-- > 1;) size[parent[order[i]]] += size[order[i]];

  std::vector<double> bc(n, 0.0);
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<double> branches;
    for (PhoneId w : tree.neighbors(static_cast<PhoneId>(v)))
      branches.push_back(w == parent[v] ? double(n - size[v]) : double(size[w]));
    double sum = 0.0, acc = 0.0;
    for (double b : branches) {
      sum += acc * b;
      acc += b;
    }
    bc[v] = sum;
  }
  return bc;
}

inline LinkGraph random_graph(std::size_t n, double p, std::mt19937_64& g) {
  LinkGraph graph(n);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (PhoneId a = 0; a < n; ++a)
    for (PhoneId b = a + 1; b < n; ++b)
      if (u(g) < p) graph.add_edge(a, b);
  return graph;
}

// Uniform random recursive tree.
inline LinkGraph random_tree(std::size_t n, std::mt19937_64& g) {
  LinkGraph t(n);
  for (PhoneId v = 1; v < n; ++v) {
    std::uniform_int_distribution<PhoneId> pick(0, v - 1);
    t.add_edge(v, pick(g));
  }
  return t;
}

// Component minima by repeated DFS.
inline std::vector<PhoneId> component_labels(const LinkGraph& g) {
  const std::size_t n = g.node_count();
  std::vector<PhoneId> label(n, std::numeric_limits<PhoneId>::max());
  for (PhoneId s = 0; s < n; ++s) {
    if (label[s] != std::numeric_limits<PhoneId>::max()) continue;
    std::vector<PhoneId> stack{s};
    label[s] = s;
    while (!stack.empty()) {
      const PhoneId u = stack.back();
      stack.pop_back();
      for (PhoneId w : g.neighbors(u))
        if (label[w] != s) {
          label[w] = s;
          stack.push_back(w);
        }
    }
  }
  return label;
}

// True if the graph has a cycle (DFS with parent tracking).
inline bool has_cycle(const LinkGraph& g) {
  const std::size_t n = g.node_count();
  std::vector<char> seen(n, 0);
  for (PhoneId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::pair<PhoneId, PhoneId>> stack{{s, s}};
    while (!stack.empty()) {
      auto [u, from] = stack.back();
      stack.pop_back();
      if (seen[u]) return true;
      seen[u] = 1;
      for (PhoneId w : g.neighbors(u))
        if (w != from) stack.push_back({w, u});
    }
  }
  return false;
}

}  // namespace oracle
