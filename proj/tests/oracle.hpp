#pragma once

// Test-only oracles. Nothing here calls into the solver or the constructions
// under test: plain enumeration over small graphs.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "sumcolor/graph.hpp"

namespace sumcolor::testing {

/// Minimum color sum over all proper colorings with colors in [1, cap],
/// by unpruned enumeration of every assignment that stays proper.
inline std::int64_t brute_force_min_sum(const Graph& g, int cap) {
  const int m = g.edge_count();
  std::vector<int> color(static_cast<std::size_t>(m), 0);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  auto clashes = [&](EdgeId e, int c) {
    for (Vertex x : {g.edge(e).u, g.edge(e).v}) {
      for (const Incidence& inc : g.incident(x)) {
        if (inc.edge < e && color[static_cast<std::size_t>(inc.edge)] == c) return true;
      }
    }
    return false;
  };
  auto rec = [&](auto&& self, EdgeId e, std::int64_t partial) -> void {
    if (e == m) {
      best = std::min(best, partial);
      return;
    }
    for (int c = 1; c <= cap; ++c) {
      if (clashes(e, c)) continue;
      color[static_cast<std::size_t>(e)] = c;
      self(self, e + 1, partial + c);
    }
    color[static_cast<std::size_t>(e)] = 0;
  };
  rec(rec, 0, 0);
  return best;
}

/// Edge sets of all perfect matchings of g.
inline std::vector<std::vector<EdgeId>> perfect_matchings(const Graph& g) {
  std::vector<std::vector<EdgeId>> out;
  std::vector<bool> covered(static_cast<std::size_t>(g.vertex_count()), false);
  std::vector<EdgeId> chosen;
  auto rec = [&](auto&& self) -> void {
    Vertex first = -1;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (!covered[static_cast<std::size_t>(v)]) {
        first = v;
        break;
      }
    }
    if (first == -1) {
      out.push_back(chosen);
      return;
    }
    for (const Incidence& inc : g.incident(first)) {
      if (covered[static_cast<std::size_t>(inc.neighbor)]) continue;
      covered[static_cast<std::size_t>(first)] = covered[static_cast<std::size_t>(inc.neighbor)] = true;
      chosen.push_back(inc.edge);
      self(self);
      chosen.pop_back();
      covered[static_cast<std::size_t>(first)] = covered[static_cast<std::size_t>(inc.neighbor)] = false;
    }
  };
  rec(rec);
  return out;
}

/// G(n, p) sample for property tests.
inline Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.push_back({i, j});
    }
  }
  return Graph(n, std::move(edges));
}

/// Random bipartite graph with sides of size a and b (U first).
inline GraphDocument random_bipartite(int a, int b, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) {
      if (coin(rng)) edges.push_back({i, a + j});
    }
  }
  Bipartition bp;
  bp.part_of.assign(static_cast<std::size_t>(a), Side::U);
  bp.part_of.insert(bp.part_of.end(), static_cast<std::size_t>(b), Side::W);
  return {Graph(a + b, std::move(edges)), std::move(bp), {}};
}

}  // namespace sumcolor::testing
