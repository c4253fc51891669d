#pragma once

#include <chrono>
#include <cstdint>

#include "sumcolor/coloring.hpp"
#include "sumcolor/graph.hpp"

namespace sumcolor {

struct ExactOptions {
  std::chrono::milliseconds budget{10000};
  /// Largest color tried; 0 means 2*Delta - 1, which always contains an optimum.
  int color_cap = 0;
  /// Larger inputs are rejected with PreconditionError.
  int max_edges = 64;
};

struct ExactResult {
  std::int64_t sum = 0;
  EdgeColoring coloring;
  /// False when the budget ran out; sum is then the best coloring found.
  bool optimal = false;
  std::uint64_t nodes_expanded = 0;
  int colors_used = 0;
  int color_cap = 0;
};

/// Minimum sum of a proper edge coloring by depth-first branch and bound.
///
/// Edges are branched in order of decreasing d(u)+d(v), colors ascending.
/// A node is pruned against the best of three admissible completions:
/// per-vertex smallest free colors (halved), per-color matching capacity,
/// and per-edge smallest common free color.
ExactResult exact_sum(const Graph& g, const ExactOptions& options = {});

/// ceil(sum_v d(v)(d(v)+1)/4).
std::int64_t general_lower_bound(const Graph& g);

/// sum over vertices u on `side` of d(u)(d(u)+1)/2, i.e. sum_i i*|side_{>=i}|.
std::int64_t bipartite_onesided_lower_bound(const Graph& g, const Bipartition& bp, Side side);

enum class SequentialTargets { USide, AllVertices };

/// Whether g has a proper Delta-coloring that is sequential on the targets.
/// Backtracking search; for Delta = 3 this decides the U-sequential and
/// V(G)-sequential 3-coloring questions.
bool decide_sequential(const Graph& g, const Bipartition& bp, SequentialTargets targets);

}  // namespace sumcolor
