#pragma once

#include <cstdint>
#include <vector>

#include "sumcolor/coloring.hpp"
#include "sumcolor/graph.hpp"
#include "sumcolor/rational.hpp"

namespace sumcolor {

struct ApproxReport {
  int n = 0;
  int r = 0;
  EdgeColoring coloring;
  std::vector<Vertex> sequential_vertices;
  std::int64_t achieved_sum = 0;
  Rational lower_bound;    // nr(r+1)/4
  Rational formula_upper;  // nr(r^2+4r+1)/(4(r+1))
  Rational ratio_bound;    // 1 + 2r/(r+1)^2
  /// r >= 3, where the exact problem is NP-hard. Smaller r still runs.
  bool hard_regime = false;

  int sequential_set_size() const { return static_cast<int>(sequential_vertices.size()); }
};

/// Sum-of-colors lower bound for any r-regular graph on n vertices.
Rational regular_lower_bound(std::int64_t n, std::int64_t r);
/// Worst-case sum guaranteed by approx_sum_regular.
Rational regular_formula_upper(std::int64_t n, std::int64_t r);
Rational regular_ratio_bound(std::int64_t r);

/// Approximate minimum-sum edge coloring of an r-regular graph (r >= 1):
/// a Delta+1 coloring is recolored to be sequential on the vertices missing
/// the most common color. Throws PreconditionError("regularity required").
ApproxReport approx_sum_regular(const Graph& g);

/// Edge-chromatic sum of K_n.
std::int64_t kn_exact_sum(std::int64_t n);

/// Optimal coloring of K_n (edges in gen_complete order). Throws
/// std::invalid_argument for n < 2.
EdgeColoring kn_optimal_coloring(int n);

}  // namespace sumcolor
