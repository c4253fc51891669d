#include "sumcolor/regular_approx.hpp"

#include <stdexcept>

#include "sumcolor/kernels.hpp"
#include "sumcolor/sequential.hpp"

namespace sumcolor {

Rational regular_lower_bound(std::int64_t n, std::int64_t r) {
  return {n * r * (r + 1), 4};
}

Rational regular_formula_upper(std::int64_t n, std::int64_t r) {
  return {n * r * (r * r + 4 * r + 1), 4 * (r + 1)};
}

Rational regular_ratio_bound(std::int64_t r) {
  return Rational(1) + Rational(2 * r, (r + 1) * (r + 1));
}

ApproxReport approx_sum_regular(const Graph& g) {
  const auto r = g.regular_degree();
  if (!r) throw PreconditionError("regularity required");
  if (*r < 1) throw PreconditionError("regularity required: r >= 1");

  SequentialResult seq = swap_to_sequential(g, vizing_color(g));
  ApproxReport rep;
  rep.n = g.vertex_count();
  rep.r = *r;
  rep.achieved_sum = seq.coloring.sum();
  rep.coloring = std::move(seq.coloring);
  rep.sequential_vertices = std::move(seq.sequential_vertices);
  rep.lower_bound = regular_lower_bound(rep.n, rep.r);
  rep.formula_upper = regular_formula_upper(rep.n, rep.r);
  rep.ratio_bound = regular_ratio_bound(rep.r);
  rep.hard_regime = rep.r >= 3;

  const std::int64_t min_r = (rep.n + rep.r) / (rep.r + 1);
  if (!is_sequential(g, rep.coloring, rep.sequential_vertices) ||
      rep.sequential_set_size() < min_r || Rational(rep.achieved_sum) > rep.formula_upper ||
      Rational(rep.achieved_sum) < rep.lower_bound) {
    throw InternalError("approximation report failed its own audit");
  }
  return rep;
}

std::int64_t kn_exact_sum(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  return n % 2 == 1 ? n * (n * n - 1) / 4 : (n - 1) * n * n / 4;
}

EdgeColoring kn_optimal_coloring(int n) {
  return clique_factorization(n, 0).coloring;
}

}  // namespace sumcolor
