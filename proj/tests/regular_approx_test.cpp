#include <gtest/gtest.h>

#include "oracle.hpp"
#include "sumcolor/errors.hpp"
#include "sumcolor/generators.hpp"
#include "sumcolor/regular_approx.hpp"
#include "sumcolor/sequential.hpp"

namespace sumcolor {
namespace {

TEST(RegularBounds, ClosedForms) {
  EXPECT_EQ(regular_lower_bound(10, 3), Rational(30));
  EXPECT_EQ(regular_lower_bound(4, 3), Rational(12));
  EXPECT_EQ(regular_lower_bound(1, 0), Rational(0));
  EXPECT_EQ(regular_formula_upper(10, 3), Rational(165, 4));
  EXPECT_EQ(regular_formula_upper(4, 3), Rational(33, 2));
  EXPECT_EQ(regular_ratio_bound(3), Rational(11, 8));
  EXPECT_EQ(regular_ratio_bound(1), Rational(3, 2));
}

TEST(RegularBounds, RatioIsUpperOverLowerAndDecreasesFromThree) {
  for (std::int64_t r = 1; r <= 30; ++r) {
    EXPECT_EQ(regular_formula_upper(12, r) / regular_lower_bound(12, r), regular_ratio_bound(r));
    if (r >= 3) EXPECT_LT(regular_ratio_bound(r + 1), regular_ratio_bound(r));
  }
}

TEST(ApproxSumRegular, Petersen) {
  const ApproxReport rep = approx_sum_regular(gen_petersen());
  EXPECT_EQ(rep.n, 10);
  EXPECT_EQ(rep.r, 3);
  EXPECT_EQ(rep.lower_bound, Rational(30));
  EXPECT_EQ(rep.formula_upper, Rational(165, 4));
  EXPECT_EQ(rep.ratio_bound, Rational(11, 8));
  EXPECT_TRUE(rep.hard_regime);
  EXPECT_LE(Rational(rep.achieved_sum), rep.formula_upper);
  EXPECT_GE(rep.sequential_set_size(), 3);
}

TEST(ApproxSumRegular, SmallRegularGraphs) {
  const ApproxReport k4 = approx_sum_regular(gen_complete(4));
  EXPECT_EQ(k4.formula_upper, Rational(33, 2));
  EXPECT_LE(k4.achieved_sum, 16);
  EXPECT_GE(k4.achieved_sum, 12);

  const GraphDocument k33 = generate_from_spec("complete-bipartite:3,3", 0);
  EXPECT_EQ(approx_sum_regular(k33.graph).achieved_sum, 18);

  const ApproxReport c5 = approx_sum_regular(gen_cycle(5));
  EXPECT_FALSE(c5.hard_regime);
  EXPECT_LE(Rational(c5.achieved_sum), c5.formula_upper);
}

TEST(ApproxSumRegular, RejectsIrregularOrEdgeless) {
  EXPECT_THROW(approx_sum_regular(gen_path(3)), PreconditionError);
  EXPECT_THROW(approx_sum_regular(Graph(3, {})), PreconditionError);
}

TEST(ApproxSumRegular, SandwichOnRandomRegularGraphs) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int r = 2 + static_cast<int>(seed % 4);
    const int n = 6 + 2 * static_cast<int>(seed % 4);
    const Graph g = gen_random_regular(n, r, seed);
    const ApproxReport rep = approx_sum_regular(g);
    EXPECT_TRUE(is_proper(g, rep.coloring));
    EXPECT_EQ(rep.coloring.sum(), rep.achieved_sum);
    EXPECT_LE(Rational(rep.achieved_sum), rep.formula_upper);
    EXPECT_GE(Rational(rep.achieved_sum), rep.lower_bound);
    EXPECT_TRUE(is_sequential(g, rep.coloring, rep.sequential_vertices));
  }
}

TEST(ApproxSumRegular, SumMeetsLowerBoundOnlyWithRColors) {
  // nr(r+1)/4 is reached exactly when every vertex sees 1..r.
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 6 + 2 * static_cast<int>(seed % 3);
    const Graph g = gen_random_regular(n, 3, seed);
    const ApproxReport rep = approx_sum_regular(g);
    EXPECT_EQ(Rational(rep.achieved_sum) == rep.lower_bound, rep.coloring.max_color() == 3);
  }
}

TEST(CompleteGraphSum, ClosedForm) {
  EXPECT_EQ(kn_exact_sum(1), 0);
  EXPECT_EQ(kn_exact_sum(2), 1);
  EXPECT_EQ(kn_exact_sum(3), 6);
  EXPECT_EQ(kn_exact_sum(4), 12);
  EXPECT_EQ(kn_exact_sum(5), 30);
  EXPECT_EQ(kn_exact_sum(6), 45);
  EXPECT_EQ(kn_exact_sum(7), 84);
  EXPECT_THROW(kn_exact_sum(0), std::invalid_argument);
}

TEST(CompleteGraphSum, OptimalColoringMatchesBruteForce) {
  for (int n = 2; n <= 5; ++n) {
    const Graph kn = gen_complete(n);
    const EdgeColoring c = kn_optimal_coloring(n);
    EXPECT_TRUE(is_proper(kn, c));
    EXPECT_EQ(c.sum(), kn_exact_sum(n));
    EXPECT_EQ(testing::brute_force_min_sum(kn, 2 * kn.max_degree() - 1 > 0 ? 2 * kn.max_degree() - 1 : 1),
              kn_exact_sum(n));
  }
}

}  // namespace
}  // namespace sumcolor
