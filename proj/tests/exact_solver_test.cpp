#include <gtest/gtest.h>

#include <algorithm>

#include "oracle.hpp"
#include "sumcolor/errors.hpp"
#include "sumcolor/exact_solver.hpp"
#include "sumcolor/generators.hpp"

namespace sumcolor {
namespace {

TEST(ExactSum, SmallGraphs) {
  EXPECT_EQ(exact_sum(gen_complete(3)).sum, 6);
  EXPECT_EQ(exact_sum(gen_complete(4)).sum, 12);
  EXPECT_EQ(exact_sum(gen_cycle(5)).sum, 9);
  const ExactResult empty = exact_sum(Graph(4, {}));
  EXPECT_EQ(empty.sum, 0);
  EXPECT_TRUE(empty.optimal);
}

TEST(ExactSum, PetersenMatchesMatchingArgument) {
  const Graph p = gen_petersen();
  const auto matchings = testing::perfect_matchings(p);
  ASSERT_EQ(matchings.size(), 6u);
  // Any two perfect matchings share an edge, so at most one color class has
  // five edges; the rest hold at most four. Cheapest split of 15 edges:
  // 5, 4, 4, 2.
  for (std::size_t a = 0; a < matchings.size(); ++a) {
    for (std::size_t b = a + 1; b < matchings.size(); ++b) {
      const bool share = std::any_of(matchings[a].begin(), matchings[a].end(), [&](EdgeId e) {
        return std::find(matchings[b].begin(), matchings[b].end(), e) != matchings[b].end();
      });
      EXPECT_TRUE(share);
    }
  }
  const std::int64_t matching_bound = 1 * 5 + 2 * 4 + 3 * 4 + 4 * 2;
  const ExactResult r = exact_sum(p);
  EXPECT_TRUE(r.optimal);
  EXPECT_EQ(r.sum, matching_bound);
  EXPECT_EQ(r.sum, 33);
  EXPECT_TRUE(is_proper(p, r.coloring));
}

TEST(ExactSum, AgreesWithBruteForce) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const int n = 3 + static_cast<int>(seed % 4);
    const Graph g = testing::random_graph(n, 0.55, seed);
    if (g.edge_count() == 0 || g.edge_count() > 9) continue;
    const ExactResult r = exact_sum(g);
    ASSERT_TRUE(r.optimal);
    EXPECT_TRUE(is_proper(g, r.coloring));
    EXPECT_EQ(r.coloring.sum(), r.sum);
    EXPECT_EQ(r.sum, testing::brute_force_min_sum(g, 2 * g.max_degree() - 1)) << "seed " << seed;
    EXPECT_GE(r.sum, general_lower_bound(g));
  }
}

TEST(ExactSum, DefaultCapLosesNothing) {
  // Colors above 2*Delta-1 never help: compare against an uncapped search.
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = testing::random_graph(5, 0.5, seed);
    if (g.edge_count() == 0 || g.edge_count() > 6) continue;
    EXPECT_EQ(exact_sum(g).sum, testing::brute_force_min_sum(g, g.edge_count())) << "seed " << seed;
  }
}

TEST(ExactSum, CapOneAboveDefaultNeverImproves) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = testing::random_graph(7, 0.45, seed);
    if (g.edge_count() == 0) continue;
    ExactOptions wide;
    wide.color_cap = 2 * g.max_degree();
    const ExactResult base = exact_sum(g);
    const ExactResult r = exact_sum(g, wide);
    ASSERT_TRUE(base.optimal && r.optimal);
    EXPECT_EQ(r.sum, base.sum) << "seed " << seed;
    EXPECT_EQ(base.color_cap, 2 * g.max_degree() - 1);
  }
}

TEST(ExactSum, ExhaustedBudgetStillReturnsAColoring) {
  ExactOptions opts;
  opts.budget = std::chrono::milliseconds(0);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph g = gen_random_regular(16, 5, seed);
    const ExactResult r = exact_sum(g, opts);
    EXPECT_TRUE(is_proper(g, r.coloring));
    EXPECT_EQ(r.coloring.sum(), r.sum);
    EXPECT_GE(r.sum, general_lower_bound(g));
  }
}

TEST(ExactSum, Limits) {
  ExactOptions opts;
  opts.max_edges = 2;
  EXPECT_THROW(exact_sum(gen_complete(3), opts), PreconditionError);
  ExactOptions cap;
  cap.color_cap = 64;
  EXPECT_THROW(exact_sum(gen_complete(3), cap), PreconditionError);
}

TEST(LowerBounds, Examples) {
  EXPECT_EQ(general_lower_bound(gen_cycle(4)), 6);
  EXPECT_EQ(general_lower_bound(gen_complete(4)), 12);
  EXPECT_EQ(general_lower_bound(Graph(3, {})), 0);

  const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_EQ(bipartite_onesided_lower_bound(star, {{Side::U, Side::W, Side::W, Side::W}}, Side::U), 6);
  EXPECT_EQ(bipartite_onesided_lower_bound(star, {{Side::U, Side::W, Side::W, Side::W}}, Side::W), 3);
  const GraphDocument k33 = generate_from_spec("complete-bipartite:3,3", 0);
  EXPECT_EQ(bipartite_onesided_lower_bound(k33.graph, *k33.bipartition, Side::U), 18);
}

TEST(DecideSequential, Examples) {
  const GraphDocument k33 = generate_from_spec("complete-bipartite:3,3", 0);
  EXPECT_TRUE(decide_sequential(k33.graph, *k33.bipartition, SequentialTargets::USide));
  EXPECT_TRUE(decide_sequential(k33.graph, *k33.bipartition, SequentialTargets::AllVertices));

  // Three degree-one U vertices all need color 1 at the same W vertex.
  const Graph claw(4, {{0, 3}, {1, 3}, {2, 3}});
  const Bipartition bp{{Side::U, Side::U, Side::U, Side::W}};
  EXPECT_FALSE(decide_sequential(claw, bp, SequentialTargets::USide));
  EXPECT_FALSE(decide_sequential(claw, bp, SequentialTargets::AllVertices));

  const Graph c6 = gen_cycle(6);
  const Bipartition alt{{Side::U, Side::W, Side::U, Side::W, Side::U, Side::W}};
  EXPECT_TRUE(decide_sequential(c6, alt, SequentialTargets::AllVertices));
}

TEST(DecideSequential, AgreesWithBruteForceOnSmallGraphs) {
  // U-sequential exists iff the optimum reaches the one-sided bound.
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const GraphDocument doc = testing::random_bipartite(3, 3, 0.6, seed);
    if (doc.graph.edge_count() == 0 || doc.graph.edge_count() > 7) continue;
    const std::int64_t opt = testing::brute_force_min_sum(doc.graph, 2 * doc.graph.max_degree() - 1);
    const std::int64_t lb = bipartite_onesided_lower_bound(doc.graph, *doc.bipartition, Side::U);
    EXPECT_EQ(decide_sequential(doc.graph, *doc.bipartition, SequentialTargets::USide), opt == lb)
        << "seed " << seed;
  }
}

}  // namespace
}  // namespace sumcolor
