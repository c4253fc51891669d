// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "sumcolor/errors.hpp"
#include "sumcolor/exact_solver.hpp"
#include "sumcolor/generators.hpp"
#include "sumcolor/kernels.hpp"
#include "sumcolor/regular_approx.hpp"
#include "sumcolor/sequential.hpp"
#include "sumcolor/split_bounds.hpp"

namespace {

using namespace sumcolor;
using Clock = std::chrono::steady_clock;

// Tolerances. Every count-based criterion tolerates zero violations.
constexpr double kCompleteGraphSeconds = 60.0;
constexpr double kCubicSwapSeconds = 10.0;
constexpr auto kPetersenBudget = std::chrono::minutes(10);
const Rational kCubicRatio(11, 8);
const Rational kCubicUpperPerVertex(3 * 22, 16);  // achieved <= n * 66/16

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (pass) detail << "first failure: " << why << "; ";
    pass = false;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

ExactResult solve(const Graph& g) {
  ExactOptions opts;
  opts.budget = std::chrono::minutes(1);
  return exact_sum(g, opts);
}

std::vector<Graph> cubic_corpus() {
  std::vector<Graph> out;
  const int sizes[] = {4, 6, 8, 10, 12};
  for (int k = 0; k < 200; ++k) {
    const int n = sizes[k % 5];
    out.push_back(gen_random_regular(n, 3, 0xC0B1C000ULL + static_cast<std::uint64_t>(k)));
  }
  return out;
}

Outcome complete_graphs() {
  Outcome o;
  const auto t0 = Clock::now();
  const std::int64_t expected[] = {1, 6, 12, 30, 45, 84};
  for (int n = 2; n <= 7; ++n) {
    const std::int64_t want = expected[n - 2];
    const ExactResult r = solve(gen_complete(n));
    const EdgeColoring c = kn_optimal_coloring(n);
    if (!r.optimal) o.fail("K" + std::to_string(n) + " not solved");
    if (r.sum != want) o.fail("exact K" + std::to_string(n) + " = " + std::to_string(r.sum));
    if (kn_exact_sum(n) != want) o.fail("formula K" + std::to_string(n));
    if (!is_proper(gen_complete(n), c) || c.sum() != want) o.fail("coloring K" + std::to_string(n));
  }
  const double secs = seconds_since(t0);
  if (secs >= kCompleteGraphSeconds) o.fail("took " + std::to_string(secs) + "s");
  o.detail << "n=2..7 sums 1,6,12,30,45,84 in " << secs << "s";
  return o;
}

Outcome cubic_swap(const std::vector<Graph>& corpus) {
  Outcome o;
  const auto t0 = Clock::now();
  int min_slack = 1 << 30;
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const Graph& g = corpus[k];
    const int n = g.vertex_count();
    const SequentialResult res = swap_to_sequential(g, vizing_color(g));
    const int need = (n + 3) / 4;
    const int got = static_cast<int>(res.sequential_vertices.size());
    min_slack = std::min(min_slack, got - need);
    if (got < need) o.fail("instance " + std::to_string(k) + " |R|=" + std::to_string(got));
    if (!is_proper(g, res.coloring) || res.coloring.max_color() > 4) {
      o.fail("instance " + std::to_string(k) + " not a proper 4-coloring");
    }
    if (!is_sequential(g, res.coloring, res.sequential_vertices)) {
      o.fail("instance " + std::to_string(k) + " not R-sequential");
    }
  }
  const double secs = seconds_since(t0);
  if (secs >= kCubicSwapSeconds) o.fail("took " + std::to_string(secs) + "s");
  o.detail << corpus.size() << " graphs, min |R|-ceil(n/4) = " << min_slack << ", " << secs << "s";
  return o;
}

Outcome cubic_ratio(const std::vector<Graph>& corpus) {
  Outcome o;
  int with_oracle = 0;
  Rational worst(0);
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const Graph& g = corpus[k];
    const int n = g.vertex_count();
    const ApproxReport rep = approx_sum_regular(g);
    if (Rational(rep.achieved_sum) > kCubicUpperPerVertex * Rational(n)) {
      o.fail("instance " + std::to_string(k) + " sum " + std::to_string(rep.achieved_sum));
    }
    if (n > 10) continue;
    const ExactResult ex = solve(g);
    if (!ex.optimal) {
      o.fail("oracle did not finish on instance " + std::to_string(k));
      continue;
    }
    ++with_oracle;
    const Rational ratio(rep.achieved_sum, ex.sum);
    worst = std::max(worst, ratio);
    if (ratio > kCubicRatio) o.fail("instance " + std::to_string(k) + " ratio " + ratio.str());
  }
  o.detail << corpus.size() << " upper-bound checks, " << with_oracle << " ratio checks, worst ratio "
           << worst.str() << " (limit 11/8)";
  return o;
}

Outcome petersen() {
  Outcome o;
  const Graph p = gen_petersen();
  ExactOptions opts;
  opts.budget = kPetersenBudget;
  const ExactResult r = exact_sum(p, opts);
  if (!r.optimal) o.fail("oracle did not finish");
  if (r.sum != 33) o.fail("exact " + std::to_string(r.sum));
  if (regular_lower_bound(10, 3) != Rational(30)) o.fail("lower bound");
  // Independent cross-check: every pair of perfect matchings meets.
  const auto pm = testing::perfect_matchings(p);
  for (std::size_t a = 0; a < pm.size(); ++a) {
    for (std::size_t b = a + 1; b < pm.size(); ++b) {
      const bool meet = std::any_of(pm[a].begin(), pm[a].end(), [&](EdgeId e) {
        return std::find(pm[b].begin(), pm[b].end(), e) != pm[b].end();
      });
      if (!meet) o.fail("two disjoint perfect matchings");
    }
  }
  o.detail << "exact 33 in " << r.nodes_expanded << " nodes, lower bound 30, " << pm.size()
           << " pairwise-meeting perfect matchings";
  return o;
}

// Random degree plans, skipped when the generator reports them unrealizable.
template <typename Make, typename Accept>
std::vector<GraphDocument> bipartite_corpus(std::size_t count, std::uint64_t seed, Make make,
                                            Accept accept) {
  std::mt19937_64 rng(seed);
  std::vector<GraphDocument> out;
  while (out.size() < count) {
    try {
      GraphDocument doc = make(rng);
      if (accept(doc)) out.push_back(std::move(doc));
    } catch (const PreconditionError&) {
    }
  }
  return out;
}

std::vector<int> random_degrees(std::mt19937_64& rng, int size, int max_degree) {
  std::uniform_int_distribution<int> d(1, max_degree);
  std::vector<int> out(static_cast<std::size_t>(size));
  for (int& x : out) x = d(rng);
  return out;
}

// Degree sequence summing to `total` with entries in [1, max_degree].
std::vector<int> matching_side(std::mt19937_64& rng, int total, int max_degree) {
  std::vector<int> out;
  std::uniform_int_distribution<int> d(1, max_degree);
  while (total > 0) {
    const int x = std::min(total, d(rng));
    out.push_back(x);
    total -= x;
  }
  return out;
}

Outcome useq_optimality() {
  Outcome o;
  std::uniform_int_distribution<int> size(1, 5);
  const auto corpus = bipartite_corpus(
      100, 5,
      [&](std::mt19937_64& rng) {
        const auto u = random_degrees(rng, size(rng), 4);
        int total = 0;
        for (int x : u) total += x;
        const auto w = matching_side(rng, total, *std::max_element(u.begin(), u.end()));
        return gen_bipartite_dominant(u, w, rng());
      },
      [](const GraphDocument& d) { return d.graph.edge_count() <= 20; });
  int exact_checked = 0;
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const GraphDocument& doc = corpus[k];
    const EdgeColoring c = u_sequential_color(doc.graph, *doc.bipartition, Side::U);
    std::int64_t formula = 0;
    for (Vertex v : doc.bipartition->vertices(Side::U)) {
      formula += doc.graph.degree(v) * (doc.graph.degree(v) + 1) / 2;
    }
    if (!is_proper(doc.graph, c) || c.sum() != formula) {
      o.fail("instance " + std::to_string(k) + " sum " + std::to_string(c.sum()) + " vs " +
             std::to_string(formula));
    }
    if (doc.graph.edge_count() > 14) continue;
    ++exact_checked;
    const ExactResult ex = solve(doc.graph);
    if (!ex.optimal || ex.sum != c.sum()) o.fail("instance " + std::to_string(k) + " exact mismatch");
  }
  o.detail << corpus.size() << " instances, " << exact_checked << " compared with the exact solver";
  return o;
}

Outcome sequential_equivalences() {
  Outcome o;
  std::uniform_int_distribution<int> size(2, 5);
  auto delta3 = [](const GraphDocument& d) {
    return d.graph.max_degree() == 3 && d.graph.edge_count() <= 12;
  };
  const auto general = bipartite_corpus(
      100, 6,
      [&](std::mt19937_64& rng) {
        const auto u = random_degrees(rng, size(rng), 3);
        int total = 0;
        for (int x : u) total += x;
        return gen_bipartite(u, matching_side(rng, total, 3), rng());
      },
      delta3);
  const auto balanced = bipartite_corpus(
      50, 7,
      [&](std::mt19937_64& rng) {
        const auto u = random_degrees(rng, size(rng), 3);
        auto w = u;
        std::shuffle(w.begin(), w.end(), rng);
        return gen_bipartite(u, w, rng());
      },
      delta3);

  int u_true = 0, all_true = 0;
  for (std::size_t k = 0; k < general.size() + balanced.size(); ++k) {
    const bool is_balanced = k >= general.size();
    const GraphDocument& doc = is_balanced ? balanced[k - general.size()] : general[k];
    const ExactResult ex = solve(doc.graph);
    if (!ex.optimal) {
      o.fail("oracle did not finish");
      continue;
    }
    const bool u_seq = decide_sequential(doc.graph, *doc.bipartition, SequentialTargets::USide);
    const std::int64_t u_bound = bipartite_onesided_lower_bound(doc.graph, *doc.bipartition, Side::U);
    u_true += u_seq;
    if (u_seq != (ex.sum == u_bound)) o.fail("U-side equivalence broken on instance " + std::to_string(k));
    if (!is_balanced) continue;
    const bool all_seq = decide_sequential(doc.graph, *doc.bipartition, SequentialTargets::AllVertices);
    std::int64_t twice = 0;  // sum_v d(d+1)/2 = sum_i i*|V_{>=i}|
    for (Vertex v = 0; v < doc.graph.vertex_count(); ++v) {
      twice += doc.graph.degree(v) * (doc.graph.degree(v) + 1) / 2;
    }
    all_true += all_seq;
    if (all_seq != (2 * ex.sum == twice)) {
      o.fail("all-vertex equivalence broken on instance " + std::to_string(k));
    }
  }
  o.detail << general.size() << " general + " << balanced.size() << " balanced; U-sequential in " << u_true
           << " of " << general.size() + balanced.size() << ", fully sequential in " << all_true << " of "
           << balanced.size();
  return o;
}

Outcome split_graphs() {
  Outcome o;
  int checked = 0, chose_high = 0;
  for (SplitCondition cond : {SplitCondition::CliqueDominant, SplitCondition::IndependentDominant}) {
    int made = 0;
    for (std::uint64_t seed = 0; made < 50; ++seed) {
      const int c = 1 + static_cast<int>(seed % 4);
      const int i = 1 + static_cast<int>((seed / 4) % 4);
      const GraphDocument doc = gen_split(c, i, cond, seed * 31 + 17);
      if (doc.graph.edge_count() > 14) continue;
      ++made;
      ++checked;
      const SplitBoundReport rep = split_color(doc.graph, *doc.split, cond);
      const std::string id = "seed " + std::to_string(seed);
      if (!is_proper(doc.graph, rep.coloring)) o.fail(id + " improper");
      if (rep.coloring.sum() != rep.bound) o.fail(id + " sum differs from bound");
      if (rep.bound != std::min(rep.terms.term_clique_high, rep.terms.term_clique_low)) {
        o.fail(id + " bound is not the smaller term");
      }
      chose_high += rep.strategy_chosen == SplitStrategy::CliqueHigh;
      const ExactResult ex = solve(doc.graph);
      if (!ex.optimal) o.fail(id + " oracle did not finish");
      if (ex.sum > rep.bound) o.fail(id + " optimum above bound");
    }
  }
  o.detail << checked << " instances (" << chose_high << " via clique-high)";
  return o;
}

Outcome kernels() {
  Outcome o;
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> nsize(2, 16);
  std::uniform_real_distribution<double> dens(0.1, 0.9);
  for (int k = 0; k < 500; ++k) {
    Graph g = (k % 4 == 3) ? gen_random_regular(6 + 2 * (k % 5), 3 + k % 3, rng())
                           : testing::random_graph(nsize(rng), dens(rng), rng());
    const EdgeColoring c = vizing_color(g);
    if (!is_proper(g, c) || (g.edge_count() > 0 && c.max_color() > g.max_degree() + 1)) {
      o.fail("vizing on general instance " + std::to_string(k));
    }
  }
  std::uniform_int_distribution<int> side(1, 9);
  for (int k = 0; k < 500; ++k) {
    const GraphDocument doc = testing::random_bipartite(side(rng), side(rng), dens(rng), rng());
    const EdgeColoring kc = koenig_color(doc.graph, *doc.bipartition);
    const EdgeColoring vc = vizing_color(doc.graph);
    const int delta = doc.graph.max_degree();
    if (!is_proper(doc.graph, kc) || (doc.graph.edge_count() > 0 && kc.max_color() > delta)) {
      o.fail("koenig on bipartite instance " + std::to_string(k));
    }
    if (!is_proper(doc.graph, vc) || (doc.graph.edge_count() > 0 && vc.max_color() > delta + 1)) {
      o.fail("vizing on bipartite instance " + std::to_string(k));
    }
  }
  o.detail << "500 general + 500 bipartite instances";
  return o;
}

}  // namespace

int main() {
  const std::vector<Graph> cubic = cubic_corpus();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"complete graph sums", complete_graphs},
      {"cubic sequential swap", [&] { return cubic_swap(cubic); }},
      {"cubic bound and ratio", [&] { return cubic_ratio(cubic); }},
      {"Petersen value", petersen},
      {"U-sequential optimality", useq_optimality},
      {"sequential equivalences", sequential_equivalences},
      {"split graph bounds", split_graphs},
      {"kernel contracts", kernels},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::printf("%s criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.str().c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
