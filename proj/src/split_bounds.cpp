#include "sumcolor/split_bounds.hpp"

#include <algorithm>
#include <string>

#include "sumcolor/kernels.hpp"
#include "sumcolor/regular_approx.hpp"
#include "sumcolor/sequential.hpp"

namespace sumcolor {

namespace {

std::string name(SplitCondition cond) {
  return cond == SplitCondition::CliqueDominant ? "clique-dominant" : "independent-dominant";
}

}  // namespace

bool split_condition_holds(const Graph& g, const SplitDecomposition& sd, SplitCondition cond) {
  const int gap = sd.clique_size() - 1;
  for (EdgeId he : sd.h_to_g) {
    Vertex u = g.edge(he).u;
    Vertex v = g.edge(he).v;
    if (std::find(sd.clique.begin(), sd.clique.end(), u) == sd.clique.end()) std::swap(u, v);
    const int diff = g.degree(u) - g.degree(v);
    if (cond == SplitCondition::CliqueDominant ? diff < gap : diff > gap) return false;
  }
  return true;
}

SplitTerms split_formula_bounds(const Graph& g, const SplitDecomposition& sd, SplitCondition cond) {
  if (!split_condition_holds(g, sd, cond)) {
    throw PreconditionError("split graph violates the " + name(cond) + " degree condition");
  }
  const std::int64_t n = sd.clique_size();
  const bool odd = n % 2 == 1;
  const std::int64_t pairs = n * (n - 1);
  const std::int64_t clique_sum = kn_exact_sum(n);
  SplitTerms t;
  if (cond == SplitCondition::CliqueDominant) {
    const std::int64_t delta = g.max_degree();
    std::int64_t seq = 0;
    std::int64_t shifted = 0;
    for (Vertex u : sd.clique) {
      const std::int64_t d = g.degree(u);
      seq += (d - n + 1) * (d - n + 2) / 2;
      shifted += (d - n + 1) * (d + n + (odd ? 2 : 0)) / 2;
    }
    t.term_clique_high = seq + (2 * delta - n + (odd ? 3 : 2)) * pairs / 4;
    t.term_clique_low = clique_sum + shifted;
  } else {
    const std::int64_t delta_i = sd.delta_i;
    std::int64_t seq = 0;
    std::int64_t shifted = 0;
    for (Vertex v : sd.independent) {
      const std::int64_t d = g.degree(v);
      seq += d * (d + 1) / 2;
      shifted += d * (d + 2 * n + (odd ? 1 : -1)) / 2;
    }
    t.term_clique_high = seq + (2 * delta_i + n + (odd ? 1 : 0)) * pairs / 4;
    t.term_clique_low = clique_sum + shifted;
  }
  return t;
}

namespace {

SplitBoundReport build(const Graph& g, const SplitDecomposition& sd, SplitCondition cond) {
  SplitBoundReport rep;
  rep.condition = cond;
  rep.terms = split_formula_bounds(g, sd, cond);
  const int n = sd.clique_size();
  rep.odd_clique = n % 2 == 1;

  const Side seq_side = cond == SplitCondition::CliqueDominant ? Side::U : Side::W;
  const EdgeColoring h_coloring =
      u_sequential_color(sd.h, sd.h_sides(g.vertex_count()), seq_side);

  int high_offset = sd.delta_i;
  if (cond == SplitCondition::CliqueDominant) {
    high_offset = g.max_degree() - n + 1;
    if (std::none_of(sd.clique.begin(), sd.clique.end(),
                     [&](Vertex u) { return g.degree(u) == g.max_degree(); })) {
      throw InternalError("maximum degree not attained on the clique");
    }
  }
  const int low_shift = rep.odd_clique ? n : n - 1;

  std::vector<int> position(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(sd.clique[static_cast<std::size_t>(i)])] = i;
  auto clique_color = [&](EdgeId ge) {
    const Edge& e = g.edge(ge);
    return clique_edge_color(n, position[static_cast<std::size_t>(e.u)],
                             position[static_cast<std::size_t>(e.v)]);
  };

  std::vector<Color> high(static_cast<std::size_t>(g.edge_count()));
  std::vector<Color> low(static_cast<std::size_t>(g.edge_count()));
  for (std::size_t i = 0; i < sd.h_to_g.size(); ++i) {
    const auto ge = static_cast<std::size_t>(sd.h_to_g[i]);
    high[ge] = h_coloring[static_cast<EdgeId>(i)];
    low[ge] = h_coloring[static_cast<EdgeId>(i)] + low_shift;
  }
  for (EdgeId ge : sd.hprime_to_g) {
    high[static_cast<std::size_t>(ge)] = high_offset + clique_color(ge);
    low[static_cast<std::size_t>(ge)] = clique_color(ge);
  }

  // H colors at each clique vertex stay below the clique's high range.
  for (std::size_t i = 0; i < sd.h_to_g.size(); ++i) {
    if (h_coloring[static_cast<EdgeId>(i)] > high_offset) {
      throw InternalError("H color overlaps the clique color range");
    }
  }

  EdgeColoring high_coloring(std::move(high));
  EdgeColoring low_coloring(std::move(low));
  if (!is_proper(g, high_coloring) || !is_proper(g, low_coloring)) {
    throw InternalError("split strategy coloring is not proper");
  }
  if (high_coloring.sum() != rep.terms.term_clique_high ||
      low_coloring.sum() != rep.terms.term_clique_low) {
    throw InternalError("split strategy sum disagrees with its closed form");
  }
  if (rep.terms.term_clique_high <= rep.terms.term_clique_low) {
    rep.strategy_chosen = SplitStrategy::CliqueHigh;
    rep.coloring = std::move(high_coloring);
  } else {
    rep.strategy_chosen = SplitStrategy::CliqueLow;
    rep.coloring = std::move(low_coloring);
  }
  rep.bound = rep.terms.bound();
  return rep;
}

}  // namespace

SplitBoundReport split_color(const Graph& g, const SplitDecomposition& sd,
                             std::optional<SplitCondition> cond) {
  const bool clique_ok = split_condition_holds(g, sd, SplitCondition::CliqueDominant);
  const bool indep_ok = split_condition_holds(g, sd, SplitCondition::IndependentDominant);
  SplitBoundReport rep;
  if (cond) {
    rep = build(g, sd, *cond);
  } else if (clique_ok && indep_ok) {
    SplitBoundReport a = build(g, sd, SplitCondition::CliqueDominant);
    SplitBoundReport b = build(g, sd, SplitCondition::IndependentDominant);
    rep = b.bound < a.bound ? std::move(b) : std::move(a);
  } else if (clique_ok || indep_ok) {
    rep = build(g, sd, clique_ok ? SplitCondition::CliqueDominant
                                 : SplitCondition::IndependentDominant);
  } else {
    throw PreconditionError("split graph satisfies neither degree condition");
  }
  rep.both_conditions_hold = clique_ok && indep_ok;
  return rep;
}

}  // namespace sumcolor
