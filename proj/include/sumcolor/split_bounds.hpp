#pragma once

#include <cstdint>
#include <optional>

#include "sumcolor/coloring.hpp"
#include "sumcolor/graph.hpp"

namespace sumcolor {

/// Both upper-bound terms for a split graph under one degree condition.
///   high: H colored sequentially on low colors, clique on the colors above
///   low:  clique factorized on 1.., H colored sequentially and shifted above
struct SplitTerms {
  std::int64_t term_clique_high = 0;
  std::int64_t term_clique_low = 0;

  std::int64_t bound() const { return std::min(term_clique_high, term_clique_low); }
};

bool split_condition_holds(const Graph& g, const SplitDecomposition& sd, SplitCondition cond);

/// Closed-form terms. Throws PreconditionError if `cond` does not hold.
SplitTerms split_formula_bounds(const Graph& g, const SplitDecomposition& sd, SplitCondition cond);

enum class SplitStrategy { CliqueHigh, CliqueLow };

struct SplitBoundReport {
  SplitCondition condition = SplitCondition::CliqueDominant;
  bool odd_clique = false;
  SplitTerms terms;
  std::int64_t bound = 0;
  SplitStrategy strategy_chosen = SplitStrategy::CliqueHigh;
  EdgeColoring coloring;  // attains `bound`
  bool both_conditions_hold = false;
};

/// Builds both strategy colorings, audits them against their formula terms
/// and returns the cheaper. Without `cond` every condition that holds is
/// tried and the smallest bound wins; if none holds, PreconditionError.
SplitBoundReport split_color(const Graph& g, const SplitDecomposition& sd,
                             std::optional<SplitCondition> cond = std::nullopt);

}  // namespace sumcolor
