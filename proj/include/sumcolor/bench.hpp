#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sumcolor/rational.hpp"

namespace sumcolor {

struct BenchCheck {
  std::string name;
  std::optional<bool> passed;  // empty when not applicable (oracle timed out)
};

struct BenchRow {
  std::string family;
  int n = 0;
  int m = 0;
  int r_or_delta = 0;
  Rational lower_bound;
  std::int64_t achieved_sum = 0;
  std::optional<std::int64_t> exact_sum;
  Rational formula_upper;
  std::optional<Rational> ratio;  // achieved / exact
  std::vector<BenchCheck> checks;

  bool failed() const;
};

struct BenchOptions {
  /// ';'-separated families: "cubic[:n,n,...]", "complete[:n,n,...]",
  /// "split[:max_clique]", or "all".
  std::string corpus = "all";
  std::uint64_t seed = 1;
  int instances_per_size = 5;
  std::chrono::milliseconds exact_budget{10000};
  unsigned threads = 0;  // 0 = hardware concurrency
};

/// Evaluates every corpus instance; rows come back in corpus order.
/// Throws std::invalid_argument for an unknown family.
std::vector<BenchRow> run_bench(const BenchOptions& options);

/// Header "family,n,m,r_or_delta,lower_bound,achieved_sum,exact_sum,
/// formula_upper,ratio,checks" followed by one line per row.
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace sumcolor
