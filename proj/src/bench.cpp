#include "sumcolor/bench.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "sumcolor/exact_solver.hpp"
#include "sumcolor/generators.hpp"
#include "sumcolor/regular_approx.hpp"
#include "sumcolor/split_bounds.hpp"

namespace sumcolor {

bool BenchRow::failed() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const BenchCheck& c) { return c.passed && !*c.passed; });
}

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

std::optional<ExactResult> try_exact(const Graph& g, std::chrono::milliseconds budget) {
  ExactOptions opt;
  opt.budget = budget;
  if (g.edge_count() > opt.max_edges) return std::nullopt;
  ExactResult res = exact_sum(g, opt);
  if (!res.optimal) return std::nullopt;
  return res;
}

BenchRow regular_row(const std::string& family, const Graph& g, std::chrono::milliseconds budget) {
  const ApproxReport rep = approx_sum_regular(g);
  BenchRow row;
  row.family = family;
  row.n = g.vertex_count();
  row.m = g.edge_count();
  row.r_or_delta = rep.r;
  row.lower_bound = rep.lower_bound;
  row.achieved_sum = rep.achieved_sum;
  row.formula_upper = rep.formula_upper;
  const int min_r = (rep.n + rep.r) / (rep.r + 1);
  row.checks.push_back({"seq_set", rep.sequential_set_size() >= min_r});
  row.checks.push_back({"approx_bound", Rational(rep.achieved_sum) <= rep.formula_upper});
  if (auto ex = try_exact(g, budget)) {
    row.exact_sum = ex->sum;
    row.ratio = Rational(rep.achieved_sum, ex->sum);
    row.checks.push_back({"approx_ratio", *row.ratio <= rep.ratio_bound});
    row.checks.push_back({"sandwich", rep.lower_bound <= Rational(ex->sum) &&
                                          ex->sum <= rep.achieved_sum});
  } else {
    row.checks.push_back({"approx_ratio", std::nullopt});
    row.checks.push_back({"sandwich", std::nullopt});
  }
  return row;
}

struct Task {
  std::function<BenchRow()> eval;
};

void add_family(std::vector<Task>& tasks, const std::string& spec, const BenchOptions& opt) {
  const auto colon = spec.find(':');
  const std::string family = spec.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
  const auto budget = opt.exact_budget;
  if (family == "cubic") {
    const std::vector<int> sizes = args.empty() ? std::vector<int>{4, 6, 8, 10, 12} : parse_int_list(args);
    for (int n : sizes) {
      for (int k = 0; k < opt.instances_per_size; ++k) {
        const std::uint64_t seed = opt.seed * 1000003ULL + static_cast<std::uint64_t>(n) * 101 + k;
        tasks.push_back({[n, seed, budget] {
          return regular_row("cubic", gen_random_regular(n, 3, seed), budget);
        }});
      }
    }
  } else if (family == "complete") {
    const std::vector<int> sizes = args.empty() ? std::vector<int>{2, 3, 4, 5, 6, 7} : parse_int_list(args);
    for (int n : sizes) {
      tasks.push_back({[n, budget] {
        BenchRow row = regular_row("complete", gen_complete(n), budget);
        const bool formula_ok = kn_optimal_coloring(n).sum() == kn_exact_sum(n);
        if (row.exact_sum) {
          row.checks.push_back({"kn_formula", formula_ok && *row.exact_sum == kn_exact_sum(n)});
        } else {
          row.checks.push_back({"kn_formula", std::nullopt});
        }
        return row;
      }});
    }
  } else if (family == "split") {
    const int max_clique = args.empty() ? 4 : std::stoi(args);
    for (SplitCondition cond : {SplitCondition::CliqueDominant, SplitCondition::IndependentDominant}) {
      for (int c = 1; c <= max_clique; ++c) {
        for (int i = 1; i <= 3; ++i) {
          const std::uint64_t seed = opt.seed * 7919ULL + static_cast<std::uint64_t>(c * 10 + i);
          tasks.push_back({[=] {
            const GraphDocument doc = gen_split(c, i, cond, seed);
            const SplitBoundReport rep = split_color(doc.graph, *doc.split, cond);
            BenchRow row;
            row.family = cond == SplitCondition::CliqueDominant ? "split-thm10" : "split-thm11";
            row.n = doc.graph.vertex_count();
            row.m = doc.graph.edge_count();
            row.r_or_delta = doc.graph.max_degree();
            row.lower_bound = Rational(general_lower_bound(doc.graph));
            row.achieved_sum = rep.coloring.sum();
            row.formula_upper = Rational(rep.bound);
            row.checks.push_back({"split_sum", rep.coloring.sum() == rep.bound});
            if (auto ex = try_exact(doc.graph, budget)) {
              row.exact_sum = ex->sum;
              if (ex->sum > 0) row.ratio = Rational(rep.coloring.sum(), ex->sum);
              row.checks.push_back({"split_bound", ex->sum <= rep.bound});
            } else {
              row.checks.push_back({"split_bound", std::nullopt});
            }
            return row;
          }});
        }
      }
    }
  } else {
    throw std::invalid_argument("unknown bench family '" + family + "'");
  }
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchOptions& options) {
  std::vector<Task> tasks;
  std::string corpus = options.corpus == "all" ? "complete;cubic;split" : options.corpus;
  std::stringstream ss(corpus);
  std::string part;
  while (std::getline(ss, part, ';')) {
    if (!part.empty()) add_family(tasks, part, options);
  }

  std::vector<BenchRow> rows(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        rows[i] = tasks[i].eval();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "family,n,m,r_or_delta,lower_bound,achieved_sum,exact_sum,formula_upper,ratio,checks\n";
  for (const BenchRow& r : rows) {
    out << r.family << ',' << r.n << ',' << r.m << ',' << r.r_or_delta << ',' << r.lower_bound.str()
        << ',' << r.achieved_sum << ',' << (r.exact_sum ? std::to_string(*r.exact_sum) : "") << ','
        << r.formula_upper.str() << ',' << (r.ratio ? r.ratio->str() : "") << ',';
    for (std::size_t i = 0; i < r.checks.size(); ++i) {
      const BenchCheck& c = r.checks[i];
      out << (i ? ";" : "") << c.name << '=' << (!c.passed ? "skip" : *c.passed ? "pass" : "fail");
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace sumcolor
