#include "sumcolor/sumcolor.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "sumcolor/bench.hpp"
#include "sumcolor/exact_solver.hpp"
#include "sumcolor/generators.hpp"
#include "sumcolor/io.hpp"
#include "sumcolor/regular_approx.hpp"
#include "sumcolor/reports.hpp"
#include "sumcolor/sequential.hpp"
#include "sumcolor/split_bounds.hpp"

struct sumcolor_graph {
  sumcolor::GraphDocument doc;
};

namespace {

thread_local std::string last_error;

char* copy_out(const std::string& s) {
  char* buf = static_cast<char*>(std::malloc(s.size() + 1));
  if (buf != nullptr) std::memcpy(buf, s.c_str(), s.size() + 1);
  return buf;
}

sumcolor_status fail(sumcolor_status status, const std::string& msg) {
  last_error = msg;
  return status;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
sumcolor_status guarded(Body&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const sumcolor::ParseError& e) {
    return fail(SUMCOLOR_ERROR_PARSE, e.what());
  } catch (const sumcolor::PreconditionError& e) {
    return fail(SUMCOLOR_ERROR_PRECONDITION, e.what());
  } catch (const sumcolor::InternalError& e) {
    return fail(SUMCOLOR_ERROR_INTERNAL, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(SUMCOLOR_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(SUMCOLOR_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(SUMCOLOR_ERROR_INTERNAL, "unknown error");
  }
}

sumcolor_status emit(const std::string& text, char** out) {
  *out = copy_out(text);
  return *out ? SUMCOLOR_OK : fail(SUMCOLOR_ERROR_INTERNAL, "out of memory");
}

}  // namespace

extern "C" {

const char* sumcolor_version(void) { return "1.0.0"; }

const char* sumcolor_last_error(void) { return last_error.c_str(); }

void sumcolor_string_free(char* s) { std::free(s); }

sumcolor_status sumcolor_graph_parse(const char* data, size_t len, sumcolor_format format,
                                     sumcolor_graph** out) {
  if (data == nullptr || out == nullptr) return fail(SUMCOLOR_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto fmt = format == SUMCOLOR_FORMAT_JSON     ? sumcolor::GraphFormat::Json
                     : format == SUMCOLOR_FORMAT_DIMACS ? sumcolor::GraphFormat::Dimacs
                                                        : sumcolor::GraphFormat::Auto;
    *out = new sumcolor_graph{sumcolor::parse_graph(std::string_view(data, len), fmt)};
    return SUMCOLOR_OK;
  });
}

sumcolor_status sumcolor_graph_generate(const char* spec, uint64_t seed, sumcolor_graph** out) {
  if (spec == nullptr || out == nullptr) return fail(SUMCOLOR_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new sumcolor_graph{sumcolor::generate_from_spec(spec, seed)};
    return SUMCOLOR_OK;
  });
}

void sumcolor_graph_free(sumcolor_graph* g) { delete g; }

int sumcolor_graph_vertex_count(const sumcolor_graph* g) {
  return g ? g->doc.graph.vertex_count() : -1;
}

int sumcolor_graph_edge_count(const sumcolor_graph* g) { return g ? g->doc.graph.edge_count() : -1; }

int sumcolor_graph_max_degree(const sumcolor_graph* g) { return g ? g->doc.graph.max_degree() : -1; }

sumcolor_status sumcolor_graph_to_json(const sumcolor_graph* g, char** out) {
  if (g == nullptr || out == nullptr) return fail(SUMCOLOR_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return emit(sumcolor::to_json(g->doc), out); });
}

sumcolor_status sumcolor_graph_to_dimacs(const sumcolor_graph* g, char** out) {
  if (g == nullptr || out == nullptr) return fail(SUMCOLOR_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return emit(sumcolor::to_dimacs(g->doc.graph), out); });
}

sumcolor_status sumcolor_approx(const sumcolor_graph* g, char** out_json) {
  if (g == nullptr || out_json == nullptr) return fail(SUMCOLOR_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto rep = sumcolor::approx_sum_regular(g->doc.graph);
    return emit(sumcolor::approx_report_json(rep).dump(), out_json);
  });
}

sumcolor_status sumcolor_exact(const sumcolor_graph* g, int64_t budget_ms, char** out_json) {
  if (g == nullptr || out_json == nullptr) return fail(SUMCOLOR_ERROR_INVALID_ARGUMENT, "null argument");
  if (budget_ms < 0) return fail(SUMCOLOR_ERROR_INVALID_ARGUMENT, "negative budget");
  return guarded([&] {
    sumcolor::ExactOptions opt;
    opt.budget = std::chrono::milliseconds(budget_ms);
    const auto res = sumcolor::exact_sum(g->doc.graph, opt);
    const sumcolor_status st = emit(sumcolor::exact_result_json(res).dump(), out_json);
    if (st == SUMCOLOR_OK && !res.optimal) {
      return fail(SUMCOLOR_BUDGET_EXHAUSTED, "budget exhausted; result is not proven optimal");
    }
    return st;
  });
}

sumcolor_status sumcolor_split(const sumcolor_graph* g, sumcolor_split_condition condition,
                               char** out_json) {
  if (g == nullptr || out_json == nullptr) return fail(SUMCOLOR_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    if (!g->doc.split) {
      throw sumcolor::PreconditionError("graph has no split_partition");
    }
    std::optional<sumcolor::SplitCondition> cond;
    if (condition == SUMCOLOR_SPLIT_THM10) cond = sumcolor::SplitCondition::CliqueDominant;
    if (condition == SUMCOLOR_SPLIT_THM11) cond = sumcolor::SplitCondition::IndependentDominant;
    const auto rep = sumcolor::split_color(g->doc.graph, *g->doc.split, cond);
    return emit(sumcolor::split_report_json(rep).dump(), out_json);
  });
}

sumcolor_status sumcolor_useq(const sumcolor_graph* g, sumcolor_side side, char** out_json) {
  if (g == nullptr || out_json == nullptr) return fail(SUMCOLOR_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::optional<sumcolor::Bipartition> bp = g->doc.bipartition;
    if (!bp) bp = sumcolor::find_bipartition(g->doc.graph);
    if (!bp) throw sumcolor::PreconditionError("graph is not bipartite");
    const auto s = side == SUMCOLOR_SIDE_W ? sumcolor::Side::W : sumcolor::Side::U;
    const auto c = sumcolor::u_sequential_color(g->doc.graph, *bp, s);
    return emit(sumcolor::useq_json(g->doc.graph, *bp, s, c).dump(), out_json);
  });
}

sumcolor_status sumcolor_verify(const sumcolor_graph* g, const char* coloring_json, size_t len,
                                char** out_json) {
  if (g == nullptr || coloring_json == nullptr || out_json == nullptr) {
    return fail(SUMCOLOR_ERROR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    const auto c = sumcolor::parse_coloring_json(std::string_view(coloring_json, len));
    const auto rep = sumcolor::verify_coloring(g->doc.graph, c);
    return emit(sumcolor::verification_json(rep).dump(), out_json);
  });
}

sumcolor_status sumcolor_bench(const char* corpus, uint64_t seed, int64_t budget_ms, char** out_csv) {
  if (corpus == nullptr || out_csv == nullptr) return fail(SUMCOLOR_ERROR_INVALID_ARGUMENT, "null argument");
  if (budget_ms < 0) return fail(SUMCOLOR_ERROR_INVALID_ARGUMENT, "negative budget");
  return guarded([&] {
    sumcolor::BenchOptions opt;
    opt.corpus = corpus;
    opt.seed = seed;
    opt.exact_budget = std::chrono::milliseconds(budget_ms);
    return emit(sumcolor::bench_csv(sumcolor::run_bench(opt)), out_csv);
  });
}

}  // extern "C"
