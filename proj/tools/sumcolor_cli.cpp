// Command-line front end over the sumcolor C interface.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "sumcolor/sumcolor.h"

namespace {

using nlohmann::json;

struct GraphDeleter {
  void operator()(sumcolor_graph* g) const { sumcolor_graph_free(g); }
};
using GraphHandle = std::unique_ptr<sumcolor_graph, GraphDeleter>;

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { sumcolor_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

struct RunConfig {
  std::string input;
  std::string gen;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::int64_t budget_ms = 10000;
  std::string condition;
  std::string output;
  std::string side = "U";
  std::string coloring;
  std::string corpus = "all";
};

int exit_code(sumcolor_status st) {
  switch (st) {
    case SUMCOLOR_OK:
      return 0;
    case SUMCOLOR_BUDGET_EXHAUSTED:
      return 3;
    case SUMCOLOR_ERROR_PRECONDITION:
    case SUMCOLOR_ERROR_PARSE:
    case SUMCOLOR_ERROR_INVALID_ARGUMENT:
      return 2;
    default:
      return 1;
  }
}

int report_failure(sumcolor_status st) {
  std::cerr << "error: " << sumcolor_last_error() << '\n';
  return exit_code(st);
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  out << text;
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_string()) {
    out.emplace_back(prefix, j.get<std::string>());
  } else {
    out.emplace_back(prefix, j.dump());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string render(const std::string& report_json, const std::string& format) {
  const json doc = json::parse(report_json);
  if (format == "json") return doc.dump(2) + "\n";
  std::vector<std::pair<std::string, std::string>> fields;
  flatten(doc, "", fields);
  std::ostringstream out;
  if (format == "csv") {
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i].first);
    out << '\n';
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i].second);
    out << '\n';
  } else {
    for (const auto& [k, v] : fields) out << k << ": " << v << '\n';
  }
  return out.str();
}

// Loads the single input source (file or generator spec).
std::pair<GraphHandle, int> load_graph(const RunConfig& cfg) {
  if (cfg.input.empty() == cfg.gen.empty()) {
    std::cerr << "error: give exactly one of --input or --gen\n";
    return {nullptr, 2};
  }
  sumcolor_graph* raw = nullptr;
  sumcolor_status st;
  if (!cfg.input.empty()) {
    const auto text = read_file(cfg.input);
    if (!text) {
      std::cerr << "error: cannot read " << cfg.input << '\n';
      return {nullptr, 2};
    }
    st = sumcolor_graph_parse(text->data(), text->size(), SUMCOLOR_FORMAT_AUTO, &raw);
  } else {
    st = sumcolor_graph_generate(cfg.gen.c_str(), cfg.seed, &raw);
  }
  if (st != SUMCOLOR_OK) return {nullptr, report_failure(st)};
  return {GraphHandle(raw), 0};
}

// Runs one report-producing call and prints it.
template <typename Call>
int run_report(const RunConfig& cfg, Call&& call) {
  auto [graph, code] = load_graph(cfg);
  if (!graph) return code;
  OwnedString out;
  const sumcolor_status st = call(graph.get(), &out.ptr);
  if (out.ptr != nullptr) write_output(cfg, render(out.str(), cfg.format));
  if (st != SUMCOLOR_OK) return report_failure(st);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-sum edge colorings: approximation, exact search, constructions"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", cfg.input, "Graph file (DIMACS .col or JSON)");
    sub->add_option("--gen", cfg.gen, "Generator spec, e.g. complete:5, random-regular:10,3");
    sub->add_option("--seed", cfg.seed, "Generator seed");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--output", cfg.output, "Write output to this file");
  };

  auto* approx = app.add_subcommand("approx", "Approximate sum coloring of a regular graph");
  add_common(approx);
  auto* exact = app.add_subcommand("exact", "Exact edge-chromatic sum by branch and bound");
  add_common(exact);
  exact->add_option("--budget-ms", cfg.budget_ms, "Search time budget in milliseconds");
  auto* split = app.add_subcommand("split", "Split-graph upper bound and coloring");
  add_common(split);
  split->add_option("--condition", cfg.condition, "Degree condition")->check(CLI::IsMember({"thm10", "thm11"}));
  auto* useq = app.add_subcommand("useq", "Side-sequential coloring of a bipartite graph");
  add_common(useq);
  useq->add_option("--side", cfg.side, "Side that sees colors 1..d(u)")->check(CLI::IsMember({"U", "W"}));
  auto* verify = app.add_subcommand("verify", "Check a coloring against a graph");
  add_common(verify);
  verify->add_option("--graph", cfg.input, "Graph file (alias of --input)");
  verify->add_option("--coloring", cfg.coloring, "Coloring JSON file")->required();
  auto* gen = app.add_subcommand("gen", "Emit a generated graph (text = DIMACS)");
  add_common(gen);
  auto* bench = app.add_subcommand("bench", "Run the benchmark corpus and print CSV");
  bench->add_option("--corpus", cfg.corpus, "Families: cubic[:n,..];complete[:n,..];split[:c] or all");
  bench->add_option("--seed", cfg.seed, "Corpus seed");
  bench->add_option("--budget-ms", cfg.budget_ms, "Exact-solver budget per instance");
  bench->add_option("--output", cfg.output, "Write CSV to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version report success; real usage errors share the input-error code.
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (*approx) return run_report(cfg, [](sumcolor_graph* g, char** out) { return sumcolor_approx(g, out); });
  if (*exact) {
    return run_report(cfg, [&](sumcolor_graph* g, char** out) { return sumcolor_exact(g, cfg.budget_ms, out); });
  }
  if (*split) {
    const auto cond = cfg.condition == "thm10"   ? SUMCOLOR_SPLIT_THM10
                      : cfg.condition == "thm11" ? SUMCOLOR_SPLIT_THM11
                                                 : SUMCOLOR_SPLIT_ANY;
    return run_report(cfg, [&](sumcolor_graph* g, char** out) { return sumcolor_split(g, cond, out); });
  }
  if (*useq) {
    const auto side = cfg.side == "W" ? SUMCOLOR_SIDE_W : SUMCOLOR_SIDE_U;
    return run_report(cfg, [&](sumcolor_graph* g, char** out) { return sumcolor_useq(g, side, out); });
  }
  if (*verify) {
    const auto text = read_file(cfg.coloring);
    if (!text) {
      std::cerr << "error: cannot read " << cfg.coloring << '\n';
      return 2;
    }
    return run_report(cfg, [&](sumcolor_graph* g, char** out) {
      return sumcolor_verify(g, text->data(), text->size(), out);
    });
  }
  if (*gen) {
    auto [graph, code] = load_graph(cfg);
    if (!graph) return code;
    OwnedString out;
    const sumcolor_status st = cfg.format == "json" ? sumcolor_graph_to_json(graph.get(), &out.ptr)
                                                    : sumcolor_graph_to_dimacs(graph.get(), &out.ptr);
    if (st != SUMCOLOR_OK) return report_failure(st);
    write_output(cfg, cfg.format == "json" ? json::parse(out.str()).dump() + "\n" : out.str());
    return 0;
  }
  if (*bench) {
    OwnedString out;
    const sumcolor_status st = sumcolor_bench(cfg.corpus.c_str(), cfg.seed, cfg.budget_ms, &out.ptr);
    if (st != SUMCOLOR_OK) return report_failure(st);
    write_output(cfg, out.str());
    return 0;
  }
  return 1;
}
