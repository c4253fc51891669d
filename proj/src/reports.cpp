#include "sumcolor/reports.hpp"

namespace sumcolor {

using nlohmann::json;

json graph_document_json(const GraphDocument& doc) {
  json out;
  out["n"] = doc.graph.vertex_count();
  json edges = json::array();
  for (const Edge& e : doc.graph.edges()) edges.push_back({e.u, e.v});
  out["edges"] = std::move(edges);
  if (doc.bipartition) {
    json labels = json::array();
    for (Side s : doc.bipartition->part_of) labels.push_back(s == Side::U ? "U" : "W");
    out["bipartition"] = std::move(labels);
  }
  if (doc.split) {
    out["split_partition"] = {{"C", doc.split->clique}, {"I", doc.split->independent}};
  }
  return out;
}

json coloring_json(const EdgeColoring& c) {
  return {{"colors", c.colors()}, {"sum", c.sum()}, {"max_color", c.max_color()}};
}

json verification_json(const VerificationReport& rep) {
  json sets = json::array();
  for (const auto& s : rep.color_sets) sets.push_back(json(s));
  json bad = json::array();
  for (const auto& [a, b] : rep.violations) bad.push_back({a, b});
  return {{"proper", rep.proper},       {"sum", rep.sum},        {"max_color", rep.max_color},
          {"violations", std::move(bad)}, {"color_sets", std::move(sets)}};
}

json approx_report_json(const ApproxReport& rep) {
  return {{"n", rep.n},
          {"r", rep.r},
          {"achieved_sum", Rational(rep.achieved_sum).str()},
          {"lower_bound", rep.lower_bound.str()},
          {"formula_upper", rep.formula_upper.str()},
          {"ratio_bound", rep.ratio_bound.str()},
          {"sequential_set_size", rep.sequential_set_size()},
          {"sequential_vertices", rep.sequential_vertices},
          {"hard_regime", rep.hard_regime},
          {"coloring", coloring_json(rep.coloring)}};
}

json exact_result_json(const ExactResult& res) {
  return {{"sum", res.sum},
          {"optimal", res.optimal},
          {"nodes_expanded", res.nodes_expanded},
          {"colors_used", res.colors_used},
          {"color_cap", res.color_cap},
          {"coloring", coloring_json(res.coloring)}};
}

json split_report_json(const SplitBoundReport& rep) {
  return {{"condition", rep.condition == SplitCondition::CliqueDominant ? "thm10" : "thm11"},
          {"parity", rep.odd_clique ? "odd" : "even"},
          {"term_clique_high", rep.terms.term_clique_high},
          {"term_clique_low", rep.terms.term_clique_low},
          {"bound", rep.bound},
          {"strategy_chosen", rep.strategy_chosen == SplitStrategy::CliqueHigh ? "A" : "B"},
          {"both_conditions_hold", rep.both_conditions_hold},
          {"coloring", coloring_json(rep.coloring)}};
}

json useq_json(const Graph& g, const Bipartition& bp, Side side, const EdgeColoring& c) {
  std::int64_t formula = 0;
  for (Vertex v : bp.vertices(side)) {
    const std::int64_t d = g.degree(v);
    formula += d * (d + 1) / 2;
  }
  return {{"side", side == Side::U ? "U" : "W"},
          {"sum", c.sum()},
          {"formula_sum", formula},
          {"sequential_vertices", bp.vertices(side)},
          {"coloring", coloring_json(c)}};
}

}  // namespace sumcolor
