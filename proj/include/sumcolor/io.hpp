#pragma once

#include <string>
#include <string_view>

#include "sumcolor/coloring.hpp"
#include "sumcolor/graph.hpp"

namespace sumcolor {

enum class GraphFormat { Auto, Dimacs, Json };

/// DIMACS edge format: "c ..." comments, one "p edge <n> <m>" header, then
/// m lines "e <u> <v>" with 1-based endpoints. Throws ParseError.
GraphDocument parse_dimacs(std::string_view text);

/// JSON graph document:
///   {"n": 3, "edges": [[0,1],[1,2]],
///    "bipartition": ["U","W","U"],            (optional)
///    "split_partition": {"C": [0,1], "I": [2]}} (optional)
/// Throws ParseError.
GraphDocument parse_graph_json(std::string_view text);

/// Auto picks JSON when the first non-blank character is '{'.
GraphDocument parse_graph(std::string_view text, GraphFormat format = GraphFormat::Auto);

std::string to_dimacs(const Graph& g);
std::string to_json(const GraphDocument& doc);

/// {"colors": [...], "sum": s, "max_color": c}; only `colors` is read back,
/// `sum` and `max_color` are checked when present. Throws ParseError.
EdgeColoring parse_coloring_json(std::string_view text);
std::string to_json(const EdgeColoring& c);

}  // namespace sumcolor
