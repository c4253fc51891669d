#include "sumcolor/io.hpp"

#include "json.hpp"
#include <sstream>
#include <stdexcept>

#include "sumcolor/reports.hpp"

namespace sumcolor {

using nlohmann::json;

namespace {

std::string line_error(int line, const std::string& what) {
  return "line " + std::to_string(line) + ": " + what;
}

}  // namespace

GraphDocument parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  long declared_n = -1;
  long declared_m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      if (declared_n >= 0) throw ParseError(line_error(line_no, "duplicate header"));
      if (!(ls >> kind >> declared_n >> declared_m) || kind != "edge" || declared_n < 0 ||
          declared_m < 0) {
        throw ParseError(line_error(line_no, "malformed header, expected 'p edge <n> <m>'"));
      }
      std::string rest;
      if (ls >> rest) throw ParseError(line_error(line_no, "malformed header, trailing tokens"));
    } else if (tag == "e") {
      if (declared_n < 0) throw ParseError(line_error(line_no, "edge before header"));
      long u = 0;
      long v = 0;
      std::string rest;
      if (!(ls >> u >> v) || (ls >> rest)) {
        throw ParseError(line_error(line_no, "malformed edge line"));
      }
      if (u < 1 || u > declared_n || v < 1 || v > declared_n) {
        throw ParseError(line_error(line_no, "vertex index out of range"));
      }
      edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
    } else {
      throw ParseError(line_error(line_no, "unknown line type '" + tag + "'"));
    }
  }
  if (declared_n < 0) throw ParseError("malformed header: missing 'p edge' line");
  if (static_cast<long>(edges.size()) != declared_m) {
    throw ParseError("edge count mismatch: header declares " + std::to_string(declared_m) +
                     ", found " + std::to_string(edges.size()));
  }
  return GraphDocument{Graph(static_cast<int>(declared_n), std::move(edges)), {}, {}};
}

GraphDocument parse_graph_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
      throw ParseError("graph document needs fields 'n' and 'edges'");
    }
    const long n = doc.at("n").get<long>();
    if (n < 0) throw ParseError("'n' must be nonnegative");
    std::vector<Edge> edges;
    for (const json& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a 2-array");
      const long u = e[0].get<long>();
      const long v = e[1].get<long>();
      if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError("vertex index out of range");
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    GraphDocument out{Graph(static_cast<int>(n), std::move(edges)), {}, {}};
    if (doc.contains("bipartition")) {
      Bipartition bp;
      for (const json& label : doc.at("bipartition")) {
        const auto s = label.get<std::string>();
        if (s != "U" && s != "W") throw ParseError("bipartition labels must be \"U\" or \"W\"");
        bp.part_of.push_back(s == "U" ? Side::U : Side::W);
      }
      validate_bipartition(out.graph, bp);
      out.bipartition = std::move(bp);
    }
    if (doc.contains("split_partition")) {
      const json& sp = doc.at("split_partition");
      if (!sp.is_object() || !sp.contains("C") || !sp.contains("I")) {
        throw ParseError("split_partition needs fields 'C' and 'I'");
      }
      out.split = make_split_decomposition(out.graph, sp.at("C").get<std::vector<Vertex>>(),
                                           sp.at("I").get<std::vector<Vertex>>());
    }
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad graph document: ") + e.what());
  }
}

GraphDocument parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::Auto) {
    const auto first = text.find_first_not_of(" \t\r\n");
    format = first != std::string_view::npos && text[first] == '{' ? GraphFormat::Json
                                                                   : GraphFormat::Dimacs;
  }
  return format == GraphFormat::Json ? parse_graph_json(text) : parse_dimacs(text);
}

std::string to_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

std::string to_json(const GraphDocument& doc) {
  return graph_document_json(doc).dump();
}

EdgeColoring parse_coloring_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    if (!doc.is_object() || !doc.contains("colors")) {
      throw ParseError("coloring document needs field 'colors'");
    }
    std::vector<Color> colors;
    for (const json& c : doc.at("colors")) {
      const long x = c.get<long>();
      if (x < 1) throw ParseError("colors must be positive integers");
      colors.push_back(static_cast<Color>(x));
    }
    EdgeColoring out(std::move(colors));
    if (doc.contains("sum") && doc.at("sum").get<std::int64_t>() != out.sum()) {
      throw ParseError("coloring 'sum' disagrees with its colors");
    }
    if (doc.contains("max_color") && doc.at("max_color").get<long>() != out.max_color()) {
      throw ParseError("coloring 'max_color' disagrees with its colors");
    }
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad coloring document: ") + e.what());
  }
}

std::string to_json(const EdgeColoring& c) {
  return coloring_json(c).dump();
}

}  // namespace sumcolor
