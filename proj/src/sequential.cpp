#include "sumcolor/sequential.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

#include "sumcolor/kernels.hpp"

namespace sumcolor {

MissingColorTable missing_sets(const Graph& g, const EdgeColoring& c, int t) {
  if (t < 1) throw std::invalid_argument("color count must be positive");
  if (c.max_color() > t) {
    throw std::invalid_argument("coloring uses color " + std::to_string(c.max_color()) +
                                " above t = " + std::to_string(t));
  }
  MissingColorTable table;
  table.by_color.resize(static_cast<std::size_t>(t));
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<bool> present(static_cast<std::size_t>(t + 1), false);
    for (const Incidence& inc : g.incident(v)) present[static_cast<std::size_t>(c[inc.edge])] = true;
    for (Color i = 1; i <= t; ++i) {
      if (!present[static_cast<std::size_t>(i)]) {
        table.by_color[static_cast<std::size_t>(i - 1)].push_back(v);
      }
    }
  }
  for (Color i = 1; i <= t; ++i) {
    if (table.selected == 0 || table.missing(i).size() > table.missing(table.selected).size()) {
      table.selected = i;
    }
  }
  table.selected_set = table.missing(table.selected);
  return table;
}

SequentialResult swap_to_sequential(const Graph& g, const EdgeColoring& c) {
  const auto r = g.regular_degree();
  if (!r) throw PreconditionError("regularity required");
  if (static_cast<int>(c.size()) != g.edge_count() || !is_proper(g, c)) {
    throw PreconditionError("input coloring is not proper");
  }
  const int top = *r + 1;
  if (c.max_color() > top) {
    throw PreconditionError("input coloring uses more than r+1 colors");
  }
  const MissingColorTable table = missing_sets(g, c, top);
  const Color i0 = table.selected;
  std::vector<Color> out = c.colors();
  if (i0 != top) {
    for (Color& x : out) {
      if (x == i0) {
        x = top;
      } else if (x == top) {
        x = i0;
      }
    }
  }
  return {EdgeColoring(std::move(out)), table.selected_set};
}

namespace {

// Witness edge (side vertex, other vertex) violating d(side) >= d(other), if any.
std::optional<std::pair<Vertex, Vertex>> dominance_violation(const Graph& g,
                                                             const std::vector<int>& deg,
                                                             const Bipartition& bp, Side side,
                                                             const std::vector<bool>& alive) {
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!alive[static_cast<std::size_t>(e)]) continue;
    Vertex a = g.edge(e).u;
    Vertex b = g.edge(e).v;
    if (!bp.on(a, side)) std::swap(a, b);
    if (deg[static_cast<std::size_t>(a)] < deg[static_cast<std::size_t>(b)]) {
      return std::pair{a, b};
    }
  }
  return std::nullopt;
}

}  // namespace

EdgeColoring u_sequential_color(const Graph& g, const Bipartition& bp, Side side) {
  validate_bipartition(g, bp);
  std::vector<int> deg = g.degrees();
  std::vector<bool> alive(static_cast<std::size_t>(g.edge_count()), true);
  if (auto bad = dominance_violation(g, deg, bp, side, alive)) {
    throw PreconditionError("dominance condition violated by edge " +
                            std::to_string(bad->first) + "-" + std::to_string(bad->second) +
                            " (degrees " + std::to_string(deg[static_cast<std::size_t>(bad->first)]) +
                            " < " + std::to_string(deg[static_cast<std::size_t>(bad->second)]) + ")");
  }

  std::vector<Color> colors(static_cast<std::size_t>(g.edge_count()), 0);
  for (int k = g.max_degree(); k >= 1; --k) {
    // Edges at side vertices whose current degree is k.
    std::vector<EdgeId> level;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (!alive[static_cast<std::size_t>(e)]) continue;
      Vertex a = g.edge(e).u;
      if (!bp.on(a, side)) a = g.edge(e).v;
      if (deg[static_cast<std::size_t>(a)] == k) level.push_back(e);
    }
    if (level.empty()) continue;
    const Graph sub = g.edge_subgraph(level);
    if (sub.max_degree() != k) {
      throw InternalError("peel level " + std::to_string(k) + " has wrong maximum degree");
    }
    for (EdgeId local : max_degree_saturating_matching(sub, bp)) {
      const EdgeId e = level[static_cast<std::size_t>(local)];
      colors[static_cast<std::size_t>(e)] = k;
      alive[static_cast<std::size_t>(e)] = false;
      --deg[static_cast<std::size_t>(g.edge(e).u)];
      --deg[static_cast<std::size_t>(g.edge(e).v)];
    }
    for (std::size_t v = 0; v < deg.size(); ++v) {
      if (deg[v] >= k) {
        throw InternalError("peel level " + std::to_string(k) + " left vertex " +
                            std::to_string(v) + " at degree " + std::to_string(deg[v]));
      }
    }
    if (dominance_violation(g, deg, bp, side, alive)) {
      throw InternalError("dominance lost after peel level " + std::to_string(k));
    }
  }
  EdgeColoring out(std::move(colors));
  if (!is_sequential(g, out, bp.vertices(side)) || !is_proper(g, out)) {
    throw InternalError("peeled coloring is not sequential on the chosen side");
  }
  return out;
}

bool is_sequential(const Graph& g, const EdgeColoring& c, const std::vector<Vertex>& targets) {
  for (Vertex v : targets) {
    const std::set<Color> s = c.colors_at(g, v);
    const int d = g.degree(v);
    if (static_cast<int>(s.size()) != d) return false;
    if (d > 0 && (*s.begin() != 1 || *s.rbegin() != d)) return false;
  }
  return true;
}

}  // namespace sumcolor
