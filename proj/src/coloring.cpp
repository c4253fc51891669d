#include "sumcolor/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sumcolor {

EdgeColoring::EdgeColoring(std::vector<Color> colors) : colors_(std::move(colors)) {
  for (std::size_t i = 0; i < colors_.size(); ++i) {
    if (colors_[i] < 1) {
      throw std::invalid_argument("color of edge " + std::to_string(i) + " is not positive");
    }
  }
}

std::int64_t EdgeColoring::sum() const {
  return std::accumulate(colors_.begin(), colors_.end(), std::int64_t{0});
}

Color EdgeColoring::max_color() const {
  return colors_.empty() ? 0 : *std::max_element(colors_.begin(), colors_.end());
}

int EdgeColoring::distinct_colors() const {
  return static_cast<int>(std::set<Color>(colors_.begin(), colors_.end()).size());
}

std::set<Color> EdgeColoring::colors_at(const Graph& g, Vertex v) const {
  std::set<Color> out;
  for (const Incidence& inc : g.incident(v)) {
    out.insert((*this)[inc.edge]);
  }
  return out;
}

VerificationReport verify_coloring(const Graph& g, const EdgeColoring& c) {
  if (static_cast<int>(c.size()) != g.edge_count()) {
    throw std::invalid_argument("coloring has " + std::to_string(c.size()) + " colors for " +
                                std::to_string(g.edge_count()) + " edges");
  }
  VerificationReport rep;
  rep.sum = c.sum();
  rep.max_color = c.max_color();
  rep.color_sets.reserve(static_cast<std::size_t>(g.vertex_count()));
  std::set<std::pair<EdgeId, EdgeId>> bad;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto inc = g.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        if (c[inc[i].edge] == c[inc[j].edge]) {
          bad.insert(std::minmax(inc[i].edge, inc[j].edge));
        }
      }
    }
    rep.color_sets.push_back(c.colors_at(g, v));
  }
  rep.violations.assign(bad.begin(), bad.end());
  rep.proper = rep.violations.empty();
  return rep;
}

bool is_proper(const Graph& g, const EdgeColoring& c) {
  if (static_cast<int>(c.size()) != g.edge_count()) {
    return false;
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (static_cast<int>(c.colors_at(g, v).size()) != g.degree(v)) {
      return false;
    }
  }
  return true;
}

EdgeColoring shift_colors(const EdgeColoring& c, int k) {
  if (k < 0) {
    throw std::invalid_argument("shift must be nonnegative");
  }
  std::vector<Color> out = c.colors();
  for (Color& x : out) {
    x += k;
  }
  return EdgeColoring(std::move(out));
}

}  // namespace sumcolor
