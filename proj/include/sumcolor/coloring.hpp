#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "sumcolor/graph.hpp"

namespace sumcolor {

using Color = int;

/// Edge -> positive integer color map, indexed by edge id.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  /// Throws std::invalid_argument if any color is < 1.
  explicit EdgeColoring(std::vector<Color> colors);

  std::size_t size() const { return colors_.size(); }
  Color operator[](EdgeId e) const { return colors_[static_cast<std::size_t>(e)]; }
  const std::vector<Color>& colors() const { return colors_; }

  std::int64_t sum() const;
  Color max_color() const;
  int distinct_colors() const;

  /// S(v): colors on edges incident to v.
  std::set<Color> colors_at(const Graph& g, Vertex v) const;

 private:
  std::vector<Color> colors_;
};

struct VerificationReport {
  bool proper = false;
  std::int64_t sum = 0;
  Color max_color = 0;
  std::vector<std::set<Color>> color_sets;
  /// Adjacent edge pairs (first < second) sharing a color.
  std::vector<std::pair<EdgeId, EdgeId>> violations;
};

/// Throws std::invalid_argument if c does not cover exactly g's edges.
VerificationReport verify_coloring(const Graph& g, const EdgeColoring& c);

bool is_proper(const Graph& g, const EdgeColoring& c);

EdgeColoring shift_colors(const EdgeColoring& c, int k);

}  // namespace sumcolor
