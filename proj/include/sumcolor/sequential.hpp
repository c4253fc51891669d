#pragma once

#include <vector>

#include "sumcolor/coloring.hpp"
#include "sumcolor/graph.hpp"

namespace sumcolor {

/// Vertices missing each color of a t-coloring.
struct MissingColorTable {
  /// by_color[i-1] = { v : color i not in S(v) } for i = 1..t.
  std::vector<std::vector<Vertex>> by_color;
  Color selected = 0;  // smallest color whose set is largest
  std::vector<Vertex> selected_set;

  int colors() const { return static_cast<int>(by_color.size()); }
  const std::vector<Vertex>& missing(Color i) const {
    return by_color[static_cast<std::size_t>(i - 1)];
  }
};

/// Throws std::invalid_argument if some color exceeds t or t < 1.
MissingColorTable missing_sets(const Graph& g, const EdgeColoring& c, int t);

struct SequentialResult {
  EdgeColoring coloring;
  std::vector<Vertex> sequential_vertices;  // R
};

/// Turns a proper (r+1)-coloring of an r-regular graph into an R-sequential
/// one by transposing the most-missed color with r+1.
///
/// Throws PreconditionError if g is not regular or c is improper or uses a
/// color above r+1.
SequentialResult swap_to_sequential(const Graph& g, const EdgeColoring& c);

/// Proper Delta-coloring in which every vertex u on `side` sees exactly
/// {1..d(u)}. Requires d(u) >= d(w) for every edge uw with u on `side`;
/// otherwise throws PreconditionError naming a witness edge.
///
/// Colors are peeled from Delta down: at level k a matching covering every
/// current degree-k vertex, using only edges at side vertices of degree k,
/// receives color k.
EdgeColoring u_sequential_color(const Graph& g, const Bipartition& bp, Side side);

/// True iff every target v has S(v) = {1..d(v)}.
bool is_sequential(const Graph& g, const EdgeColoring& c, const std::vector<Vertex>& targets);

}  // namespace sumcolor
