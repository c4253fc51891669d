#pragma once

#include <vector>

#include "sumcolor/coloring.hpp"
#include "sumcolor/graph.hpp"

namespace sumcolor {

/// Proper edge coloring of any simple graph with colors in [1, Delta+1]
/// (Misra-Gries fan rotation, O(mn)).
EdgeColoring vizing_color(const Graph& g);

/// Proper edge coloring of a bipartite graph with colors in [1, Delta].
///
/// The graph is padded to a Delta-regular bipartite multigraph and peeled one
/// perfect matching at a time; classes are numbered by decreasing number of
/// real edges. Throws ParseError if bp does not fit g.
EdgeColoring koenig_color(const Graph& g, const Bipartition& bp);

/// Edge ids of a matching of bipartite g covering every vertex of degree
/// max_degree(g). Empty for an edgeless graph.
std::vector<EdgeId> max_degree_saturating_matching(const Graph& g, const Bipartition& bp);

struct CliqueFactorization {
  Graph graph;  // K_n on 0..n-1
  EdgeColoring coloring;
  /// Odd n: missing[i] is the single color of [offset+1, offset+n] absent at
  /// vertex i, equal to offset+i+1. Empty for even n.
  std::vector<Color> missing;
};

/// Color of clique edge {i, j} (0-based positions, i != j) in the
/// round-robin factorization of K_n with offset 0.
///
/// Odd n: class c is the perfect matching of K_n - {c-1}, so position i
/// misses color i+1. Even n: the odd factorization of positions 0..n-2 plus
/// edges {i, n-1} colored with the color missing at i.
Color clique_edge_color(int n, int i, int j);

/// Throws std::invalid_argument for n < 2 or negative offset.
CliqueFactorization clique_factorization(int n, int offset);

}  // namespace sumcolor
