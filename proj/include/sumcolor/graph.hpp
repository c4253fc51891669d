#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sumcolor/errors.hpp"

namespace sumcolor {

using Vertex = int;
using EdgeId = int;

struct Edge {
  Vertex u;
  Vertex v;

  Vertex other(Vertex x) const { return x == u ? v : u; }
  bool operator==(const Edge&) const = default;
};

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

/// Undirected simple graph on vertices 0..n-1 with indexed edges.
///
/// Construction validates the edge list: loops, duplicate unordered pairs and
/// out-of-range endpoints raise ParseError. Once built a Graph is immutable.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Incidence> incident(Vertex v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }

  int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }
  int max_degree() const;
  std::vector<int> degrees() const;

  /// Common degree when every vertex has the same degree. Empty for n = 0.
  std::optional<int> regular_degree() const;

  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;

  /// Subgraph on the same vertex set keeping the listed edges, in order.
  Graph edge_subgraph(std::span<const EdgeId> keep) const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

enum class Side { U, W };

/// Per-vertex side label of a bipartite graph.
struct Bipartition {
  std::vector<Side> part_of;

  bool on(Vertex v, Side s) const { return part_of[static_cast<std::size_t>(v)] == s; }
  std::vector<Vertex> vertices(Side s) const;
};

/// Throws ParseError unless every edge joins U to W and sizes agree.
void validate_bipartition(const Graph& g, const Bipartition& bp);

/// Try to 2-color g. Empty when g has an odd cycle.
std::optional<Bipartition> find_bipartition(const Graph& g);

/// Edge-wise degree condition on a split graph, for every edge uv with u in
/// the clique C and v in the independent set:
///   CliqueDominant:      d(u) - d(v) >= |C| - 1
///   IndependentDominant: d(u) - d(v) <= |C| - 1
enum class SplitCondition { CliqueDominant, IndependentDominant };

/// Clique/independent-set partition of a split graph with the derived
/// bipartite part H (edges between C and I) and clique part H' = G[C].
///
/// H and H' share G's vertex numbering; h_to_g / hprime_to_g map their edge
/// ids back to edge ids of G.
struct SplitDecomposition {
  std::vector<Vertex> clique;       // u_1..u_n in order
  std::vector<Vertex> independent;  // v_1..v_m
  Graph h;
  Graph hprime;
  std::vector<EdgeId> h_to_g;
  std::vector<EdgeId> hprime_to_g;
  int delta_i = 0;

  int clique_size() const { return static_cast<int>(clique.size()); }
  /// Bipartition of H with C on side U and I on side W.
  Bipartition h_sides(int vertex_count) const;
};

/// Validates the partition (C a clique, I independent, C and I partition the
/// vertex set, C nonempty) and derives H, H' and delta_I. Throws ParseError.
SplitDecomposition make_split_decomposition(const Graph& g, std::vector<Vertex> clique,
                                            std::vector<Vertex> independent);

/// A graph together with whatever partition metadata came with it.
struct GraphDocument {
  Graph graph;
  std::optional<Bipartition> bipartition;
  std::optional<SplitDecomposition> split;
};

}  // namespace sumcolor
