#include "sumcolor/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

namespace sumcolor {

Graph::Graph(int n, std::vector<Edge> edges) : edges_(std::move(edges)) {
  if (n < 0) {
    throw ParseError("negative vertex count");
  }
  adjacency_.resize(static_cast<std::size_t>(n));
  std::set<std::pair<Vertex, Vertex>> seen;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw ParseError("vertex index out of range in edge " + std::to_string(i));
    }
    if (e.u == e.v) {
      throw ParseError("loop at vertex " + std::to_string(e.u));
    }
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert({key.first, key.second}).second) {
      throw ParseError("duplicate edge " + std::to_string(key.first) + "-" +
                       std::to_string(key.second));
    }
    const auto id = static_cast<EdgeId>(i);
    adjacency_[static_cast<std::size_t>(e.u)].push_back({e.v, id});
    adjacency_[static_cast<std::size_t>(e.v)].push_back({e.u, id});
  }
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& adj : adjacency_) {
    best = std::max(best, static_cast<int>(adj.size()));
  }
  return best;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out;
  out.reserve(adjacency_.size());
  for (const auto& adj : adjacency_) {
    out.push_back(static_cast<int>(adj.size()));
  }
  return out;
}

std::optional<int> Graph::regular_degree() const {
  if (adjacency_.empty()) {
    return std::nullopt;
  }
  const int r = degree(0);
  for (Vertex v = 1; v < vertex_count(); ++v) {
    if (degree(v) != r) {
      return std::nullopt;
    }
  }
  return r;
}

std::optional<EdgeId> Graph::find_edge(Vertex a, Vertex b) const {
  for (const Incidence& inc : incident(a)) {
    if (inc.neighbor == b) {
      return inc.edge;
    }
  }
  return std::nullopt;
}

Graph Graph::edge_subgraph(std::span<const EdgeId> keep) const {
  std::vector<Edge> kept;
  kept.reserve(keep.size());
  for (EdgeId e : keep) {
    kept.push_back(edge(e));
  }
  return Graph(vertex_count(), std::move(kept));
}

std::vector<Vertex> Bipartition::vertices(Side s) const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < part_of.size(); ++v) {
    if (part_of[v] == s) {
      out.push_back(static_cast<Vertex>(v));
    }
  }
  return out;
}

void validate_bipartition(const Graph& g, const Bipartition& bp) {
  if (static_cast<int>(bp.part_of.size()) != g.vertex_count()) {
    throw ParseError("bipartition has " + std::to_string(bp.part_of.size()) +
                     " labels for " + std::to_string(g.vertex_count()) + " vertices");
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (bp.part_of[static_cast<std::size_t>(ed.u)] == bp.part_of[static_cast<std::size_t>(ed.v)]) {
      throw ParseError("bipartition violated by edge " + std::to_string(ed.u) + "-" +
                       std::to_string(ed.v));
    }
  }
}

std::optional<Bipartition> find_bipartition(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> label(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] != -1) {
      continue;
    }
    label[s] = 0;
    std::queue<Vertex> q;
    q.push(static_cast<Vertex>(s));
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      for (const Incidence& inc : g.incident(x)) {
        auto& l = label[static_cast<std::size_t>(inc.neighbor)];
        if (l == -1) {
          l = 1 - label[static_cast<std::size_t>(x)];
          q.push(inc.neighbor);
        } else if (l == label[static_cast<std::size_t>(x)]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition bp;
  bp.part_of.reserve(n);
  for (int l : label) {
    bp.part_of.push_back(l == 0 ? Side::U : Side::W);
  }
  return bp;
}

Bipartition SplitDecomposition::h_sides(int vertex_count) const {
  Bipartition bp;
  bp.part_of.assign(static_cast<std::size_t>(vertex_count), Side::W);
  for (Vertex u : clique) {
    bp.part_of[static_cast<std::size_t>(u)] = Side::U;
  }
  return bp;
}

SplitDecomposition make_split_decomposition(const Graph& g, std::vector<Vertex> clique,
                                            std::vector<Vertex> independent) {
  const int n = g.vertex_count();
  if (clique.empty()) {
    throw ParseError("split partition: clique must be nonempty");
  }
  // 0 = unassigned, 1 = clique, 2 = independent
  std::vector<int> role(static_cast<std::size_t>(n), 0);
  auto assign = [&](Vertex v, int r) {
    if (v < 0 || v >= n) {
      throw ParseError("split partition: vertex index out of range: " + std::to_string(v));
    }
    if (role[static_cast<std::size_t>(v)] != 0) {
      throw ParseError("split partition: vertex " + std::to_string(v) + " listed twice");
    }
    role[static_cast<std::size_t>(v)] = r;
  };
  for (Vertex v : clique) assign(v, 1);
  for (Vertex v : independent) assign(v, 2);
  for (Vertex v = 0; v < n; ++v) {
    if (role[static_cast<std::size_t>(v)] == 0) {
      throw ParseError("split partition: vertex " + std::to_string(v) + " not assigned");
    }
  }

  SplitDecomposition sd;
  std::vector<EdgeId> h_edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const int ru = role[static_cast<std::size_t>(ed.u)];
    const int rv = role[static_cast<std::size_t>(ed.v)];
    if (ru == 2 && rv == 2) {
      throw ParseError("split partition: independent set contains edge " + std::to_string(ed.u) +
                       "-" + std::to_string(ed.v));
    }
    if (ru == 1 && rv == 1) {
      sd.hprime_to_g.push_back(e);
    } else {
      h_edges.push_back(e);
    }
  }
  const auto k = clique.size();
  if (sd.hprime_to_g.size() != k * (k - 1) / 2) {
    throw ParseError("split partition: clique vertices are not pairwise adjacent");
  }
  sd.h = g.edge_subgraph(h_edges);
  sd.hprime = g.edge_subgraph(sd.hprime_to_g);
  sd.h_to_g = std::move(h_edges);
  for (Vertex v : independent) {
    sd.delta_i = std::max(sd.delta_i, g.degree(v));
  }
  sd.clique = std::move(clique);
  sd.independent = std::move(independent);
  return sd;
}

}  // namespace sumcolor
