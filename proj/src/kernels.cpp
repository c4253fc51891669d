#include "sumcolor/kernels.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sumcolor {

namespace {

// Color assignment state for Misra-Gries: at_[v][c] is the edge colored c at v.
class FanColorer {
 public:
  explicit FanColorer(const Graph& g)
      : g_(g),
        palette_(g.max_degree() + 1),
        color_(static_cast<std::size_t>(g.edge_count()), 0),
        at_(static_cast<std::size_t>(g.vertex_count()),
            std::vector<EdgeId>(static_cast<std::size_t>(palette_ + 1), -1)) {}

  EdgeColoring run() {
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      color_edge(e);
    }
    return EdgeColoring(color_);
  }

 private:
  bool is_free(Vertex v, Color c) const { return slot(v, c) == -1; }
  EdgeId& slot(Vertex v, Color c) {
    return at_[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)];
  }
  EdgeId slot(Vertex v, Color c) const {
    return at_[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)];
  }
  Color& color_of(EdgeId e) { return color_[static_cast<std::size_t>(e)]; }

  Color first_free(Vertex v) const {
    for (Color c = 1; c <= palette_; ++c) {
      if (is_free(v, c)) return c;
    }
    throw InternalError("no free color at vertex " + std::to_string(v));
  }

  void set(EdgeId e, Color c) {
    const Edge& ed = g_.edge(e);
    if (Color old = color_of(e); old != 0) {
      slot(ed.u, old) = -1;
      slot(ed.v, old) = -1;
    }
    color_of(e) = c;
    if (c != 0) {
      if (!is_free(ed.u, c) || !is_free(ed.v, c)) {
        throw InternalError("fan rotation produced a color clash");
      }
      slot(ed.u, c) = e;
      slot(ed.v, c) = e;
    }
  }

  std::vector<Vertex> maximal_fan(Vertex x, Vertex y) const {
    std::vector<Vertex> fan{y};
    bool extended = true;
    while (extended) {
      extended = false;
      for (const Incidence& inc : g_.incident(x)) {
        const Color c = color_[static_cast<std::size_t>(inc.edge)];
        if (c != 0 && is_free(fan.back(), c) &&
            std::find(fan.begin(), fan.end(), inc.neighbor) == fan.end()) {
          fan.push_back(inc.neighbor);
          extended = true;
        }
      }
    }
    return fan;
  }

  // Swap c and d along the maximal path from x that starts with a d-edge.
  void invert_cd_path(Vertex x, Color c, Color d) {
    std::vector<EdgeId> path;
    Vertex cur = x;
    Color want = d;
    while (true) {
      const EdgeId e = slot(cur, want);
      if (e == -1) break;
      path.push_back(e);
      cur = g_.edge(e).other(cur);
      want = want == d ? c : d;
    }
    std::vector<Color> next;
    next.reserve(path.size());
    for (EdgeId e : path) next.push_back(color_of(e) == c ? d : c);
    for (EdgeId e : path) set(e, 0);
    for (std::size_t i = 0; i < path.size(); ++i) set(path[i], next[i]);
  }

  void color_edge(EdgeId e) {
    const Vertex x = g_.edge(e).u;
    const Vertex y = g_.edge(e).v;
    const std::vector<Vertex> fan = maximal_fan(x, y);
    const Color c = first_free(x);
    const Color d = first_free(fan.back());
    invert_cd_path(x, c, d);

    auto w = std::find_if(fan.begin(), fan.end(), [&](Vertex v) { return is_free(v, d); });
    if (w == fan.end()) {
      throw InternalError("fan has no vertex free of the path color");
    }
    // Shift each fan edge's color down from its successor, then close with d.
    std::vector<EdgeId> fan_edges;
    for (auto it = fan.begin(); it != w + 1; ++it) {
      fan_edges.push_back(*g_.find_edge(x, *it));
    }
    std::vector<Color> shifted;
    for (std::size_t i = 0; i + 1 < fan_edges.size(); ++i) {
      shifted.push_back(color_of(fan_edges[i + 1]));
    }
    for (EdgeId fe : fan_edges) set(fe, 0);
    for (std::size_t i = 0; i < shifted.size(); ++i) set(fan_edges[i], shifted[i]);
    set(fan_edges.back(), d);
  }

  const Graph& g_;
  int palette_;
  std::vector<Color> color_;
  std::vector<std::vector<EdgeId>> at_;
};

// Bipartite multigraph padded to k-regularity. Left slots are U vertices then
// dummies, right slots W vertices then dummies. Filler edges carry real == -1.
class RegularBipartite {
 public:
  struct MultiEdge {
    int left;
    int right;
    EdgeId real;
  };

  RegularBipartite(const Graph& g, const Bipartition& bp) : degree_(g.max_degree()) {
    validate_bipartition(g, bp);
    std::vector<int> slot_of(static_cast<std::size_t>(g.vertex_count()));
    int left_count = 0;
    int right_count = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      slot_of[static_cast<std::size_t>(v)] = bp.on(v, Side::U) ? left_count++ : right_count++;
    }
    side_size_ = std::max(left_count, right_count);
    std::vector<int> left_deficit(static_cast<std::size_t>(side_size_), degree_);
    std::vector<int> right_deficit(static_cast<std::size_t>(side_size_), degree_);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      Vertex a = g.edge(e).u;
      Vertex b = g.edge(e).v;
      if (!bp.on(a, Side::U)) std::swap(a, b);
      const int l = slot_of[static_cast<std::size_t>(a)];
      const int r = slot_of[static_cast<std::size_t>(b)];
      edges_.push_back({l, r, e});
      --left_deficit[static_cast<std::size_t>(l)];
      --right_deficit[static_cast<std::size_t>(r)];
    }
    // Total deficits agree on both sides, so a two-pointer sweep pairs them up.
    std::size_t li = 0;
    std::size_t ri = 0;
    while (true) {
      while (li < left_deficit.size() && left_deficit[li] == 0) ++li;
      while (ri < right_deficit.size() && right_deficit[ri] == 0) ++ri;
      if (li == left_deficit.size() || ri == right_deficit.size()) break;
      edges_.push_back({static_cast<int>(li), static_cast<int>(ri), -1});
      --left_deficit[li];
      --right_deficit[ri];
    }
    alive_.assign(edges_.size(), true);
  }

  int degree() const { return degree_; }

  /// Perfect matching among alive edges; removes it from the multigraph.
  std::vector<std::size_t> take_perfect_matching() {
    std::vector<std::vector<std::size_t>> by_left(static_cast<std::size_t>(side_size_));
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (alive_[i]) by_left[static_cast<std::size_t>(edges_[i].left)].push_back(i);
    }
    std::vector<long> right_match(static_cast<std::size_t>(side_size_), -1);
    for (int l = 0; l < side_size_; ++l) {
      std::vector<char> visited(static_cast<std::size_t>(side_size_), 0);
      if (!augment(l, by_left, right_match, visited)) {
        throw InternalError("regular bipartite multigraph without perfect matching");
      }
    }
    std::vector<std::size_t> out;
    for (long idx : right_match) {
      out.push_back(static_cast<std::size_t>(idx));
      alive_[static_cast<std::size_t>(idx)] = false;
    }
    return out;
  }

  const MultiEdge& edge(std::size_t i) const { return edges_[i]; }

 private:
  bool augment(int l, const std::vector<std::vector<std::size_t>>& by_left,
               std::vector<long>& right_match, std::vector<char>& visited) {
    for (std::size_t idx : by_left[static_cast<std::size_t>(l)]) {
      const auto r = static_cast<std::size_t>(edges_[idx].right);
      if (visited[r]) continue;
      visited[r] = 1;
      if (right_match[r] == -1 ||
          augment(edges_[static_cast<std::size_t>(right_match[r])].left, by_left, right_match,
                  visited)) {
        right_match[r] = static_cast<long>(idx);
        return true;
      }
    }
    return false;
  }

  int degree_;
  int side_size_ = 0;
  std::vector<MultiEdge> edges_;
  std::vector<bool> alive_;
};

}  // namespace

EdgeColoring vizing_color(const Graph& g) {
  return FanColorer(g).run();
}

std::vector<EdgeId> max_degree_saturating_matching(const Graph& g, const Bipartition& bp) {
  RegularBipartite rb(g, bp);
  if (rb.degree() == 0) return {};
  std::vector<EdgeId> out;
  for (std::size_t idx : rb.take_perfect_matching()) {
    if (rb.edge(idx).real >= 0) out.push_back(rb.edge(idx).real);
  }
  std::sort(out.begin(), out.end());
  return out;
}

EdgeColoring koenig_color(const Graph& g, const Bipartition& bp) {
  RegularBipartite rb(g, bp);
  std::vector<std::vector<EdgeId>> classes;
  for (int k = 0; k < rb.degree(); ++k) {
    std::vector<EdgeId> cls;
    for (std::size_t idx : rb.take_perfect_matching()) {
      if (rb.edge(idx).real >= 0) cls.push_back(rb.edge(idx).real);
    }
    classes.push_back(std::move(cls));
  }
  std::stable_sort(classes.begin(), classes.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  std::vector<Color> colors(static_cast<std::size_t>(g.edge_count()), 0);
  for (std::size_t k = 0; k < classes.size(); ++k) {
    for (EdgeId e : classes[k]) colors[static_cast<std::size_t>(e)] = static_cast<Color>(k + 1);
  }
  return EdgeColoring(std::move(colors));
}

Color clique_edge_color(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  if (n % 2 == 0) {
    const int odd = n - 1;
    if (j == odd) return i + 1;
    return clique_edge_color(odd, i, j);
  }
  const int half = (n + 1) / 2;  // inverse of 2 mod n
  return static_cast<Color>((static_cast<long>(i + j) * half) % n) + 1;
}

CliqueFactorization clique_factorization(int n, int offset) {
  if (n < 2) throw std::invalid_argument("clique factorization needs n >= 2");
  if (offset < 0) throw std::invalid_argument("offset must be nonnegative");
  std::vector<Edge> edges;
  std::vector<Color> colors;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      edges.push_back({i, j});
      colors.push_back(offset + clique_edge_color(n, i, j));
    }
  }
  CliqueFactorization out{Graph(n, std::move(edges)), EdgeColoring(std::move(colors)), {}};
  if (n % 2 == 1) {
    for (int i = 0; i < n; ++i) out.missing.push_back(offset + i + 1);
  }
  return out;
}

}  // namespace sumcolor
