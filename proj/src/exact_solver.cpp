#include "sumcolor/exact_solver.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <string>

namespace sumcolor {

namespace {

using Mask = std::uint64_t;
constexpr std::int64_t kInfinity = std::numeric_limits<std::int64_t>::max() / 4;

class BranchAndBound {
 public:
  BranchAndBound(const Graph& g, const ExactOptions& opt)
      : g_(g),
        cap_(opt.color_cap > 0 ? opt.color_cap : std::max(1, 2 * g.max_degree() - 1)),
        deadline_(std::chrono::steady_clock::now() + opt.budget),
        color_(static_cast<std::size_t>(g.edge_count()), 0),
        used_(static_cast<std::size_t>(g.vertex_count()), 0),
        open_(g.degrees()) {
    if (cap_ > 63) throw PreconditionError("exact solver supports at most 63 colors");
    order_.resize(static_cast<std::size_t>(g.edge_count()));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](EdgeId a, EdgeId b) {
      return weight(a) > weight(b);
    });
  }

  ExactResult run() {
    ExactResult res;
    res.color_cap = cap_;
    seed_incumbent();
    root_bound_ = bound();
    if (best_sum_ > root_bound_) search(0, 0);
    res.optimal = !timed_out_ && best_sum_ < kInfinity;
    res.nodes_expanded = nodes_;
    if (best_sum_ >= kInfinity) {
      // Only reachable with a user cap below the chromatic index.
      throw PreconditionError("no proper coloring within color cap " + std::to_string(cap_));
    }
    res.sum = best_sum_;
    res.coloring = EdgeColoring(best_);
    res.colors_used = res.coloring.distinct_colors();
    return res;
  }

 private:
  int weight(EdgeId e) const { return g_.degree(g_.edge(e).u) + g_.degree(g_.edge(e).v); }

  static Mask bit(Color c) { return Mask{1} << c; }

  void assign(EdgeId e, Color c) {
    const Edge& ed = g_.edge(e);
    color_[static_cast<std::size_t>(e)] = c;
    used_[static_cast<std::size_t>(ed.u)] |= bit(c);
    used_[static_cast<std::size_t>(ed.v)] |= bit(c);
    --open_[static_cast<std::size_t>(ed.u)];
    --open_[static_cast<std::size_t>(ed.v)];
  }

  void unassign(EdgeId e) {
    const Edge& ed = g_.edge(e);
    const Color c = color_[static_cast<std::size_t>(e)];
    color_[static_cast<std::size_t>(e)] = 0;
    used_[static_cast<std::size_t>(ed.u)] &= ~bit(c);
    used_[static_cast<std::size_t>(ed.v)] &= ~bit(c);
    ++open_[static_cast<std::size_t>(ed.u)];
    ++open_[static_cast<std::size_t>(ed.v)];
  }

  // First-fit in branching order.
  void seed_incumbent() {
    for (EdgeId e : order_) {
      const Edge& ed = g_.edge(e);
      const Mask busy = used_[static_cast<std::size_t>(ed.u)] | used_[static_cast<std::size_t>(ed.v)];
      Color c = 1;
      while (c <= cap_ && (busy & bit(c))) ++c;
      if (c > cap_) {
        for (EdgeId x : order_) {
          if (color_[static_cast<std::size_t>(x)] != 0) unassign(x);
        }
        return;
      }
      assign(e, c);
    }
    best_ = color_;
    best_sum_ = std::accumulate(color_.begin(), color_.end(), std::int64_t{0});
    for (EdgeId e : order_) unassign(e);
  }

  // Lower bound on the sum of colors still to be placed; kInfinity if the
  // remaining edges cannot be colored within the cap.
  std::int64_t bound() const {
    const int n = g_.vertex_count();
    std::int64_t remaining_edges = 0;
    std::int64_t per_edge = 0;
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      if (color_[static_cast<std::size_t>(e)] != 0) continue;
      ++remaining_edges;
      const Edge& ed = g_.edge(e);
      const Mask busy = used_[static_cast<std::size_t>(ed.u)] | used_[static_cast<std::size_t>(ed.v)];
      const Mask free = ~busy & ~Mask{1};
      const int c = std::countr_zero(free);
      if (c > cap_) return kInfinity;
      per_edge += c;
    }
    if (remaining_edges == 0) return 0;

    std::int64_t per_vertex = 0;
    for (Vertex v = 0; v < n; ++v) {
      int need = open_[static_cast<std::size_t>(v)];
      Mask free = ~used_[static_cast<std::size_t>(v)] & ~Mask{1};
      while (need > 0) {
        const int c = std::countr_zero(free);
        if (c > cap_) return kInfinity;
        per_vertex += c;
        free &= free - 1;
        --need;
      }
    }
    per_vertex = (per_vertex + 1) / 2;

    // Color c can still absorb at most floor(|F_c|/2) edges, where F_c holds
    // the open vertices not yet using c.
    std::int64_t per_color = 0;
    std::int64_t left = remaining_edges;
    for (Color c = 1; c <= cap_ && left > 0; ++c) {
      int free_vertices = 0;
      for (Vertex v = 0; v < n; ++v) {
        if (open_[static_cast<std::size_t>(v)] > 0 && !(used_[static_cast<std::size_t>(v)] & bit(c))) {
          ++free_vertices;
        }
      }
      const std::int64_t take = std::min<std::int64_t>(left, free_vertices / 2);
      per_color += take * c;
      left -= take;
    }
    if (left > 0) return kInfinity;

    return std::max({per_edge, per_vertex, per_color});
  }

  bool out_of_time() {
    if ((nodes_ & 0x3ff) == 0 && std::chrono::steady_clock::now() > deadline_) timed_out_ = true;
    return timed_out_;
  }

  void search(std::size_t depth, std::int64_t partial) {
    ++nodes_;
    if (out_of_time()) return;
    if (depth == order_.size()) {
      if (partial < best_sum_) {
        best_sum_ = partial;
        best_ = color_;
      }
      return;
    }
    const EdgeId e = order_[depth];
    const Edge& ed = g_.edge(e);
    for (Color c = 1; c <= cap_; ++c) {
      if (partial + c >= best_sum_) break;
      const Mask busy = used_[static_cast<std::size_t>(ed.u)] | used_[static_cast<std::size_t>(ed.v)];
      if (busy & bit(c)) continue;
      assign(e, c);
      const std::int64_t rest = bound();
      if (rest < kInfinity && partial + c + rest < best_sum_) search(depth + 1, partial + c);
      unassign(e);
      if (timed_out_ || best_sum_ == root_bound_) return;
    }
  }

  const Graph& g_;
  int cap_;
  std::chrono::steady_clock::time_point deadline_;
  std::vector<EdgeId> order_;
  std::vector<Color> color_;
  std::vector<Mask> used_;
  std::vector<int> open_;
  std::vector<Color> best_;
  std::int64_t best_sum_ = kInfinity;
  std::int64_t root_bound_ = 0;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace

ExactResult exact_sum(const Graph& g, const ExactOptions& options) {
  if (g.edge_count() > options.max_edges) {
    throw PreconditionError("exact solver limited to " + std::to_string(options.max_edges) +
                            " edges, graph has " + std::to_string(g.edge_count()));
  }
  if (g.edge_count() == 0) {
    ExactResult empty;
    empty.optimal = true;
    return empty;
  }
  return BranchAndBound(g, options).run();
}

std::int64_t general_lower_bound(const Graph& g) {
  std::int64_t twice = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const std::int64_t d = g.degree(v);
    twice += d * (d + 1) / 2;
  }
  return (twice + 1) / 2;
}

std::int64_t bipartite_onesided_lower_bound(const Graph& g, const Bipartition& bp, Side side) {
  validate_bipartition(g, bp);
  std::int64_t total = 0;
  for (Vertex v : bp.vertices(side)) {
    const std::int64_t d = g.degree(v);
    total += d * (d + 1) / 2;
  }
  return total;
}

namespace {

class SequentialSearch {
 public:
  SequentialSearch(const Graph& g, const Bipartition& bp, SequentialTargets targets)
      : g_(g),
        color_(static_cast<std::size_t>(g.edge_count()), 0),
        used_(static_cast<std::size_t>(g.vertex_count()), 0) {
    const int delta = g.max_degree();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      int lim = delta;
      for (Vertex x : {g.edge(e).u, g.edge(e).v}) {
        if (targets == SequentialTargets::AllVertices || bp.on(x, Side::U)) {
          lim = std::min(lim, g.degree(x));
        }
      }
      limit_.push_back(lim);
    }
  }

  bool solve() { return extend(g_.edge_count()); }

 private:
  Mask options(EdgeId e) const {
    const Mask allowed = ((Mask{1} << (limit_[static_cast<std::size_t>(e)] + 1)) - 1) & ~Mask{1};
    return allowed & ~used_[static_cast<std::size_t>(g_.edge(e).u)] &
           ~used_[static_cast<std::size_t>(g_.edge(e).v)];
  }

  // Most-constrained edge first.
  bool extend(int open) {
    if (open == 0) return true;
    EdgeId pick = -1;
    int fewest = 64;
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      if (color_[static_cast<std::size_t>(e)] != 0) continue;
      const int k = std::popcount(options(e));
      if (k < fewest) {
        fewest = k;
        pick = e;
      }
    }
    if (fewest == 0) return false;
    Mask avail = options(pick);
    const Edge& ed = g_.edge(pick);
    while (avail) {
      const Color c = std::countr_zero(avail);
      avail &= avail - 1;
      color_[static_cast<std::size_t>(pick)] = c;
      used_[static_cast<std::size_t>(ed.u)] |= Mask{1} << c;
      used_[static_cast<std::size_t>(ed.v)] |= Mask{1} << c;
      if (extend(open - 1)) return true;
      used_[static_cast<std::size_t>(ed.u)] &= ~(Mask{1} << c);
      used_[static_cast<std::size_t>(ed.v)] &= ~(Mask{1} << c);
      color_[static_cast<std::size_t>(pick)] = 0;
    }
    return false;
  }

  const Graph& g_;
  std::vector<int> limit_;
  std::vector<Color> color_;
  std::vector<Mask> used_;
};

}  // namespace

bool decide_sequential(const Graph& g, const Bipartition& bp, SequentialTargets targets) {
  validate_bipartition(g, bp);
  if (g.max_degree() > 62) throw PreconditionError("degree too large for sequential search");
  return SequentialSearch(g, bp, targets).solve();
}

}  // namespace sumcolor
