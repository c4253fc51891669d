#include "sumcolor/generators.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace sumcolor {

Graph gen_complete(int n) {
  if (n < 1) throw PreconditionError("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph(n, std::move(edges));
}

Graph gen_cycle(int n) {
  if (n < 3) throw PreconditionError("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, std::move(edges));
}

Graph gen_path(int n) {
  if (n < 1) throw PreconditionError("path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph gen_petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5});
  for (int i = 0; i < 5; ++i) edges.push_back({i, i + 5});
  for (int i = 0; i < 5; ++i) edges.push_back({5 + i, 5 + (i + 2) % 5});
  return Graph(10, std::move(edges));
}

Graph gen_random_regular(int n, int r, std::uint64_t seed) {
  if (n < 1 || r < 0) throw PreconditionError("need n >= 1 and r >= 0");
  if ((static_cast<long>(n) * r) % 2 != 0) throw PreconditionError("n*r must be even");
  if (r >= n) throw PreconditionError("r must be smaller than n");

  constexpr int kMaxAttempts = 1000;
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Vertex> points;
    for (Vertex v = 0; v < n; ++v) points.insert(points.end(), static_cast<std::size_t>(r), v);
    std::shuffle(points.begin(), points.end(), rng);
    std::set<std::pair<Vertex, Vertex>> present;
    std::vector<Edge> edges;
    bool stuck = false;
    while (!points.empty()) {
      const Vertex a = points.back();
      points.pop_back();
      std::vector<std::size_t> ok;
      for (std::size_t i = 0; i < points.size(); ++i) {
        const Vertex b = points[i];
        if (b != a && !present.count(std::minmax(a, b))) ok.push_back(i);
      }
      if (ok.empty()) {
        stuck = true;
        break;
      }
      std::uniform_int_distribution<std::size_t> pick(0, ok.size() - 1);
      const std::size_t i = ok[pick(rng)];
      const Vertex b = points[i];
      points[i] = points.back();
      points.pop_back();
      present.insert(std::minmax(a, b));
      edges.push_back({std::min(a, b), std::max(a, b)});
    }
    if (!stuck) {
      std::sort(edges.begin(), edges.end(),
                [](const Edge& x, const Edge& y) { return std::tie(x.u, x.v) < std::tie(y.u, y.v); });
      return Graph(n, std::move(edges));
    }
  }
  throw std::runtime_error("random regular generation failed after " +
                           std::to_string(kMaxAttempts) + " attempts");
}

namespace {

// Unit-capacity bipartite degree realization by augmenting paths over a
// randomly ordered arc set. `allowed(i, j)` filters U-slot i to W-slot j.
GraphDocument realize_bipartite(const std::vector<int>& ud, const std::vector<int>& wd,
                                std::uint64_t seed,
                                const std::function<bool(std::size_t, std::size_t)>& allowed) {
  const std::size_t nu = ud.size();
  const std::size_t nw = wd.size();
  for (int d : ud) {
    if (d < 0 || static_cast<std::size_t>(d) > nw) throw PreconditionError("infeasible degree plan");
  }
  for (int d : wd) {
    if (d < 0 || static_cast<std::size_t>(d) > nu) throw PreconditionError("infeasible degree plan");
  }
  if (std::accumulate(ud.begin(), ud.end(), 0) != std::accumulate(wd.begin(), wd.end(), 0)) {
    throw PreconditionError("infeasible degree plan: side degree sums differ");
  }

  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::size_t>> arcs(nu);
  for (std::size_t i = 0; i < nu; ++i) {
    for (std::size_t j = 0; j < nw; ++j) {
      if (allowed(i, j)) arcs[i].push_back(j);
    }
    std::shuffle(arcs[i].begin(), arcs[i].end(), rng);
  }
  std::vector<std::vector<bool>> used(nu, std::vector<bool>(nw, false));
  std::vector<int> wload(nw, 0);

  // One unit from U-slot i to any W-slot with spare capacity, possibly
  // rerouting existing units through alternating paths.
  std::function<bool(std::size_t, std::vector<bool>&)> push = [&](std::size_t i,
                                                                  std::vector<bool>& seen) {
    for (std::size_t j : arcs[i]) {
      if (used[i][j] || seen[j]) continue;
      seen[j] = true;
      if (wload[j] < wd[j]) {
        used[i][j] = true;
        ++wload[j];
        return true;
      }
      for (std::size_t k = 0; k < nu; ++k) {
        if (k != i && used[k][j] && push(k, seen)) {
          used[k][j] = false;
          used[i][j] = true;
          return true;
        }
      }
    }
    return false;
  };

  std::vector<std::size_t> order(nu);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i : order) {
    for (int k = 0; k < ud[i]; ++k) {
      std::vector<bool> seen(nw, false);
      if (!push(i, seen)) throw PreconditionError("infeasible degree plan");
    }
  }

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < nu; ++i) {
    for (std::size_t j = 0; j < nw; ++j) {
      if (used[i][j]) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(nu + j)});
    }
  }
  GraphDocument doc;
  doc.graph = Graph(static_cast<int>(nu + nw), std::move(edges));
  Bipartition bp;
  bp.part_of.assign(nu, Side::U);
  bp.part_of.insert(bp.part_of.end(), nw, Side::W);
  doc.bipartition = std::move(bp);
  return doc;
}

}  // namespace

GraphDocument gen_bipartite(const std::vector<int>& u_degrees, const std::vector<int>& w_degrees,
                            std::uint64_t seed) {
  return realize_bipartite(u_degrees, w_degrees, seed,
                           [](std::size_t, std::size_t) { return true; });
}

GraphDocument gen_bipartite_dominant(const std::vector<int>& u_degrees,
                                     const std::vector<int>& w_degrees, std::uint64_t seed) {
  return realize_bipartite(u_degrees, w_degrees, seed, [&](std::size_t i, std::size_t j) {
    return u_degrees[i] >= w_degrees[j];
  });
}

GraphDocument gen_split(int clique_size, int independent_size, SplitCondition condition,
                        std::uint64_t seed) {
  if (clique_size < 1 || independent_size < 0) {
    throw PreconditionError("split graph needs clique size >= 1 and independent size >= 0");
  }
  const int n = clique_size + independent_size;
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);

  std::vector<Edge> cross;
  for (int v = clique_size; v < n; ++v) {
    for (int u = 0; u < clique_size; ++u) {
      if (coin(rng)) cross.push_back({u, v});
    }
  }
  // Drop the first offending cross edge until the H-degree condition holds.
  while (true) {
    std::vector<int> hdeg(static_cast<std::size_t>(n), 0);
    for (const Edge& e : cross) {
      ++hdeg[static_cast<std::size_t>(e.u)];
      ++hdeg[static_cast<std::size_t>(e.v)];
    }
    auto bad = std::find_if(cross.begin(), cross.end(), [&](const Edge& e) {
      const int du = hdeg[static_cast<std::size_t>(e.u)];
      const int dv = hdeg[static_cast<std::size_t>(e.v)];
      return condition == SplitCondition::CliqueDominant ? du < dv : du > dv;
    });
    if (bad == cross.end()) break;
    cross.erase(bad);
  }

  std::vector<Edge> edges;
  std::vector<Vertex> clique;
  std::vector<Vertex> independent;
  for (int u = 0; u < clique_size; ++u) {
    clique.push_back(u);
    for (int w = u + 1; w < clique_size; ++w) edges.push_back({u, w});
  }
  for (int v = clique_size; v < n; ++v) independent.push_back(v);
  edges.insert(edges.end(), cross.begin(), cross.end());

  GraphDocument doc;
  doc.graph = Graph(n, std::move(edges));
  doc.split = make_split_decomposition(doc.graph, std::move(clique), std::move(independent));
  return doc;
}

}  // namespace sumcolor

namespace sumcolor {

namespace {

std::vector<int> ints(const std::string& text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t used = 0;
    out.push_back(std::stoi(item, &used));
    if (used != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

GraphDocument with_bipartition(Graph g, int u_count) {
  Bipartition bp;
  for (Vertex v = 0; v < g.vertex_count(); ++v) bp.part_of.push_back(v < u_count ? Side::U : Side::W);
  return {std::move(g), std::move(bp), {}};
}

}  // namespace

GraphDocument generate_from_spec(const std::string& spec, std::uint64_t seed) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto need = [&](std::size_t count) {
    std::vector<int> v;
    try {
      v = args.empty() ? std::vector<int>{} : ints(args);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("malformed generator arguments in '" + spec + "'");
    }
    if (v.size() != count) {
      throw std::invalid_argument("generator '" + kind + "' expects " + std::to_string(count) +
                                  " argument(s)");
    }
    return v;
  };

  if (kind == "petersen") return {gen_petersen(), {}, {}};
  if (kind == "complete") return {gen_complete(need(1)[0]), {}, {}};
  if (kind == "cycle") return {gen_cycle(need(1)[0]), {}, {}};
  if (kind == "path") return {gen_path(need(1)[0]), {}, {}};
  if (kind == "random-regular") {
    const auto a = need(2);
    return {gen_random_regular(a[0], a[1], seed), {}, {}};
  }
  if (kind == "complete-bipartite" || kind == "star") {
    const auto a = kind == "star" ? std::vector<int>{1, need(1)[0]} : need(2);
    if (a[0] < 0 || a[1] < 0) throw std::invalid_argument("negative side size");
    std::vector<Edge> edges;
    for (int u = 0; u < a[0]; ++u) {
      for (int w = 0; w < a[1]; ++w) edges.push_back({u, a[0] + w});
    }
    return with_bipartition(Graph(a[0] + a[1], std::move(edges)), a[0]);
  }
  if (kind == "bipartite") {
    const auto slash = args.find('/');
    if (slash == std::string::npos) throw std::invalid_argument("bipartite spec needs U/W degrees");
    try {
      return gen_bipartite_dominant(ints(args.substr(0, slash)), ints(args.substr(slash + 1)), seed);
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const InternalError*>(&e)) throw;
      throw std::invalid_argument("malformed bipartite degree lists in '" + spec + "'");
    }
  }
  if (kind == "split") {
    const auto last = args.rfind(',');
    if (last == std::string::npos) throw std::invalid_argument("split spec is split:C,I,thm10|thm11");
    const std::string cond = args.substr(last + 1);
    if (cond != "thm10" && cond != "thm11") {
      throw std::invalid_argument("split condition must be thm10 or thm11");
    }
    const auto sizes = ints(args.substr(0, last));
    if (sizes.size() != 2) throw std::invalid_argument("split spec is split:C,I,thm10|thm11");
    return gen_split(sizes[0], sizes[1],
                     cond == "thm10" ? SplitCondition::CliqueDominant : SplitCondition::IndependentDominant,
                     seed);
  }
  throw std::invalid_argument("unknown generator '" + kind + "'");
}

}  // namespace sumcolor
