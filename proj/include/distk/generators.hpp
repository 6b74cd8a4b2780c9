#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "distance.hpp"
#include "graph.hpp"

namespace distk {

// ---------------------------------------------------------------------------
// Small families

inline Graph path_graph(Vertex n) {
  if (n < 1) throw std::invalid_argument("path: need n >= 1");
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, std::move(e));
}

inline Graph cycle_graph(Vertex n) {
  if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph(n, std::move(e));
}

/// w x h grid, vertex (x, y) has id y * w + x.
inline Graph grid_graph(Vertex w, Vertex h) {
  if (w < 1 || h < 1) throw std::invalid_argument("grid: need positive sides");
  std::vector<Edge> e;
  for (Vertex y = 0; y < h; ++y)
    for (Vertex x = 0; x < w; ++x) {
      if (x + 1 < w) e.push_back({y * w + x, y * w + x + 1});
      if (y + 1 < h) e.push_back({y * w + x, (y + 1) * w + x});
    }
  return Graph(w * h, std::move(e));
}

/// K_{1,leaves}; the center is vertex 0.
inline Graph star_graph(Vertex leaves) {
  if (leaves < 1) throw std::invalid_argument("star: need at least one leaf");
  std::vector<Edge> e;
  for (Vertex i = 1; i <= leaves; ++i) e.push_back({0, i});
  return Graph(leaves + 1, std::move(e));
}

inline Graph complete_graph(Vertex n) {
  if (n < 1) throw std::invalid_argument("complete: need n >= 1");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph(n, std::move(e));
}

enum class Family { kPath, kCycle, kGrid, kStar, kComplete };

inline Family parse_family(const std::string& name) {
  if (name == "path") return Family::kPath;
  if (name == "cycle") return Family::kCycle;
  if (name == "grid") return Family::kGrid;
  if (name == "star") return Family::kStar;
  if (name == "complete") return Family::kComplete;
  throw std::invalid_argument("unknown family '" + name + "'");
}

inline Graph family(Family kind, const std::vector<int>& params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw std::invalid_argument("family: expected " + std::to_string(count) + " parameter(s)");
  };
  switch (kind) {
    case Family::kPath: need(1); return path_graph(params[0]);
    case Family::kCycle: need(1); return cycle_graph(params[0]);
    case Family::kGrid: need(2); return grid_graph(params[0], params[1]);
    case Family::kStar: need(1); return star_graph(params[0]);
    case Family::kComplete: need(1); return complete_graph(params[0]);
  }
  throw std::invalid_argument("family: unknown kind");
}

/// Uniform-attachment random tree: vertex v > 0 hangs below a uniform earlier vertex.
inline Graph random_tree(Vertex n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_tree: need n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> pick(0, v - 1);
    e.push_back({pick(rng), v});
  }
  return Graph(n, std::move(e));
}

/// Random tree plus `extra` distinct random chords (fewer if the graph fills up).
inline Graph random_connected_graph(Vertex n, int extra, std::uint64_t seed) {
  Graph tree = random_tree(n, seed);
  std::set<Edge> edges(tree.edges().begin(), tree.edges().end());
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const std::size_t max_edges = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  for (int added = 0, attempts = 0; added < extra && edges.size() < max_edges && attempts < 100 * (extra + 1);
       ++attempts) {
    Vertex a = pick(rng), b = pick(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (edges.insert({a, b}).second) ++added;
  }
  return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

// ---------------------------------------------------------------------------
// Exact subdivision

struct Subdivision {
  Graph graph;
  VertexSet origin;  // original vertices, same ids as in the source graph
  VertexSet subdivision_vertices;
  /// For each source edge (in source edge order) the full path u .. v.
  std::vector<std::vector<Vertex>> edge_paths;
};

/// Replaces every edge by a path of length r. Original vertices keep their
/// ids; new vertices are numbered edge by edge, in order from u to v.
inline Subdivision exact_subdivision(const Graph& g, int r) {
  require_simple(g, "exact_subdivision");
  if (r < 1) throw std::invalid_argument("exact_subdivision: r must be >= 1");
  Subdivision out;
  Vertex next = g.num_vertices();
  std::vector<Edge> edges;
  std::vector<Vertex> sub;
  for (const Edge& e : g.edges()) {
    std::vector<Vertex> path{e.u};
    Vertex prev = e.u;
    for (int i = 1; i < r; ++i) {
      edges.push_back({prev, next});
      sub.push_back(next);
      path.push_back(next);
      prev = next++;
    }
    edges.push_back({prev, e.v});
    path.push_back(e.v);
    out.edge_paths.push_back(std::move(path));
  }
  out.graph = Graph(next, std::move(edges));
  out.origin = VertexSet::range(g.num_vertices());
  out.subdivision_vertices = VertexSet(std::move(sub));
  return out;
}

// ---------------------------------------------------------------------------
// Pendant construction G<r>

struct PendantGraph {
  Graph graph;
  VertexSet origin;
  VertexSet subdivision_vertices;
  Vertex x = -1;
  Vertex y = -1;
  int r = 0;
};

/// Exact r-subdivision plus an apex x joined to every subdivision vertex by
/// a private path of length r, and a vertex y joined to x by a path of
/// length r.
inline PendantGraph pendant_construction(const Graph& g, int r) {
  require_simple(g, "pendant_construction");
  if (r < 2) throw std::invalid_argument("pendant_construction: r must be >= 2");
  Subdivision sub = exact_subdivision(g, r);
  std::vector<Edge> edges = sub.graph.edges();
  Vertex next = sub.graph.num_vertices();
  const Vertex x = next++;
  auto attach_path = [&](Vertex from, Vertex to) {
    Vertex prev = from;
    for (int i = 1; i < r; ++i) {
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back({prev, to});
  };
  for (Vertex w : sub.subdivision_vertices) attach_path(w, x);
  const Vertex y = next++;
  attach_path(y, x);

  PendantGraph out;
  out.graph = Graph(next, std::move(edges));
  out.origin = sub.origin;
  out.subdivision_vertices = sub.subdivision_vertices;
  out.x = x;
  out.y = y;
  out.r = r;
  return out;
}

// ---------------------------------------------------------------------------
// Reduction from Independent Set

struct HardnessInstance {
  Graph h;  // J^(r)
  Graph j;  // intermediate graph
  VertexSet origin;
  Vertex x = -1;
  Vertex y = -1;
  int r = 0;
};

/// J = G^(3) plus x joined to every subdivision vertex by a path of length
/// 2 and y joined to x by a path of length 3; H = J^(r). Ids of G, x and y
/// are preserved in H.
inline HardnessInstance hardness_reduction(const Graph& g, int r) {
  require_simple(g, "hardness_reduction");
  if (r < 1) throw std::invalid_argument("hardness_reduction: r must be >= 1");
  Subdivision sub = exact_subdivision(g, 3);
  std::vector<Edge> edges = sub.graph.edges();
  Vertex next = sub.graph.num_vertices();
  const Vertex x = next++;
  for (Vertex w : sub.subdivision_vertices) {
    edges.push_back({w, next});
    edges.push_back({next, x});
    ++next;
  }
  const Vertex y = next++;
  Vertex p1 = next++, p2 = next++;
  edges.push_back({x, p1});
  edges.push_back({p1, p2});
  edges.push_back({p2, y});

  HardnessInstance out;
  out.j = Graph(next, std::move(edges));
  out.h = exact_subdivision(out.j, r).graph;
  out.origin = VertexSet::range(g.num_vertices());
  out.x = x;
  out.y = y;
  out.r = r;
  return out;
}

// ---------------------------------------------------------------------------
// Bucket model

struct BucketModelSample {
  Graph g0;  // d-regular multigraph
  Graph g;   // simple, girth > d after trimming
  Vertex n = 0;
  int d = 0;
  std::size_t removed_edges = 0;
  std::uint64_t seed = 0;
};

namespace detail {

/// Mutable multigraph used only while trimming short cycles.
class TrimGraph {
 public:
  TrimGraph(Vertex n, const std::vector<Edge>& edges) : adj_(static_cast<std::size_t>(n)) {
    for (const Edge& e : edges) {
      adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
      if (e.u != e.v) adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
      ++mult_[key(e.u, e.v)];
    }
  }

  int multiplicity(Vertex u, Vertex v) const {
    auto it = mult_.find(key(u, v));
    return it == mult_.end() ? 0 : it->second;
  }

  void remove(Vertex u, Vertex v) {
    erase_one(adj_[static_cast<std::size_t>(u)], v);
    if (u != v) erase_one(adj_[static_cast<std::size_t>(v)], u);
    if (--mult_[key(u, v)] == 0) mult_.erase(key(u, v));
  }

  /// Does edge {u, v} (u != v, single copy) lie on a cycle of length <= max_len?
  bool on_short_cycle(Vertex u, Vertex v, int max_len) {
    const int budget = max_len - 1;  // path length u ~> v avoiding the edge
    if (budget < 1) return false;
    const int hu = (budget + 1) / 2;
    const int hv = budget - hu;
    auto du = search(u, hu, u, v);
    auto dv = search(v, hv, u, v);
    for (auto [x, a] : du) {
      auto it = dv.find(x);
      if (it != dv.end() && a + it->second <= budget) return true;
    }
    return false;
  }

 private:
  static std::pair<Vertex, Vertex> key(Vertex a, Vertex b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

  static void erase_one(std::vector<Vertex>& list, Vertex v) {
    auto it = std::find(list.begin(), list.end(), v);
    if (it != list.end()) list.erase(it);
  }

  std::map<Vertex, int> search(Vertex s, int depth, Vertex eu, Vertex ev) const {
    std::map<Vertex, int> dist{{s, 0}};
    std::vector<Vertex> frontier{s};
    for (int level = 0; level < depth && !frontier.empty(); ++level) {
      std::vector<Vertex> next;
      for (Vertex a : frontier)
        for (Vertex b : adj_[static_cast<std::size_t>(a)]) {
          if ((a == eu && b == ev) || (a == ev && b == eu)) continue;
          if (dist.emplace(b, level + 1).second) next.push_back(b);
        }
      frontier = std::move(next);
    }
    return dist;
  }

  std::vector<std::vector<Vertex>> adj_;
  std::map<std::pair<Vertex, Vertex>, int> mult_;
};

}  // namespace detail

/// Random d-regular multigraph from a uniform matching on d*n points
/// grouped into n buckets, then trimmed: while some cycle of length <= d
/// exists, delete the lexicographically smallest edge lying on such a cycle.
inline BucketModelSample bucket_model(Vertex n, int d, std::uint64_t seed) {
  if (n < 1 || d < 1) throw std::invalid_argument("bucket_model: need n >= 1 and d >= 1");
  if (n % 2 != 0) throw std::invalid_argument("bucket_model: n must be even");
  if ((static_cast<long long>(n) * d) % 2 != 0) throw std::invalid_argument("bucket_model: n*d must be even");

  const std::size_t points = static_cast<std::size_t>(n) * static_cast<std::size_t>(d);
  std::vector<std::size_t> perm(points);
  for (std::size_t i = 0; i < points; ++i) perm[i] = i;
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);

  std::vector<Edge> multi;
  multi.reserve(points / 2);
  for (std::size_t i = 0; i + 1 < points; i += 2) {
    Vertex a = static_cast<Vertex>(perm[i] / static_cast<std::size_t>(d));
    Vertex b = static_cast<Vertex>(perm[i + 1] / static_cast<std::size_t>(d));
    multi.push_back({std::min(a, b), std::max(a, b)});
  }

  BucketModelSample out;
  out.n = n;
  out.d = d;
  out.seed = seed;
  out.g0 = Graph(n, multi, Graph::Mode::kMulti);

  std::vector<Edge> remaining = multi;
  std::sort(remaining.begin(), remaining.end());
  detail::TrimGraph work(n, remaining);
  // Deleting edges never creates cycles, so a sweep in lexicographic order
  // removes exactly what re-scanning after every deletion would; the
  // second sweep confirms the fixpoint.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Edge> kept;
    for (const Edge& e : remaining) {
      bool short_cycle = false;
      if (e.u == e.v) {
        short_cycle = true;
      } else if (work.multiplicity(e.u, e.v) >= 2) {
        short_cycle = d >= 2;
      } else {
        short_cycle = work.on_short_cycle(e.u, e.v, d);
      }
      if (short_cycle) {
        work.remove(e.u, e.v);
        ++out.removed_edges;
        changed = true;
      } else {
        kept.push_back(e);
      }
    }
    remaining = std::move(kept);
  }
  out.g = Graph(n, std::move(remaining));
  return out;
}

}  // namespace distk
