#pragma once

#include <optional>
#include <vector>

#include "graph.hpp"

namespace distk {

/// Reusable breadth-first search state. Resetting only touches vertices
/// reached by the previous run, so repeated short searches on a large graph
/// stay proportional to the explored region.
class Bfs {
 public:
  explicit Bfs(const Graph& g) : g_(&g), dist_(static_cast<std::size_t>(g.num_vertices()), kInfinity) {}

  /// Hop-count search from `sources` up to `cutoff`.
  ///
  /// `removed[v] != 0` hides v entirely (search in G - removed).
  /// `absorbing[v] != 0` lets v be reached but never expanded; sources are
  /// always expanded. A skipped edge {skip_u, skip_v} is never traversed.
  void run(std::span<const Vertex> sources, int cutoff, const std::vector<char>* removed = nullptr,
           const std::vector<char>* absorbing = nullptr, std::optional<Edge> skip = std::nullopt) {
    clear();
    for (Vertex s : sources) {
      if (removed && (*removed)[static_cast<std::size_t>(s)]) continue;
      if (dist_[static_cast<std::size_t>(s)] != kInfinity) continue;
      dist_[static_cast<std::size_t>(s)] = 0;
      reached_.push_back(s);
    }
    std::size_t head = 0;
    const std::size_t num_sources = reached_.size();
    while (head < reached_.size()) {
      Vertex u = reached_[head];
      const bool is_source = head < num_sources;
      ++head;
      int du = dist_[static_cast<std::size_t>(u)];
      if (du >= cutoff) continue;
      if (!is_source && absorbing && (*absorbing)[static_cast<std::size_t>(u)]) continue;
      for (Vertex w : g_->neighbors(u)) {
        if (dist_[static_cast<std::size_t>(w)] != kInfinity) continue;
        if (removed && (*removed)[static_cast<std::size_t>(w)]) continue;
        if (skip && ((u == skip->u && w == skip->v) || (u == skip->v && w == skip->u))) continue;
        dist_[static_cast<std::size_t>(w)] = du + 1;
        reached_.push_back(w);
      }
    }
  }

  void run_from(Vertex source, int cutoff, const std::vector<char>* removed = nullptr,
                const std::vector<char>* absorbing = nullptr) {
    run(std::span<const Vertex>(&source, 1), cutoff, removed, absorbing);
  }

  int dist(Vertex v) const { return dist_[static_cast<std::size_t>(v)]; }
  bool reached(Vertex v) const { return dist_[static_cast<std::size_t>(v)] != kInfinity; }

  /// Reached vertices in nondecreasing distance order.
  std::span<const Vertex> reached_vertices() const { return reached_; }

  /// Walks back from `target` to a source, always stepping to the
  /// smallest-id neighbor one level closer. Returned path starts at the
  /// source and ends at `target`. Only valid for runs without absorbing
  /// vertices on the path interior (callers guarantee this).
  std::vector<Vertex> path_to(Vertex target, const std::vector<char>* removed = nullptr) const {
    std::vector<Vertex> path;
    if (!reached(target)) return path;
    Vertex cur = target;
    path.push_back(cur);
    while (dist(cur) > 0) {
      Vertex next = -1;
      for (Vertex w : g_->neighbors(cur)) {
        if (removed && (*removed)[static_cast<std::size_t>(w)]) continue;
        if (dist(w) == dist(cur) - 1) {
          next = w;
          break;
        }
      }
      cur = next;
      path.push_back(cur);
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

 private:
  void clear() {
    for (Vertex v : reached_) dist_[static_cast<std::size_t>(v)] = kInfinity;
    reached_.clear();
  }

  const Graph* g_;
  std::vector<int> dist_;
  std::vector<Vertex> reached_;
};

/// Exact hop distances from `source`; entries beyond `cutoff` hold kInfinity.
inline std::vector<int> distances_from(const Graph& g, Vertex source, int cutoff = kInfinity) {
  require_vertex(g, source, "distances_from");
  Bfs bfs(g);
  bfs.run_from(source, cutoff);
  std::vector<int> out(static_cast<std::size_t>(g.num_vertices()), kInfinity);
  for (Vertex v : bfs.reached_vertices()) out[static_cast<std::size_t>(v)] = bfs.dist(v);
  return out;
}

/// All-pairs hop distances, row per vertex. Only meant for small graphs.
inline std::vector<std::vector<int>> distance_matrix(const Graph& g) {
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<std::size_t>(g.num_vertices()));
  Bfs bfs(g);
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    bfs.run_from(s, kInfinity);
    std::vector<int> row(static_cast<std::size_t>(g.num_vertices()), kInfinity);
    for (Vertex v : bfs.reached_vertices()) row[static_cast<std::size_t>(v)] = bfs.dist(v);
    out.push_back(std::move(row));
  }
  return out;
}

inline VertexSet ball(const Graph& g, Vertex center, int r) {
  require_vertex(g, center, "ball");
  Bfs bfs(g);
  bfs.run_from(center, r);
  std::vector<Vertex> ids(bfs.reached_vertices().begin(), bfs.reached_vertices().end());
  return VertexSet(std::move(ids));
}

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_original;    // new id -> old id
  std::vector<Vertex> from_original;  // old id -> new id, or -1
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  require_subset(g, s, "induced_subgraph");
  InducedSubgraph out;
  out.from_original.assign(static_cast<std::size_t>(g.num_vertices()), -1);
  out.to_original = s.ids();
  for (std::size_t i = 0; i < s.size(); ++i) out.from_original[static_cast<std::size_t>(s[i])] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    Vertex a = out.from_original[static_cast<std::size_t>(e.u)];
    Vertex b = out.from_original[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) edges.push_back({a, b});
  }
  out.graph = Graph(static_cast<Vertex>(s.size()), std::move(edges),
                    g.is_multigraph() ? Graph::Mode::kMulti : Graph::Mode::kSimple);
  return out;
}

/// True iff all members of `s` are pairwise at distance > r.
inline bool is_distance_independent(const Graph& g, const VertexSet& s, int r) {
  require_subset(g, s, "is_distance_independent");
  if (s.size() < 2) return true;
  Bfs bfs(g);
  for (Vertex v : s) {
    bfs.run_from(v, r);
    for (Vertex w : bfs.reached_vertices())
      if (w != v && s.contains(w)) return false;
  }
  return true;
}

/// True iff every vertex of `a` is within distance r of some vertex of `d`.
inline bool is_distance_dominating(const Graph& g, const VertexSet& d, const VertexSet& a, int r) {
  require_subset(g, d, "is_distance_dominating");
  require_subset(g, a, "is_distance_dominating");
  if (a.empty()) return true;
  Bfs bfs(g);
  bfs.run(d.ids(), r);
  for (Vertex v : a)
    if (!bfs.reached(v)) return false;
  return true;
}

/// Length of a shortest cycle, kInfinity for forests. In multigraph mode a
/// loop is a 1-cycle and a parallel pair a 2-cycle.
inline int girth(const Graph& g) {
  const Vertex n = g.num_vertices();
  if (g.is_multigraph()) {
    int best = kInfinity;
    for (Vertex v = 0; v < n; ++v) {
      auto nb = g.neighbors(v);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (nb[i] == v) return 1;
        if (i + 1 < nb.size() && nb[i] == nb[i + 1]) best = 2;
      }
    }
    if (best == 2) return 2;
  }
  int best = kInfinity;
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    for (Vertex v : queue) dist[static_cast<std::size_t>(v)] = -1;
    queue.clear();
    dist[static_cast<std::size_t>(root)] = 0;
    parent[static_cast<std::size_t>(root)] = -1;
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      int du = dist[static_cast<std::size_t>(u)];
      // Cycles found from deeper levels cannot beat the current best.
      if (2 * du + 1 >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (w == parent[static_cast<std::size_t>(u)]) continue;
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = du + 1;
          parent[static_cast<std::size_t>(w)] = u;
          queue.push_back(w);
        } else {
          best = std::min(best, du + dist[static_cast<std::size_t>(w)] + 1);
        }
      }
    }
  }
  return best;
}

}  // namespace distk
