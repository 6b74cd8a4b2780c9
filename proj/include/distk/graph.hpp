#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace distk {

using Vertex = std::int32_t;

/// Distance sentinel for unreachable vertices and "no cycle".
inline constexpr int kInfinity = std::numeric_limits<int>::max();

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free list of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids) : ids_(ids) { normalize(); }
  explicit VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) { normalize(); }

  static VertexSet range(Vertex n) {
    VertexSet s;
    s.ids_.resize(static_cast<std::size_t>(std::max<Vertex>(n, 0)));
    for (Vertex i = 0; i < n; ++i) s.ids_[static_cast<std::size_t>(i)] = i;
    return s;
  }

  /// Builds the set of positions whose mask entry is nonzero.
  static VertexSet from_mask(const std::vector<char>& mask) {
    VertexSet s;
    for (std::size_t i = 0; i < mask.size(); ++i)
      if (mask[i]) s.ids_.push_back(static_cast<Vertex>(i));
    return s;
  }

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  Vertex operator[](std::size_t i) const { return ids_[i]; }
  const std::vector<Vertex>& ids() const { return ids_; }

  bool contains(Vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

  /// Position of v in the sorted list, or -1.
  int index_of(Vertex v) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    return (it != ids_.end() && *it == v) ? static_cast<int>(it - ids_.begin()) : -1;
  }

  std::vector<char> mask(Vertex n) const {
    std::vector<char> m(static_cast<std::size_t>(n), 0);
    for (Vertex v : ids_) m[static_cast<std::size_t>(v)] = 1;
    return m;
  }

  void insert(Vertex v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) ids_.insert(it, v);
  }

  void erase(Vertex v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it != ids_.end() && *it == v) ids_.erase(it);
  }

  bool is_subset_of(const VertexSet& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  void normalize() {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  std::vector<Vertex> ids_;
};

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

/// Immutable undirected graph with sorted adjacency lists.
///
/// Simple mode forbids loops and parallel edges. Multigraph mode is only
/// produced by the bucket-model generator; a loop contributes its endpoint
/// twice to that vertex's adjacency so degrees count it as 2.
class Graph {
 public:
  enum class Mode { kSimple, kMulti };

  Graph() = default;

  Graph(Vertex n, std::vector<Edge> edges, Mode mode = Mode::kSimple)
      : n_(n), mode_(mode), edges_(std::move(edges)) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    adj_.resize(static_cast<std::size_t>(n));
    for (Edge& e : edges_) {
      if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
        throw std::invalid_argument("graph: edge endpoint out of range");
      if (e.u > e.v) std::swap(e.u, e.v);
      if (mode_ == Mode::kSimple && e.u == e.v)
        throw std::invalid_argument("graph: loop in simple graph at vertex " + std::to_string(e.u));
      adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
      adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
    if (mode_ == Mode::kSimple) {
      for (Vertex v = 0; v < n; ++v) {
        const auto& list = adj_[static_cast<std::size_t>(v)];
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
          throw std::invalid_argument("graph: duplicate edge in simple graph at vertex " +
                                      std::to_string(v));
      }
    }
  }

  Vertex num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  bool is_multigraph() const { return mode_ == Mode::kMulti; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

  int max_degree() const {
    int best = 0;
    for (const auto& list : adj_) best = std::max(best, static_cast<int>(list.size()));
    return best;
  }

  bool has_edge(Vertex u, Vertex v) const {
    const auto& list = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
  }

  bool contains(Vertex v) const { return v >= 0 && v < n_; }

 private:
  Vertex n_ = 0;
  Mode mode_ = Mode::kSimple;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

inline void require_vertex(const Graph& g, Vertex v, const char* what) {
  if (!g.contains(v))
    throw std::out_of_range(std::string(what) + ": vertex " + std::to_string(v) + " out of range");
}

inline void require_subset(const Graph& g, const VertexSet& s, const char* what) {
  if (!s.empty() && (s[0] < 0 || s[s.size() - 1] >= g.num_vertices()))
    throw std::out_of_range(std::string(what) + ": vertex set exceeds graph");
}

inline void require_simple(const Graph& g, const char* what) {
  if (g.is_multigraph())
    throw std::invalid_argument(std::string(what) + ": multigraph input not supported");
}

/// A graph together with the vertex subset A, radius r and target k.
struct AnnotatedInstance {
  Graph graph;
  VertexSet a_set;
  int r = 1;
  int k = 1;

  void validate() const {
    require_simple(graph, "instance");
    require_subset(graph, a_set, "instance");
    if (r < 1) throw std::invalid_argument("instance: r must be positive");
    if (k < 1) throw std::invalid_argument("instance: k must be positive");
  }
};

}  // namespace distk
