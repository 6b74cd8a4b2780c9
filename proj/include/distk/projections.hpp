#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "distance.hpp"
#include "errors.hpp"
#include "graph.hpp"

namespace distk {

/// Shortest A-avoiding distances from a vertex to the members of A it can reach.
struct ProjectionProfile {
  VertexSet boundary;
  std::vector<int> values;  // aligned with boundary; kInfinity when unreachable
  int r = 0;

  VertexSet finite_domain() const {
    std::vector<Vertex> ids;
    for (std::size_t i = 0; i < values.size(); ++i)
      if (values[i] != kInfinity) ids.push_back(boundary[i]);
    return VertexSet(std::move(ids));
  }

  friend bool operator==(const ProjectionProfile&, const ProjectionProfile&) = default;
};

namespace detail {

/// Sparse profile key: (boundary vertex, distance) for reached boundary vertices.
using ProfileKey = std::vector<std::pair<Vertex, int>>;

inline ProfileKey profile_key(Bfs& bfs, Vertex u, const std::vector<char>& in_boundary, int r) {
  bfs.run_from(u, r, nullptr, &in_boundary);
  ProfileKey key;
  for (Vertex v : bfs.reached_vertices())
    if (in_boundary[static_cast<std::size_t>(v)]) key.emplace_back(v, bfs.dist(v));
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace detail

/// M_r(u, A): vertices of A reachable from u by paths of length <= r whose
/// interior avoids A.
inline VertexSet projection(const Graph& g, Vertex u, const VertexSet& a, int r) {
  require_vertex(g, u, "projection");
  require_subset(g, a, "projection");
  if (a.contains(u)) throw std::invalid_argument("projection: source vertex lies in the boundary set");
  Bfs bfs(g);
  auto key = detail::profile_key(bfs, u, a.mask(g.num_vertices()), r);
  std::vector<Vertex> ids;
  for (const auto& [v, dist] : key) ids.push_back(v);
  return VertexSet(std::move(ids));
}

inline ProjectionProfile profile(const Graph& g, Vertex u, const VertexSet& a, int r) {
  require_vertex(g, u, "profile");
  require_subset(g, a, "profile");
  if (a.contains(u)) throw std::invalid_argument("profile: source vertex lies in the boundary set");
  Bfs bfs(g);
  auto key = detail::profile_key(bfs, u, a.mask(g.num_vertices()), r);
  ProjectionProfile p{a, std::vector<int>(a.size(), kInfinity), r};
  for (const auto& [v, dist] : key) p.values[static_cast<std::size_t>(a.index_of(v))] = dist;
  return p;
}

/// Partition of `candidates` into classes of equal r-profile on `boundary`,
/// ordered by smallest member.
inline std::vector<VertexSet> profile_classes(const Graph& g, const VertexSet& candidates, const VertexSet& boundary,
                                              int r) {
  require_subset(g, candidates, "profile_classes");
  require_subset(g, boundary, "profile_classes");
  if (!set_intersection(candidates, boundary).empty())
    throw std::invalid_argument("profile_classes: candidates overlap the boundary");
  const auto in_boundary = boundary.mask(g.num_vertices());
  Bfs bfs(g);
  std::map<detail::ProfileKey, std::vector<Vertex>> groups;
  for (Vertex u : candidates) groups[detail::profile_key(bfs, u, in_boundary, r)].push_back(u);
  std::vector<VertexSet> classes;
  classes.reserve(groups.size());
  for (auto& [key, members] : groups) classes.emplace_back(std::move(members));
  std::sort(classes.begin(), classes.end(), [](const VertexSet& x, const VertexSet& y) { return x[0] < y[0]; });
  return classes;
}

/// μ_r(G, A): number of distinct r-profiles on A over V ∖ A.
inline std::size_t mu(const Graph& g, const VertexSet& a, int r) {
  return profile_classes(g, set_difference(VertexSet::range(g.num_vertices()), a), a, r).size();
}

struct ClosureResult {
  VertexSet closed_set;
  std::size_t max_projection = 0;
  std::size_t iterations = 0;
  bool converged = true;
};

/// Largest |M_r(u, x)| over u outside x, recomputed from scratch.
inline std::size_t max_projection_size(const Graph& g, const VertexSet& x, int r) {
  const auto in_x = x.mask(g.num_vertices());
  Bfs bfs(g);
  std::size_t best = 0;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (in_x[static_cast<std::size_t>(u)]) continue;
    best = std::max(best, detail::profile_key(bfs, u, in_x, r).size());
  }
  return best;
}

/// Grows x until every outside vertex projects onto at most `target` members,
/// always adding the vertex with the largest projection (smallest id on ties).
/// Stops early once `growth_cap` vertices were added (0 means no cap).
inline ClosureResult closure(const Graph& g, const VertexSet& x, int r, std::size_t target,
                             std::size_t growth_cap = 0) {
  require_simple(g, "closure");
  require_subset(g, x, "closure");
  if (target < 1) throw std::invalid_argument("closure: target must be at least 1");
  const Vertex n = g.num_vertices();
  std::vector<char> in_x = x.mask(n);
  std::vector<std::size_t> size(static_cast<std::size_t>(n), 0);
  std::vector<std::size_t> version(static_cast<std::size_t>(n), 0);
  struct Entry {
    std::size_t size;
    Vertex v;
    std::size_t version;
    bool operator<(const Entry& o) const { return size != o.size ? size < o.size : v > o.v; }
  };
  std::priority_queue<Entry> heap;
  Bfs bfs(g), around(g);
  auto refresh = [&](Vertex u) {
    auto idx = static_cast<std::size_t>(u);
    size[idx] = detail::profile_key(bfs, u, in_x, r).size();
    ++version[idx];
    if (size[idx] > target) heap.push({size[idx], u, version[idx]});
  };
  for (Vertex u = 0; u < n; ++u)
    if (!in_x[static_cast<std::size_t>(u)]) refresh(u);

  ClosureResult out;
  std::size_t added = 0;
  while (!heap.empty()) {
    Entry top = heap.top();
    heap.pop();
    auto idx = static_cast<std::size_t>(top.v);
    if (in_x[idx] || top.version != version[idx]) continue;
    if (growth_cap != 0 && added >= growth_cap) {
      out.converged = false;
      break;
    }
    in_x[idx] = 1;
    ++added;
    ++out.iterations;
    // Only vertices within distance r of the new member can see their projection change.
    around.run_from(top.v, r);
    for (Vertex w : around.reached_vertices())
      if (!in_x[static_cast<std::size_t>(w)]) refresh(w);
  }
  out.closed_set = VertexSet::from_mask(in_x);
  out.max_projection = max_projection_size(g, out.closed_set, r);
  if (out.converged && out.max_projection > target)
    throw PostconditionFailure("closure: projection bound violated after convergence");
  return out;
}

/// Adds one shortest path (smallest-id predecessor walk) for each pair of x
/// at distance at most r, so these distances survive in G[X'].
inline VertexSet path_closure(const Graph& g, const VertexSet& x, int r) {
  require_simple(g, "path_closure");
  require_subset(g, x, "path_closure");
  const Vertex n = g.num_vertices();
  std::vector<char> keep = x.mask(n);
  const std::vector<char> in_x = x.mask(n);
  Bfs bfs(g);
  for (Vertex u : x) {
    bfs.run_from(u, r);
    for (Vertex v : bfs.reached_vertices()) {
      if (v <= u || !in_x[static_cast<std::size_t>(v)]) continue;
      for (Vertex w : bfs.path_to(v)) keep[static_cast<std::size_t>(w)] = 1;
    }
  }
  VertexSet out = VertexSet::from_mask(keep);

  // Re-check inside G[X'].
  auto sub = induced_subgraph(g, out);
  Bfs inner(sub.graph);
  for (Vertex u : x) {
    bfs.run_from(u, r);
    inner.run_from(sub.from_original[static_cast<std::size_t>(u)], r);
    for (Vertex v : bfs.reached_vertices()) {
      if (!in_x[static_cast<std::size_t>(v)]) continue;
      if (inner.dist(sub.from_original[static_cast<std::size_t>(v)]) != bfs.dist(v))
        throw PostconditionFailure("path_closure: distance not preserved in G[X']");
    }
  }
  return out;
}

}  // namespace distk
