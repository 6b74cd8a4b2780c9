#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "distance.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "oracle.hpp"
#include "rational.hpp"

namespace distk {

/// A linear order on V(G); smaller position means earlier.
class VertexOrder {
 public:
  VertexOrder() = default;

  explicit VertexOrder(std::vector<Vertex> order) : order_(std::move(order)), position_(order_.size(), -1) {
    for (std::size_t i = 0; i < order_.size(); ++i) {
      Vertex v = order_[i];
      if (v < 0 || static_cast<std::size_t>(v) >= order_.size() || position_[static_cast<std::size_t>(v)] >= 0)
        throw std::invalid_argument("vertex order: not a permutation");
      position_[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
  }

  static VertexOrder identity(Vertex n) {
    std::vector<Vertex> ids(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) ids[static_cast<std::size_t>(v)] = v;
    return VertexOrder(std::move(ids));
  }

  std::size_t size() const { return order_.size(); }
  const std::vector<Vertex>& order() const { return order_; }
  int position(Vertex v) const { return position_[static_cast<std::size_t>(v)]; }

 private:
  std::vector<Vertex> order_;
  std::vector<int> position_;
};

inline void require_order(const Graph& g, const VertexOrder& order) {
  if (order.size() != static_cast<std::size_t>(g.num_vertices()))
    throw std::invalid_argument("vertex order: size does not match graph");
}

/// WReach_r[v] for every v with keep[v] set (all vertices when keep is empty).
/// u is in WReach_r[v] iff u is not after v and some path of length <= r
/// from v to u uses only vertices not before u.
inline std::vector<std::vector<Vertex>> weak_reach_sets(const Graph& g, const VertexOrder& order, int r,
                                                        const std::vector<char>& keep = {}) {
  require_order(g, order);
  const Vertex n = g.num_vertices();
  std::vector<std::vector<Vertex>> reach(static_cast<std::size_t>(n));
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> queue;
  for (Vertex u : order.order()) {
    const int pu = order.position(u);
    queue.assign(1, u);
    dist[static_cast<std::size_t>(u)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      if (dist[static_cast<std::size_t>(x)] >= r) continue;
      for (Vertex w : g.neighbors(x)) {
        if (dist[static_cast<std::size_t>(w)] >= 0 || order.position(w) < pu) continue;
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(x)] + 1;
        queue.push_back(w);
      }
    }
    for (Vertex v : queue) {
      dist[static_cast<std::size_t>(v)] = -1;
      if (keep.empty() || keep[static_cast<std::size_t>(v)]) reach[static_cast<std::size_t>(v)].push_back(u);
    }
  }
  for (auto& list : reach) std::sort(list.begin(), list.end());
  return reach;
}

/// max_v |WReach_r[v]| for the given order.
inline int wcol_given_order(const Graph& g, const VertexOrder& order, int r) {
  std::size_t best = 0;
  for (const auto& s : weak_reach_sets(g, order, r)) best = std::max(best, s.size());
  return static_cast<int>(best);
}

/// Degeneracy-style order: repeatedly delete a minimum-degree vertex (smallest
/// id on ties); the order is the reverse deletion sequence, so every vertex
/// has few neighbours before it. The radius does not influence the result.
inline VertexOrder order_heuristic(const Graph& g, int /*r*/ = 1) {
  const Vertex n = g.num_vertices();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::set<std::pair<int, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = g.degree(v);
    queue.emplace(deg[static_cast<std::size_t>(v)], v);
  }
  std::vector<char> gone(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> removal;
  removal.reserve(static_cast<std::size_t>(n));
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    gone[static_cast<std::size_t>(v)] = 1;
    removal.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      auto wi = static_cast<std::size_t>(w);
      if (gone[wi]) continue;
      queue.erase({deg[wi], w});
      queue.emplace(--deg[wi], w);
    }
  }
  std::reverse(removal.begin(), removal.end());
  return VertexOrder(std::move(removal));
}

/// H_Δ where Δ is the largest number of A-vertices in one r-ball; the greedy
/// cover is within this factor of the fractional optimum.
inline Rational greedy_bound(const Graph& g, const VertexSet& a, int r) {
  std::vector<int> hits(static_cast<std::size_t>(g.num_vertices()), 0);
  Bfs bfs(g);
  for (Vertex u : a) {
    bfs.run_from(u, r);
    for (Vertex v : bfs.reached_vertices()) ++hits[static_cast<std::size_t>(v)];
  }
  int delta = hits.empty() ? 0 : *std::max_element(hits.begin(), hits.end());
  return harmonic(static_cast<std::size_t>(delta));
}

/// Greedy set cover of A by the sets ball(v, r) ∩ A, largest gain first and
/// smallest id on ties.
inline VertexSet greedy_ball_cover(const Graph& g, const VertexSet& a, int r) {
  require_simple(g, "greedy_ball_cover");
  require_subset(g, a, "greedy_ball_cover");
  const Vertex n = g.num_vertices();
  std::vector<char> uncovered = a.mask(n);
  std::vector<int> gain(static_cast<std::size_t>(n), 0);
  Bfs bfs(g);
  for (Vertex u : a) {
    bfs.run_from(u, r);
    for (Vertex v : bfs.reached_vertices()) ++gain[static_cast<std::size_t>(v)];
  }
  // (gain, -id) so equal gains pop the smallest id first.
  std::priority_queue<std::pair<int, Vertex>> heap;
  for (Vertex v = 0; v < n; ++v)
    if (gain[static_cast<std::size_t>(v)] > 0) heap.emplace(gain[static_cast<std::size_t>(v)], -v);
  std::size_t left = a.size();
  std::vector<Vertex> picked;
  while (left > 0) {
    auto [stored, neg] = heap.top();
    heap.pop();
    Vertex v = -neg;
    bfs.run_from(v, r);
    int actual = 0;
    for (Vertex w : bfs.reached_vertices()) actual += uncovered[static_cast<std::size_t>(w)];
    if (actual < stored) {
      if (actual > 0) heap.emplace(actual, -v);
      continue;
    }
    picked.push_back(v);
    for (Vertex w : bfs.reached_vertices())
      if (uncovered[static_cast<std::size_t>(w)]) {
        uncovered[static_cast<std::size_t>(w)] = 0;
        --left;
      }
  }
  return VertexSet(std::move(picked));
}

struct DualWitness {
  VertexSet dominating;   // (2r+1)-dominates A
  VertexSet independent;  // subset of A, pairwise distance > 2r+1
  int wcol = 0;           // wcol_{2r+1} of the order used
};

/// Scans A along the order and keeps v whenever WReach_{2r+1}[v] misses the
/// union of the reach sets kept so far; that union dominates A.
inline DualWitness dual_witness(const Graph& g, const VertexSet& a, int r, const VertexOrder& order) {
  require_simple(g, "dual_witness");
  require_subset(g, a, "dual_witness");
  require_order(g, order);
  const int rho = 2 * r + 1;
  const Vertex n = g.num_vertices();
  auto reach = weak_reach_sets(g, order, rho);
  DualWitness out;
  for (const auto& s : reach) out.wcol = std::max(out.wcol, static_cast<int>(s.size()));

  std::vector<Vertex> scan = a.ids();
  std::sort(scan.begin(), scan.end(), [&](Vertex x, Vertex y) { return order.position(x) < order.position(y); });
  std::vector<char> in_r(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> picked, covered;
  for (Vertex v : scan) {
    const auto& wr = reach[static_cast<std::size_t>(v)];
    if (std::any_of(wr.begin(), wr.end(), [&](Vertex u) { return in_r[static_cast<std::size_t>(u)] != 0; }))
      continue;
    picked.push_back(v);
    for (Vertex u : wr) {
      in_r[static_cast<std::size_t>(u)] = 1;
      covered.push_back(u);
    }
  }
  out.independent = VertexSet(std::move(picked));
  out.dominating = VertexSet(std::move(covered));

  if (!is_distance_independent(g, out.independent, rho))
    throw PostconditionFailure("dual_witness: witness is not (2r+1)-independent");
  if (!is_distance_dominating(g, out.dominating, a, rho))
    throw PostconditionFailure("dual_witness: reach union does not (2r+1)-dominate A");
  if (out.dominating.size() > static_cast<std::size_t>(out.wcol) * out.independent.size())
    throw PostconditionFailure("dual_witness: size bound violated");
  return out;
}

struct DualityReport {
  int r = 0;
  VertexSet dominating_set;       // r-dominates A (greedy cover)
  VertexSet independent_witness;  // (2r+1)-independent subset of A
  int wcol_value = 0;             // wcol_{2r+1} of `order`
  VertexOrder order;
  std::optional<Rational> lp_value;
  Rational greedy_bound;
};

/// Certified sandwich |I| <= LP <= |D| <= greedy_bound * LP, with the LP
/// solved only when `with_lp` is set.
inline DualityReport duality_report(const Graph& g, const VertexSet& a, int r, bool with_lp = false) {
  require_simple(g, "duality_report");
  require_subset(g, a, "duality_report");
  if (r < 1) throw std::invalid_argument("duality_report: r must be positive");
  DualityReport rep;
  rep.r = r;
  rep.order = order_heuristic(g, 2 * r + 1);
  rep.dominating_set = greedy_ball_cover(g, a, r);
  DualWitness dw = dual_witness(g, a, r, rep.order);
  rep.independent_witness = dw.independent;
  rep.wcol_value = dw.wcol;
  rep.greedy_bound = greedy_bound(g, a, r);

  if (!is_distance_dominating(g, rep.dominating_set, a, r))
    throw PostconditionFailure("duality_report: cover does not r-dominate A");
  if (rep.independent_witness.size() > rep.dominating_set.size())
    throw PostconditionFailure("duality_report: witness larger than cover");
  if (with_lp) {
    rep.lp_value = lp_gamma(g, a, r).value;
    const Rational& lp = *rep.lp_value;
    if (Rational(static_cast<long>(rep.independent_witness.size())) > lp ||
        lp > Rational(static_cast<long>(rep.dominating_set.size())))
      throw PostconditionFailure("duality_report: LP value outside the integral sandwich");
    if (Rational(static_cast<long>(rep.dominating_set.size())) > rep.greedy_bound * lp)
      throw PostconditionFailure("duality_report: greedy cover exceeds its guarantee");
  }
  return rep;
}

}  // namespace distk
