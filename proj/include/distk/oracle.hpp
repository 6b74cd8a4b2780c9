#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "bitset.hpp"
#include "distance.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "rational.hpp"
#include "simplex.hpp"

namespace distk {

/// Size limits of the exhaustive searches. Exceeding one raises LimitExceeded.
struct OracleLimits {
  std::size_t max_a = 40;               // |A| for alpha/gamma
  std::size_t max_minor_vertices = 16;  // n for depth-minor search
  int max_minor_t = 5;
};

struct Witnessed {
  int value = 0;
  VertexSet witness;
};

namespace detail {

/// Maximum clique with greedy-colouring bounds (MCQ style) on a graph given
/// by adjacency bitsets. Returns the clique as indices.
class MaxClique {
 public:
  explicit MaxClique(const std::vector<DynBitset>& adj) : adj_(adj) {}

  std::vector<std::size_t> run() {
    DynBitset all(adj_.size());
    all.set_all();
    std::vector<std::size_t> current;
    expand(current, all);
    return best_;
  }

 private:
  void colour_sort(const DynBitset& p, std::vector<std::size_t>& order, std::vector<std::size_t>& bound) const {
    DynBitset uncoloured = p;
    std::size_t colour = 0;
    while (uncoloured.any()) {
      ++colour;
      DynBitset q = uncoloured;
      while (q.any()) {
        std::size_t v = q.find_first();
        q.reset(v);
        q.subtract(adj_[v]);
        uncoloured.reset(v);
        order.push_back(v);
        bound.push_back(colour);
      }
    }
  }

  void expand(std::vector<std::size_t>& current, DynBitset p) {
    std::vector<std::size_t> order, bound;
    colour_sort(p, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + bound[i] <= best_.size()) return;
      std::size_t v = order[i];
      current.push_back(v);
      DynBitset next = p & adj_[v];
      if (next.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, next);
      }
      current.pop_back();
      p.reset(v);
    }
  }

  const std::vector<DynBitset>& adj_;
  std::vector<std::size_t> best_;
};

/// Minimum set cover by branch and bound. `covers[s]` is a bitset over the
/// elements; every element must be covered by some set.
class MinSetCover {
 public:
  MinSetCover(std::size_t elements, std::vector<DynBitset> covers) : elements_(elements), covers_(std::move(covers)) {
    // Drop sets contained in another set; among equal sets keep the first.
    std::vector<bool> dropped(covers_.size(), false);
    for (std::size_t i = 0; i < covers_.size(); ++i) {
      if (covers_[i].none()) {
        dropped[i] = true;
        continue;
      }
      for (std::size_t j = 0; j < covers_.size() && !dropped[i]; ++j) {
        if (i == j || dropped[j]) continue;
        if (covers_[i].is_subset_of(covers_[j]) && (covers_[i] != covers_[j] || j < i)) dropped[i] = true;
      }
    }
    for (std::size_t i = 0; i < covers_.size(); ++i)
      if (!dropped[i]) useful_.push_back(i);
    coverers_.assign(elements_, DynBitset(useful_.size()));
    for (std::size_t k = 0; k < useful_.size(); ++k)
      covers_[useful_[k]].for_each([&](std::size_t e) { coverers_[e].set(k); });
  }

  /// Indices (into the original `covers`) of an optimal cover.
  std::vector<std::size_t> run() {
    DynBitset uncovered(elements_);
    uncovered.set_all();
    best_ = greedy(uncovered);
    std::vector<std::size_t> chosen;
    search(uncovered, chosen);
    std::vector<std::size_t> out;
    for (std::size_t k : best_) out.push_back(useful_[k]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<std::size_t> greedy(DynBitset uncovered) const {
    std::vector<std::size_t> picked;
    while (uncovered.any()) {
      std::size_t best = 0, best_gain = 0;
      for (std::size_t k = 0; k < useful_.size(); ++k) {
        std::size_t gain = covers_[useful_[k]].count_and(uncovered);
        if (gain > best_gain) {
          best_gain = gain;
          best = k;
        }
      }
      picked.push_back(best);
      uncovered.subtract(covers_[useful_[best]]);
    }
    return picked;
  }

  /// Elements whose coverer sets are pairwise disjoint each need their own set.
  std::size_t lower_bound(const DynBitset& uncovered) const {
    DynBitset used(useful_.size());
    std::size_t count = 0;
    uncovered.for_each([&](std::size_t e) {
      if (!coverers_[e].intersects(used)) {
        ++count;
        used |= coverers_[e];
      }
    });
    return count;
  }

  void search(const DynBitset& uncovered, std::vector<std::size_t>& chosen) {
    if (uncovered.none()) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    if (chosen.size() + lower_bound(uncovered) >= best_.size()) return;
    std::size_t pick = elements_, fewest = SIZE_MAX;
    uncovered.for_each([&](std::size_t e) {
      std::size_t c = coverers_[e].count();
      if (c < fewest) {
        fewest = c;
        pick = e;
      }
    });
    std::vector<std::pair<std::size_t, std::size_t>> options;  // (gain, set)
    coverers_[pick].for_each([&](std::size_t k) { options.push_back({covers_[useful_[k]].count_and(uncovered), k}); });
    std::sort(options.begin(), options.end(), [](auto a, auto b) { return a.first != b.first ? a.first > b.first : a.second < b.second; });
    for (auto [gain, k] : options) {
      chosen.push_back(k);
      DynBitset rest = uncovered;
      rest.subtract(covers_[useful_[k]]);
      search(rest, chosen);
      chosen.pop_back();
    }
  }

  std::size_t elements_;
  std::vector<DynBitset> covers_;
  std::vector<std::size_t> useful_;
  std::vector<DynBitset> coverers_;
  std::vector<std::size_t> best_;
};

}  // namespace detail

/// Maximum distance-r independent subset of A, exact.
inline Witnessed alpha_exact(const Graph& g, const VertexSet& a, int r, const OracleLimits& limits = {}) {
  require_simple(g, "alpha_exact");
  require_subset(g, a, "alpha_exact");
  if (a.size() > limits.max_a) throw LimitExceeded("alpha_exact", a.size(), limits.max_a);
  if (a.empty()) return {};
  // Compatibility graph: i ~ j iff dist(a_i, a_j) > r.
  std::vector<DynBitset> compat(a.size(), DynBitset(a.size()));
  Bfs bfs(g);
  for (std::size_t i = 0; i < a.size(); ++i) {
    compat[i].set_all();
    compat[i].reset(i);
    bfs.run_from(a[i], r);
    for (Vertex w : bfs.reached_vertices()) {
      int j = a.index_of(w);
      if (j >= 0) compat[i].reset(static_cast<std::size_t>(j));
    }
  }
  auto clique = detail::MaxClique(compat).run();
  std::vector<Vertex> ids;
  for (std::size_t i : clique) ids.push_back(a[i]);
  return {static_cast<int>(ids.size()), VertexSet(std::move(ids))};
}

inline Witnessed alpha_exact(const AnnotatedInstance& inst, const OracleLimits& limits = {}) {
  inst.validate();
  return alpha_exact(inst.graph, inst.a_set, inst.r, limits);
}

/// Minimum distance-r dominating set of A (dominators from all of V), exact.
inline Witnessed gamma_exact(const Graph& g, const VertexSet& a, int r, const OracleLimits& limits = {}) {
  require_simple(g, "gamma_exact");
  require_subset(g, a, "gamma_exact");
  if (a.size() > limits.max_a) throw LimitExceeded("gamma_exact", a.size(), limits.max_a);
  if (a.empty()) return {};
  std::vector<DynBitset> covers(static_cast<std::size_t>(g.num_vertices()), DynBitset(a.size()));
  Bfs bfs(g);
  for (std::size_t i = 0; i < a.size(); ++i) {
    bfs.run_from(a[i], r);
    for (Vertex v : bfs.reached_vertices()) covers[static_cast<std::size_t>(v)].set(i);
  }
  auto picked = detail::MinSetCover(a.size(), std::move(covers)).run();
  std::vector<Vertex> ids(picked.begin(), picked.end());
  return {static_cast<int>(ids.size()), VertexSet(std::move(ids))};
}

// ---------------------------------------------------------------------------
// LP relaxations

/// Optimal LP weights, indexed by vertex id (zero outside the variable range).
struct LpSolution {
  Rational value = 0;
  std::vector<Rational> weights;
};

/// Fractional covering: min sum x_v over V s.t. sum_{v in N_r(u)} x_v >= 1 for u in A.
inline LpSolution lp_gamma(const Graph& g, const VertexSet& a, int r) {
  require_simple(g, "lp_gamma");
  require_subset(g, a, "lp_gamma");
  LinearProgram lp;
  lp.num_vars = static_cast<std::size_t>(g.num_vertices());
  lp.objective.assign(lp.num_vars, Rational(-1));
  Bfs bfs(g);
  for (Vertex u : a) {
    bfs.run_from(u, r);
    LinearConstraint c;
    c.sense = Sense::kGreaterEqual;
    c.rhs = 1;
    for (Vertex v : bfs.reached_vertices()) c.terms.push_back({static_cast<std::size_t>(v), Rational(1)});
    lp.constraints.push_back(std::move(c));
  }
  LpResult res = solve_lp(lp);
  if (res.status != LpResult::Status::kOptimal) throw PostconditionFailure("lp_gamma: covering LP not optimal");
  return {Rational(-res.value), std::move(res.x)};
}

/// Fractional packing: max sum y_u over A s.t. sum_{u in A, dist(u,v) <= r} y_u <= 1 for v in V.
inline LpSolution lp_alpha(const Graph& g, const VertexSet& a, int r) {
  require_simple(g, "lp_alpha");
  require_subset(g, a, "lp_alpha");
  LinearProgram lp;
  lp.num_vars = a.size();
  lp.objective.assign(lp.num_vars, Rational(1));
  std::vector<std::vector<std::size_t>> rows(static_cast<std::size_t>(g.num_vertices()));
  Bfs bfs(g);
  for (std::size_t i = 0; i < a.size(); ++i) {
    bfs.run_from(a[i], r);
    for (Vertex v : bfs.reached_vertices()) rows[static_cast<std::size_t>(v)].push_back(i);
  }
  for (const auto& row : rows) {
    if (row.empty()) continue;
    LinearConstraint c;
    c.sense = Sense::kLessEqual;
    c.rhs = 1;
    for (std::size_t i : row) c.terms.push_back({i, Rational(1)});
    lp.constraints.push_back(std::move(c));
  }
  LpResult res = solve_lp(lp);
  if (res.status != LpResult::Status::kOptimal) throw PostconditionFailure("lp_alpha: packing LP not optimal");
  LpSolution out{res.value, std::vector<Rational>(static_cast<std::size_t>(g.num_vertices()), 0)};
  for (std::size_t i = 0; i < a.size(); ++i) out.weights[static_cast<std::size_t>(a[i])] = res.x[i];
  return out;
}

/// Exact feasibility of covering weights.
inline bool is_fractional_cover(const Graph& g, const VertexSet& a, int r, const std::vector<Rational>& x) {
  if (x.size() != static_cast<std::size_t>(g.num_vertices())) return false;
  for (const auto& w : x)
    if (w < 0) return false;
  Bfs bfs(g);
  for (Vertex u : a) {
    bfs.run_from(u, r);
    Rational sum = 0;
    for (Vertex v : bfs.reached_vertices()) sum += x[static_cast<std::size_t>(v)];
    if (sum < 1) return false;
  }
  return true;
}

/// Exact feasibility of packing weights (zero required outside A).
inline bool is_fractional_packing(const Graph& g, const VertexSet& a, int r, const std::vector<Rational>& y) {
  if (y.size() != static_cast<std::size_t>(g.num_vertices())) return false;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto& w = y[static_cast<std::size_t>(v)];
    if (w < 0 || (w != 0 && !a.contains(v))) return false;
  }
  Bfs bfs(g);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    bfs.run_from(v, r);
    Rational sum = 0;
    for (Vertex u : bfs.reached_vertices()) sum += y[static_cast<std::size_t>(u)];
    if (sum > 1) return false;
  }
  return true;
}

struct LpDuality {
  LpSolution covering;
  LpSolution packing;
};

/// Solves both programs independently and checks feasibility and equal optima.
inline LpDuality lp_duality(const Graph& g, const VertexSet& a, int r) {
  LpDuality out{lp_gamma(g, a, r), lp_alpha(g, a, r)};
  if (!is_fractional_cover(g, a, r, out.covering.weights))
    throw PostconditionFailure("lp_duality: covering weights infeasible");
  if (!is_fractional_packing(g, a, r, out.packing.weights))
    throw PostconditionFailure("lp_duality: packing weights infeasible");
  if (out.covering.value != out.packing.value)
    throw PostconditionFailure("lp_duality: optima differ (" + to_string(out.covering.value) + " vs " +
                               to_string(out.packing.value) + ")");
  return out;
}

// ---------------------------------------------------------------------------
// Depth-r minors of cliques

struct MinorModel {
  std::vector<VertexSet> branch_sets;
  int radius = 0;
};

/// Checks that the branch sets are nonempty, pairwise disjoint, each induces
/// a connected subgraph of radius <= radius, and every two are joined by an
/// edge. Returns an empty string on success, else the first violation.
inline std::string minor_model_violation(const Graph& g, const MinorModel& model) {
  const Vertex n = g.num_vertices();
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < model.branch_sets.size(); ++i) {
    const auto& set = model.branch_sets[i];
    if (set.empty()) return "branch set " + std::to_string(i) + " is empty";
    if (set[0] < 0 || set[set.size() - 1] >= n) return "branch set " + std::to_string(i) + " out of range";
    for (Vertex v : set) {
      if (owner[static_cast<std::size_t>(v)] >= 0) return "branch sets overlap at vertex " + std::to_string(v);
      owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
  }
  Bfs bfs(g);
  for (std::size_t i = 0; i < model.branch_sets.size(); ++i) {
    const auto& set = model.branch_sets[i];
    std::vector<char> outside(static_cast<std::size_t>(n), 1);
    for (Vertex v : set) outside[static_cast<std::size_t>(v)] = 0;
    bool has_center = false;
    for (Vertex c : set) {
      bfs.run_from(c, model.radius, &outside);
      if (bfs.reached_vertices().size() == set.size()) {
        has_center = true;
        break;
      }
    }
    if (!has_center) return "branch set " + std::to_string(i) + " is disconnected or has radius > " + std::to_string(model.radius);
  }
  const std::size_t t = model.branch_sets.size();
  std::vector<std::vector<char>> touches(t, std::vector<char>(t, 0));
  for (const Edge& e : g.edges()) {
    int a = owner[static_cast<std::size_t>(e.u)], b = owner[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0 && a != b) touches[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = touches[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1;
  }
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = i + 1; j < t; ++j)
      if (!touches[i][j]) return "no edge between branch sets " + std::to_string(i) + " and " + std::to_string(j);
  return {};
}

namespace detail {

class CliqueMinorSearch {
 public:
  CliqueMinorSearch(const Graph& g, int t, int r) : g_(g), t_(t), r_(r) {
    const Vertex n = g.num_vertices();
    adj_.assign(static_cast<std::size_t>(n), 0);
    for (const Edge& e : g.edges()) {
      adj_[static_cast<std::size_t>(e.u)] |= bit(e.v);
      adj_[static_cast<std::size_t>(e.v)] |= bit(e.u);
    }
    // A model can be shrunk to BFS-tree paths from each centre to one contact
    // per other branch set, so branch sets need at most 1 + (t-1) r vertices.
    const int max_size = 1 + (t - 1) * r;
    by_min_.resize(static_cast<std::size_t>(n));
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
      if (std::popcount(mask) > max_size) continue;
      if (!connected_within_radius(mask)) continue;
      by_min_[static_cast<std::size_t>(std::countr_zero(mask))].push_back({mask, neighbourhood(mask)});
    }
  }

  std::optional<MinorModel> run() {
    std::vector<std::uint32_t> chosen;
    if (!extend(chosen, 0, 0)) return std::nullopt;
    MinorModel model;
    model.radius = r_;
    for (std::uint32_t mask : chosen) {
      std::vector<Vertex> ids;
      for (Vertex v = 0; v < g_.num_vertices(); ++v)
        if (mask & bit(v)) ids.push_back(v);
      model.branch_sets.emplace_back(std::move(ids));
    }
    return model;
  }

 private:
  struct Candidate {
    std::uint32_t mask;
    std::uint32_t nbr;
  };

  static std::uint32_t bit(Vertex v) { return std::uint32_t{1} << v; }

  std::uint32_t neighbourhood(std::uint32_t mask) const {
    std::uint32_t out = 0;
    for (std::uint32_t m = mask; m; m &= m - 1) out |= adj_[static_cast<std::size_t>(std::countr_zero(m))];
    return out;
  }

  bool connected_within_radius(std::uint32_t mask) const {
    for (std::uint32_t m = mask; m; m &= m - 1) {
      std::uint32_t reach = std::uint32_t{1} << std::countr_zero(m);
      for (int step = 0; step < r_ && reach != mask; ++step) reach |= neighbourhood(reach) & mask;
      if (reach == mask) return true;
    }
    return false;
  }

  bool extend(std::vector<std::uint32_t>& chosen, std::uint32_t used, Vertex min_start) {
    if (static_cast<int>(chosen.size()) == t_) return true;
    const Vertex n = g_.num_vertices();
    for (Vertex start = min_start; start < n; ++start) {
      if (used & bit(start)) continue;
      for (const Candidate& c : by_min_[static_cast<std::size_t>(start)]) {
        if (c.mask & used) continue;
        bool adjacent_to_all = true;
        for (std::uint32_t prev : chosen)
          if (!(c.nbr & prev)) {
            adjacent_to_all = false;
            break;
          }
        if (!adjacent_to_all) continue;
        chosen.push_back(c.mask);
        if (extend(chosen, used | c.mask, start + 1)) return true;
        chosen.pop_back();
      }
    }
    return false;
  }

  const Graph& g_;
  int t_;
  int r_;
  std::vector<std::uint32_t> adj_;
  std::vector<std::vector<Candidate>> by_min_;
};

}  // namespace detail

/// Exhaustive test for K_t as a depth-r minor; returns a validated model when one exists.
inline std::optional<MinorModel> depth_minor_contains(const Graph& g, int t, int r, const OracleLimits& limits = {}) {
  require_simple(g, "depth_minor_contains");
  if (t < 0 || r < 0) throw std::invalid_argument("depth_minor_contains: negative parameter");
  if (t > limits.max_minor_t) throw LimitExceeded("depth_minor_contains (t)", static_cast<std::size_t>(t), static_cast<std::size_t>(limits.max_minor_t));
  const std::size_t n = static_cast<std::size_t>(g.num_vertices());
  if (n > limits.max_minor_vertices || n > 30) throw LimitExceeded("depth_minor_contains (n)", n, std::min<std::size_t>(limits.max_minor_vertices, 30));
  if (t == 0) return MinorModel{{}, r};
  if (static_cast<std::size_t>(t) > n) return std::nullopt;
  if (g.num_edges() < static_cast<std::size_t>(t) * static_cast<std::size_t>(t - 1) / 2) return std::nullopt;
  auto model = detail::CliqueMinorSearch(g, t, r).run();
  if (model) {
    auto violation = minor_model_violation(g, *model);
    if (!violation.empty()) throw PostconditionFailure("depth_minor_contains: " + violation);
  }
  return model;
}

}  // namespace distk
