#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bitset.hpp"
#include "distance.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "oracle.hpp"

namespace distk {

struct SetMember {
  Vertex center = -1;  // generating vertex
  VertexSet set;
};

struct SetSystem {
  VertexSet universe;
  std::vector<SetMember> members;
};

/// Balls_r(G): one member per vertex u, equal to ball(g, u, r).
inline SetSystem balls_system(const Graph& g, int r) {
  require_simple(g, "balls_system");
  SetSystem sys;
  sys.universe = VertexSet::range(g.num_vertices());
  Bfs bfs(g);
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    bfs.run_from(u, r);
    std::vector<Vertex> ids(bfs.reached_vertices().begin(), bfs.reached_vertices().end());
    sys.members.push_back({u, VertexSet(std::move(ids))});
  }
  return sys;
}

/// The trace system F ∩ A on the universe A.
inline SetSystem restrict_system(const SetSystem& sys, const VertexSet& a) {
  SetSystem out;
  out.universe = set_intersection(sys.universe, a);
  for (const auto& m : sys.members) out.members.push_back({m.center, set_intersection(m.set, out.universe)});
  return out;
}

struct TwoShatterWitness {
  VertexSet a_set;
  /// Unordered pair (smaller id first) -> centre v_ij whose member traces exactly that pair.
  std::map<std::pair<Vertex, Vertex>, Vertex> pair_centers;
};

struct TwoVcResult {
  int dimension = 0;
  TwoShatterWitness witness;
};

struct VcResult {
  int dimension = 0;
  VertexSet witness;
};

struct VcLimits {
  std::size_t max_universe = 64;
};

namespace detail {

/// Members as bitsets over universe positions plus the pair-compatibility
/// relation (some member contains both).
struct IndexedSystem {
  explicit IndexedSystem(const SetSystem& sys) : universe(sys.universe) {
    const std::size_t u = universe.size();
    for (const auto& m : sys.members) {
      DynBitset bits(u);
      for (Vertex v : m.set) {
        int i = universe.index_of(v);
        if (i >= 0) bits.set(static_cast<std::size_t>(i));
      }
      traces.push_back(std::move(bits));
      centers.push_back(m.center);
    }
    compat.assign(u, DynBitset(u));
    for (const auto& t : traces)
      t.for_each([&](std::size_t i) { compat[i] |= t; });
    for (std::size_t i = 0; i < u; ++i) compat[i].reset(i);
  }

  VertexSet universe;
  std::vector<DynBitset> traces;
  std::vector<Vertex> centers;
  std::vector<DynBitset> compat;
};

/// Hereditary property search: largest set X with `accept(X)` among sets
/// whose members are pairwise compatible.
template <class Accept>
std::vector<std::size_t> largest_hereditary(const IndexedSystem& sys, std::size_t cap, Accept&& accept) {
  const std::size_t u = sys.universe.size();
  std::vector<std::size_t> best;
  std::vector<std::size_t> current;
  auto search = [&](auto&& self, const DynBitset& cand) -> void {
    if (current.size() > best.size()) best = current;
    if (current.size() >= cap) return;
    std::size_t remaining = cand.count();
    if (current.size() + remaining <= best.size()) return;
    for (std::size_t c = cand.find_first(); c < u; c = cand.find_next(c + 1)) {
      if (current.size() + remaining <= best.size()) return;
      --remaining;
      current.push_back(c);
      if (accept(current)) {
        DynBitset next = cand & sys.compat[c];
        for (std::size_t i = next.find_first(); i < u && i <= c; i = next.find_next(i + 1)) next.reset(i);
        self(self, next);
      }
      current.pop_back();
    }
  };
  DynBitset all(u);
  all.set_all();
  search(search, all);
  return best;
}

}  // namespace detail

/// Largest X such that every 2-subset of X equals F ∩ X for some member F.
inline TwoVcResult two_vc_dimension(const SetSystem& sys, const VcLimits& limits = {}) {
  if (sys.universe.size() > limits.max_universe)
    throw LimitExceeded("two_vc_dimension", sys.universe.size(), limits.max_universe);
  detail::IndexedSystem idx(sys);
  const std::size_t u = idx.universe.size();

  auto two_shattered = [&](const std::vector<std::size_t>& x) {
    if (x.size() < 2) return true;
    DynBitset mask(u);
    for (std::size_t i : x) mask.set(i);
    std::map<std::pair<std::size_t, std::size_t>, bool> seen;
    for (const auto& t : idx.traces) {
      DynBitset hit = t & mask;
      if (hit.count() != 2) continue;
      std::size_t a = hit.find_first();
      seen[{a, hit.find_next(a + 1)}] = true;
    }
    return seen.size() == x.size() * (x.size() - 1) / 2;
  };
  auto best = detail::largest_hereditary(idx, u, two_shattered);

  TwoVcResult out;
  out.dimension = static_cast<int>(best.size());
  std::vector<Vertex> ids;
  for (std::size_t i : best) ids.push_back(idx.universe[i]);
  out.witness.a_set = VertexSet(ids);
  DynBitset mask(u);
  for (std::size_t i : best) mask.set(i);
  for (std::size_t m = 0; m < idx.traces.size(); ++m) {
    DynBitset hit = idx.traces[m] & mask;
    if (hit.count() != 2) continue;
    std::size_t a = hit.find_first();
    std::size_t b = hit.find_next(a + 1);
    out.witness.pair_centers.emplace(std::pair{idx.universe[a], idx.universe[b]}, idx.centers[m]);
  }
  return out;
}

/// Largest fully shattered subset of the universe.
inline VcResult vc_dimension(const SetSystem& sys, const VcLimits& limits = {}) {
  if (sys.universe.size() > limits.max_universe)
    throw LimitExceeded("vc_dimension", sys.universe.size(), limits.max_universe);
  detail::IndexedSystem idx(sys);
  // 2^|X| distinct traces need at least that many members.
  std::size_t cap = 0;
  while (cap < 63 && (std::size_t{1} << (cap + 1)) <= idx.traces.size()) ++cap;

  auto shattered = [&](const std::vector<std::size_t>& x) {
    if (x.size() > cap) return false;
    std::unordered_set<std::uint64_t> patterns;
    for (const auto& t : idx.traces) {
      std::uint64_t key = 0;
      for (std::size_t b = 0; b < x.size(); ++b)
        if (t.test(x[b])) key |= std::uint64_t{1} << b;
      patterns.insert(key);
    }
    return patterns.size() == (std::size_t{1} << x.size());
  };
  // The empty set is shattered iff the system has a member.
  if (idx.traces.empty()) return {};
  // Shattered sets are 2-shattered, so pair compatibility still prunes.
  auto best = detail::largest_hereditary(idx, cap, shattered);
  VcResult out;
  out.dimension = static_cast<int>(best.size());
  std::vector<Vertex> ids;
  for (std::size_t i : best) ids.push_back(idx.universe[i]);
  out.witness = VertexSet(std::move(ids));
  return out;
}

/// Checks ball(v_ij, r) ∩ A = {a_i, a_j} for every pair; empty string when valid.
inline std::string two_shatter_violation(const Graph& g, int r, const TwoShatterWitness& w) {
  const auto& a = w.a_set;
  require_subset(g, a, "two_shatter_witness");
  Bfs bfs(g);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      auto it = w.pair_centers.find({a[i], a[j]});
      if (it == w.pair_centers.end())
        return "missing centre for pair {" + std::to_string(a[i]) + "," + std::to_string(a[j]) + "}";
      if (!g.contains(it->second)) return "centre out of range";
      bfs.run_from(it->second, r);
      for (Vertex v : a) {
        const bool expected = (v == a[i] || v == a[j]);
        if (bfs.reached(v) != expected)
          return "ball of centre " + std::to_string(it->second) + " does not trace exactly {" +
                 std::to_string(a[i]) + "," + std::to_string(a[j]) + "}";
      }
    }
  return {};
}

/// Builds a depth-r model of K_t from a 2-shattered set of r-balls: for each
/// pair pick u_ij minimizing max(dist(u,a_i), dist(u,a_j)) subject to
/// dist(v_ij,u) + dist(u,a_{i|j}) <= r, split the two shortest paths from
/// u_ij at u_ij, and let X_i collect the a_i-side paths.
inline MinorModel extract_minor_model(const Graph& g, int r, const TwoShatterWitness& w) {
  require_simple(g, "extract_minor_model");
  if (auto bad = two_shatter_violation(g, r, w); !bad.empty()) throw InvalidWitness("extract_minor_model: " + bad);
  const auto& a = w.a_set;
  const std::size_t t = a.size();
  MinorModel model;
  model.radius = r;
  if (t == 0) return model;

  std::vector<Bfs> from_a;
  from_a.reserve(t);
  for (std::size_t i = 0; i < t; ++i) {
    from_a.emplace_back(g);
    from_a.back().run_from(a[i], kInfinity);
  }
  std::vector<std::vector<Vertex>> branch(t);
  for (std::size_t i = 0; i < t; ++i) branch[i].push_back(a[i]);

  Bfs from_v(g);
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = i + 1; j < t; ++j) {
      const Vertex v = w.pair_centers.at({a[i], a[j]});
      from_v.run_from(v, r);
      Vertex u = -1;
      int best_key = kInfinity;
      for (Vertex cand : from_v.reached_vertices()) {
        const int dv = from_v.dist(cand);
        const int di = from_a[i].dist(cand), dj = from_a[j].dist(cand);
        if (di == kInfinity || dj == kInfinity || dv + di > r || dv + dj > r) continue;
        const int key = std::max(di, dj);
        if (key < best_key || (key == best_key && cand < u)) {
          best_key = key;
          u = cand;
        }
      }
      if (u < 0) throw PostconditionFailure("extract_minor_model: no vertex satisfies the path conditions");
      std::vector<Vertex> pi = from_a[i].path_to(u);
      std::vector<Vertex> pj = from_a[j].path_to(u);
      const bool i_side_keeps_u = from_a[i].dist(u) <= from_a[j].dist(u);
      // pi runs a_i .. u, so dropping u removes the last entry.
      if (i_side_keeps_u) pj.pop_back();
      else pi.pop_back();
      branch[i].insert(branch[i].end(), pi.begin(), pi.end());
      branch[j].insert(branch[j].end(), pj.begin(), pj.end());
    }
  for (auto& b : branch) model.branch_sets.emplace_back(std::move(b));
  if (auto bad = minor_model_violation(g, model); !bad.empty())
    throw PostconditionFailure("extract_minor_model: constructed model invalid: " + bad);
  return model;
}

}  // namespace distk
