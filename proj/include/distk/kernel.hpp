#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "distance.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "projections.hpp"
#include "uqw.hpp"
#include "wcol.hpp"

namespace distk {

/// Evidence that any single member of l_prime may leave A without changing
/// whether A holds k vertices pairwise more than r apart.
struct IrrelevanceCertificate {
  VertexSet z;
  VertexSet s;
  VertexSet l_prime;
  int r = 1;
  int d = 0;

  friend bool operator==(const IrrelevanceCertificate&, const IrrelevanceCertificate&) = default;
};

struct CertificateCheck {
  bool ok = true;
  std::string failure;  // first failing condition

  explicit operator bool() const { return ok; }
};

/// Recomputes every certificate condition against (g, a).
inline CertificateCheck verify_certificate(const Graph& g, const VertexSet& a, const IrrelevanceCertificate& cert) {
  auto fail = [](std::string why) { return CertificateCheck{false, std::move(why)}; };
  if (g.is_multigraph()) return fail("graph is not simple");
  if (cert.r < 1) return fail("radius must be positive");
  if (cert.d != cert.r / 2) return fail("half radius must equal floor(r/2)");
  for (const VertexSet* set : {&a, &cert.z, &cert.s, &cert.l_prime})
    if (!set->empty() && ((*set)[0] < 0 || (*set)[set->size() - 1] >= g.num_vertices()))
      return fail("vertex out of range");
  const int r = cert.r;

  if (!is_distance_dominating(g, cert.z, a, cert.d)) return fail("z does not d-dominate A");
  if (!cert.l_prime.is_subset_of(set_difference(a, cert.s))) return fail("l_prime is not contained in A minus s");
  if (cert.l_prime.size() < cert.s.size() + 2) return fail("l_prime has fewer than |s|+2 members");

  const auto removed = cert.s.mask(g.num_vertices());
  Bfs bfs(g);
  bfs.run(set_difference(cert.z, cert.s).ids(), 2 * r, &removed);
  for (Vertex x : cert.l_prime)
    if (bfs.reached(x)) return fail("l_prime member within distance 2r of z in G - s");

  for (Vertex x : cert.l_prime) {
    bfs.run_from(x, 4 * r, &removed);
    for (Vertex y : cert.l_prime)
      if (y != x && bfs.reached(y)) return fail("l_prime members within distance 4r of each other in G - s");
  }

  const auto first = profile(g, cert.l_prime[0], cert.s, r);
  for (Vertex x : cert.l_prime)
    if (!(profile(g, x, cert.s, r) == first)) return fail("l_prime members differ in r-profile on s");
  return {};
}

struct RemovalEntry {
  Vertex removed = -1;
  IrrelevanceCertificate certificate;
};

struct KernelPolicy {
  std::optional<std::size_t> target;  // closure projection bound; default max(1, ceil(|D|^epsilon))
  double epsilon = 0.2;
  std::size_t s_max = 2;
  std::size_t closure_cap = 0;  // 0: bounded only by the graph
  std::size_t max_rounds = std::numeric_limits<std::size_t>::max();
};

struct RemovalResult {
  VertexSet a;
  std::vector<RemovalEntry> log;
  std::size_t rounds = 0;
};

namespace detail {

inline std::size_t closure_target(const KernelPolicy& policy, std::size_t dominating_size) {
  if (policy.target) return std::max<std::size_t>(1, *policy.target);
  double t = std::ceil(std::pow(static_cast<double>(dominating_size), policy.epsilon));
  return std::max<std::size_t>(1, static_cast<std::size_t>(t));
}

/// One search for a qualifying class L'; nullopt when none is found.
inline std::optional<IrrelevanceCertificate> find_certificate(const Graph& g, const VertexSet& a, int r,
                                                              const KernelPolicy& policy) {
  const int d = r / 2;
  const Vertex n = g.num_vertices();
  VertexSet dom = greedy_ball_cover(g, a, d);
  ClosureResult cl = closure(g, dom, 2 * r, closure_target(policy, dom.size()), policy.closure_cap);
  if (!cl.converged) return std::nullopt;
  const VertexSet& z = cl.closed_set;

  auto classes = profile_classes(g, set_difference(a, z), z, 2 * r);
  std::stable_sort(classes.begin(), classes.end(),
                   [](const VertexSet& x, const VertexSet& y) { return x.size() > y.size(); });
  Bfs bfs(g);
  for (const VertexSet& cls : classes) {
    if (cls.size() < 2) break;
    for (std::size_t budget = 0; budget <= policy.s_max; ++budget) {
      if (cls.size() < budget + 2) break;
      auto split = find_uqw(g, cls, 4 * r, budget + 2, budget);
      if (!split) continue;
      const auto removed = split->s.mask(n);
      bfs.run(set_difference(z, split->s).ids(), 2 * r, &removed);
      std::vector<Vertex> far;
      for (Vertex x : split->b)
        if (!bfs.reached(x)) far.push_back(x);
      if (far.size() < split->s.size() + 2) continue;
      auto groups = profile_classes(g, VertexSet(std::move(far)), split->s, r);
      const VertexSet* pick = nullptr;
      for (const auto& grp : groups)
        if (grp.size() >= split->s.size() + 2 && (!pick || grp.size() > pick->size())) pick = &grp;
      if (!pick) continue;
      return IrrelevanceCertificate{z, split->s, *pick, r, d};
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Repeatedly certifies and removes irrelevant vertices of A. Each
/// certificate removes its smallest member; the same class keeps serving
/// until it has |s|+1 members left, then everything is recomputed.
inline RemovalResult remove_irrelevant(const Graph& g, const VertexSet& a, int k, int r,
                                       const KernelPolicy& policy = {}) {
  require_simple(g, "remove_irrelevant");
  require_subset(g, a, "remove_irrelevant");
  if (r < 1 || k < 1) throw std::invalid_argument("remove_irrelevant: r and k must be positive");
  RemovalResult out{a, {}, 0};
  while (out.rounds < policy.max_rounds) {
    auto cert = detail::find_certificate(g, out.a, r, policy);
    if (!cert) break;
    ++out.rounds;
    while (cert->l_prime.size() >= cert->s.size() + 2) {
      if (auto check = verify_certificate(g, out.a, *cert); !check)
        throw PostconditionFailure("remove_irrelevant: emitted certificate rejected: " + check.failure);
      Vertex victim = cert->l_prime[0];
      out.log.push_back({victim, *cert});
      out.a.erase(victim);
      cert->l_prime.erase(victim);
    }
  }
  return out;
}

struct KernelOutcome {
  enum class Tag { kYes, kNo, kKernel };
  Tag tag = Tag::kNo;
  VertexSet y;
  VertexSet b;
  VertexSet witness;  // r-independent subset of A with at least k members (YES only)
  std::vector<RemovalEntry> removal_log;
};

inline const char* to_string(KernelOutcome::Tag tag) {
  switch (tag) {
    case KernelOutcome::Tag::kYes: return "YES";
    case KernelOutcome::Tag::kNo: return "NO";
    case KernelOutcome::Tag::kKernel: return "KERNEL";
  }
  return "?";
}

/// YES with a witness when the half-radius dual witness already reaches k,
/// NO when A (or what survives removal) has fewer than k vertices, otherwise
/// KERNEL: the reduced A as B and its r-path closure as Y.
inline KernelOutcome kernelize(const AnnotatedInstance& inst, const KernelPolicy& policy = {}) {
  inst.validate();
  const Graph& g = inst.graph;
  const int r = inst.r;
  const auto k = static_cast<std::size_t>(inst.k);
  KernelOutcome out;
  if (inst.a_set.size() < k) return out;

  const int d = r / 2;
  DualWitness dw = dual_witness(g, inst.a_set, d, order_heuristic(g, 2 * d + 1));
  if (dw.independent.size() >= k) {
    if (!is_distance_independent(g, dw.independent, r))
      throw PostconditionFailure("kernelize: YES witness is not r-independent");
    out.tag = KernelOutcome::Tag::kYes;
    out.witness = dw.independent;
    return out;
  }

  RemovalResult rem = remove_irrelevant(g, inst.a_set, inst.k, r, policy);
  out.removal_log = std::move(rem.log);
  if (rem.a.size() < k) return out;
  out.tag = KernelOutcome::Tag::kKernel;
  out.b = std::move(rem.a);
  out.y = set_union(path_closure(g, out.b, r), out.b);
  return out;
}

}  // namespace distk
