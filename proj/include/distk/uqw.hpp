#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "distance.hpp"
#include "errors.hpp"
#include "graph.hpp"

namespace distk {

struct UqwResult {
  VertexSet s;
  VertexSet b;  // subset of a ∖ s, pairwise distance > r in G - s
  int r = 0;
};

/// Greedy splitter. Picks an r-scattered subset of `a` in G - S by
/// increasing id; while it is smaller than m, moves into S the vertex outside
/// `a` whose r-ball in G - S holds the most candidates (ties: smallest total
/// distance, then smallest id). Returns nullopt once
/// S would exceed s_max or no vertex helps.
inline std::optional<UqwResult> find_uqw(const Graph& g, const VertexSet& a, int r, std::size_t m,
                                         std::size_t s_max) {
  require_simple(g, "find_uqw");
  require_subset(g, a, "find_uqw");
  if (m < 1) throw std::invalid_argument("find_uqw: m must be at least 1");
  const Vertex n = g.num_vertices();
  const auto in_a = a.mask(n);
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> s;
  Bfs bfs(g);
  std::vector<char> alive(static_cast<std::size_t>(n), 0);
  std::vector<int> score(static_cast<std::size_t>(n), 0);
  std::vector<long long> total(static_cast<std::size_t>(n), 0);

  while (true) {
    std::vector<Vertex> b;
    for (Vertex v : a) alive[static_cast<std::size_t>(v)] = 1;
    for (Vertex v : a) {
      if (!alive[static_cast<std::size_t>(v)]) continue;
      b.push_back(v);
      bfs.run_from(v, r, &removed);
      for (Vertex w : bfs.reached_vertices()) alive[static_cast<std::size_t>(w)] = 0;
    }
    if (b.size() >= m) {
      UqwResult out{VertexSet(s), VertexSet(std::move(b)), r};
      auto sub = induced_subgraph(g, set_difference(VertexSet::range(n), out.s));
      std::vector<Vertex> mapped;
      for (Vertex v : out.b) mapped.push_back(sub.from_original[static_cast<std::size_t>(v)]);
      if (!is_distance_independent(sub.graph, VertexSet(std::move(mapped)), r))
        throw PostconditionFailure("find_uqw: returned set is not r-independent in G - S");
      return out;
    }
    if (s.size() >= s_max) return std::nullopt;

    std::fill(score.begin(), score.end(), 0);
    std::fill(total.begin(), total.end(), 0);
    for (Vertex v : a) {
      bfs.run_from(v, r, &removed);
      for (Vertex w : bfs.reached_vertices())
        if (!in_a[static_cast<std::size_t>(w)]) {
          ++score[static_cast<std::size_t>(w)];
          total[static_cast<std::size_t>(w)] += bfs.dist(w);
        }
    }
    Vertex best = -1;
    auto better = [&](Vertex w, Vertex cur) {
      const auto wi = static_cast<std::size_t>(w), ci = static_cast<std::size_t>(cur);
      return score[wi] > score[ci] || (score[wi] == score[ci] && total[wi] < total[ci]);
    };
    for (Vertex w = 0; w < n; ++w)
      if (score[static_cast<std::size_t>(w)] > 0 && (best < 0 || better(w, best))) best = w;
    if (best < 0) return std::nullopt;
    s.push_back(best);
    removed[static_cast<std::size_t>(best)] = 1;
  }
}

}  // namespace distk
