#include <gtest/gtest.h>

#include <map>
#include <random>

#include <distk/distance.hpp>
#include <distk/generators.hpp>
#include <distk/projections.hpp>

#include "support/brute.hpp"

using namespace distk;

TEST(Projection, Examples) {
  Graph star = star_graph(3);
  EXPECT_EQ(projection(star, 3, {1, 2}, 2), (VertexSet{1, 2}));
  auto p = profile(star, 3, {1, 2}, 2);
  EXPECT_EQ(p.values, (std::vector<int>{2, 2}));

  Graph p4 = path_graph(4);
  EXPECT_EQ(projection(p4, 0, {1, 3}, 3), VertexSet{1});
  auto q = profile(p4, 0, {1, 3}, 3);
  EXPECT_EQ(q.values, (std::vector<int>{1, kInfinity}));

  EXPECT_TRUE(projection(p4, 0, {}, 3).empty());
  EXPECT_TRUE(profile(p4, 0, {}, 3).values.empty());
  EXPECT_THROW(projection(p4, 1, {1}, 2), std::invalid_argument);
}

TEST(Projection, MatchesPathEnumeration) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = brute::random_graph(10, 0.25, rng);
    VertexSet a = brute::random_subset(10, 0.35, rng);
    for (int r = 1; r <= 4; ++r)
      for (Vertex u = 0; u < 10; ++u) {
        if (a.contains(u)) continue;
        auto expect = brute::projection_profile(g, u, a, r);
        auto p = profile(g, u, a, r);
        std::vector<std::pair<Vertex, int>> got;
        for (std::size_t i = 0; i < a.size(); ++i)
          if (p.values[i] != kInfinity) got.emplace_back(a[i], p.values[i]);
        EXPECT_EQ(got, expect);
        EXPECT_EQ(p.finite_domain(), projection(g, u, a, r));
        for (int v : p.values) EXPECT_TRUE(v == kInfinity || (v >= 1 && v <= r));
      }
  }
}

TEST(ProfileClasses, Examples) {
  Graph p5 = path_graph(5);
  auto one = profile_classes(p5, {0, 1, 2}, {}, 2);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], (VertexSet{0, 1, 2}));

  auto leaves = profile_classes(star_graph(4), {1, 2, 3, 4}, {0}, 1);
  ASSERT_EQ(leaves.size(), 1u);

  auto split = profile_classes(p5, {0, 1, 3, 4}, {2}, 2);
  ASSERT_EQ(split.size(), 2u);
  EXPECT_EQ(split[0], (VertexSet{0, 4}));
  EXPECT_EQ(split[1], (VertexSet{1, 3}));

  EXPECT_THROW(profile_classes(p5, {1, 2}, {2}, 1), std::invalid_argument);
}

TEST(Mu, Examples) {
  EXPECT_EQ(mu(path_graph(4), VertexSet::range(4), 2), 0u);
  EXPECT_EQ(mu(star_graph(5), {0}, 1), 1u);
  EXPECT_EQ(mu(path_graph(4), {0}, 2), 3u);
}

TEST(Mu, BoundedAndInvariantUnderRelabeling) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = brute::random_graph(11, 0.25, rng);
    VertexSet a = brute::random_subset(11, 0.4, rng);
    std::vector<Vertex> perm(11);
    for (Vertex v = 0; v < 11; ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
    Graph h(11, edges);
    std::vector<Vertex> moved;
    for (Vertex v : a) moved.push_back(perm[v]);
    for (int r = 1; r <= 3; ++r) {
      const std::size_t m = mu(g, a, r);
      EXPECT_LE(m, 11 - a.size());
      EXPECT_EQ(m, mu(h, VertexSet(moved), r));
    }
  }
}

TEST(Closure, Examples) {
  Graph star = star_graph(5);
  auto res = closure(star, {1, 2, 3, 4, 5}, 1, 2);
  EXPECT_EQ(res.closed_set, VertexSet::range(6));
  EXPECT_EQ(res.max_projection, 0u);
  EXPECT_EQ(res.iterations, 1u);
  EXPECT_TRUE(res.converged);

  Graph p9 = path_graph(9);
  auto same = closure(p9, {0, 4, 8}, 1, 1);
  EXPECT_EQ(same.closed_set, (VertexSet{0, 4, 8}));
  EXPECT_EQ(same.iterations, 0u);

  auto capped = closure(star, {1, 2, 3, 4, 5}, 1, 5);
  EXPECT_EQ(capped.closed_set, (VertexSet{1, 2, 3, 4, 5}));
  EXPECT_THROW(closure(star, {1}, 1, 0), std::invalid_argument);
}

TEST(Closure, PostconditionByRescan) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = brute::random_graph(14, 0.2, rng);
    VertexSet x = brute::random_subset(14, 0.3, rng);
    for (int r = 1; r <= 3; ++r)
      for (std::size_t target : {1u, 2u, 3u}) {
        auto res = closure(g, x, r, target);
        EXPECT_TRUE(x.is_subset_of(res.closed_set));
        ASSERT_TRUE(res.converged);
        std::size_t worst = 0;
        for (Vertex u = 0; u < 14; ++u)
          if (!res.closed_set.contains(u))
            worst = std::max(worst, brute::projection_profile(g, u, res.closed_set, r).size());
        EXPECT_EQ(worst, res.max_projection);
        EXPECT_LE(worst, target);
        if (target >= x.size()) { EXPECT_EQ(res.closed_set, x); }
      }
  }
}

TEST(Closure, GrowthCapStopsEarly) {
  Graph g = grid_graph(6, 6);
  VertexSet x;
  for (Vertex v = 0; v < 36; v += 2) x.insert(v);
  auto res = closure(g, x, 2, 1, 1);
  EXPECT_FALSE(res.converged);
  EXPECT_EQ(res.closed_set.size(), x.size() + 1);
}

TEST(PathClosure, Examples) {
  EXPECT_EQ(path_closure(path_graph(4), {0, 3}, 3), VertexSet::range(4));
  EXPECT_EQ(path_closure(path_graph(7), {0, 3, 6}, 2), (VertexSet{0, 3, 6}));
  EXPECT_EQ(path_closure(cycle_graph(6), {0, 3}, 3), (VertexSet{0, 1, 2, 3}));
}

TEST(PathClosure, PreservesShortDistances) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = brute::random_graph(14, 0.2, rng);
    VertexSet x = brute::random_subset(14, 0.3, rng);
    auto dg = brute::floyd(g);
    for (int r = 1; r <= 4; ++r) {
      VertexSet y = path_closure(g, x, r);
      EXPECT_TRUE(x.is_subset_of(y));
      auto dy = brute::floyd_within(g, y.mask(14));
      for (Vertex u : x)
        for (Vertex v : x)
          if (dg[u][v] <= r) { EXPECT_EQ(dy[u][v], dg[u][v]); }
    }
  }
}
