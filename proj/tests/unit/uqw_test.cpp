#include <gtest/gtest.h>

#include <random>

#include <distk/distance.hpp>
#include <distk/generators.hpp>
#include <distk/uqw.hpp>

#include "support/brute.hpp"

using namespace distk;

TEST(Uqw, StarLeavesAfterDeletingCenter) {
  Graph star = star_graph(8);
  VertexSet leaves = set_difference(VertexSet::range(9), {0});
  auto res = find_uqw(star, leaves, 2, 8, 1);
  ASSERT_TRUE(res);
  EXPECT_EQ(res->s, VertexSet{0});
  EXPECT_EQ(res->b, leaves);
  EXPECT_FALSE(find_uqw(star, leaves, 2, 8, 0));
}

TEST(Uqw, AlreadyIndependent) {
  Graph p9 = path_graph(9);
  auto res = find_uqw(p9, {0, 4, 8}, 3, 3, 0);
  ASSERT_TRUE(res);
  EXPECT_TRUE(res->s.empty());
  EXPECT_EQ(res->b, (VertexSet{0, 4, 8}));
}

TEST(Uqw, GreedySpacingOnPath) {
  auto res = find_uqw(path_graph(20), VertexSet::range(20), 2, 7, 0);
  ASSERT_TRUE(res);
  EXPECT_EQ(res->b.size(), 7u);
  EXPECT_EQ(res->b.ids(), (std::vector<Vertex>{0, 3, 6, 9, 12, 15, 18}));
}

TEST(Uqw, RejectsZeroTarget) { EXPECT_THROW(find_uqw(path_graph(3), {0}, 1, 0, 0), std::invalid_argument); }

TEST(Uqw, RandomOutputsAreValidAndDeterministic) {
  std::mt19937_64 rng(61);
  int successes = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const Vertex n = 10 + static_cast<Vertex>(trial % 15);
    Graph g = brute::random_graph(n, 0.15, rng);
    VertexSet a = brute::random_subset(n, 0.5, rng);
    if (a.empty()) continue;
    for (int r = 1; r <= 3; ++r)
      for (std::size_t m = 1; m <= 4; ++m) {
        auto res = find_uqw(g, a, r, m, 2);
        auto again = find_uqw(g, a, r, m, 2);
        ASSERT_EQ(res.has_value(), again.has_value());
        if (!res) continue;
        ++successes;
        EXPECT_EQ(res->s, again->s);
        EXPECT_EQ(res->b, again->b);
        EXPECT_LE(res->s.size(), 2u);
        EXPECT_GE(res->b.size(), m);
        EXPECT_TRUE(res->b.is_subset_of(set_difference(a, res->s)));
        std::vector<char> keep(static_cast<std::size_t>(n), 1);
        for (Vertex s : res->s) keep[s] = 0;
        auto d = brute::floyd_within(g, keep);
        EXPECT_TRUE(brute::independent(d, res->b, r));
      }
  }
  EXPECT_GT(successes, 100);
}
