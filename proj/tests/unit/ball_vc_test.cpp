#include <gtest/gtest.h>

#include <random>

#include <distk/ball_vc.hpp>
#include <distk/errors.hpp>
#include <distk/generators.hpp>

#include "support/brute.hpp"

using namespace distk;

namespace {

std::vector<VertexSet> member_sets(const SetSystem& sys) {
  std::vector<VertexSet> out;
  for (const auto& m : sys.members) out.push_back(m.set);
  return out;
}

}  // namespace

TEST(BallsSystem, Examples) {
  auto singletons = balls_system(cycle_graph(5), 0);
  for (const auto& m : singletons.members) EXPECT_EQ(m.set, VertexSet{m.center});
  for (const auto& m : balls_system(complete_graph(4), 1).members) EXPECT_EQ(m.set, VertexSet::range(4));
  auto p3 = balls_system(path_graph(3), 1);
  ASSERT_EQ(p3.members.size(), 3u);
  EXPECT_EQ(p3.members[0].set, (VertexSet{0, 1}));
  EXPECT_EQ(p3.members[1].set, (VertexSet{0, 1, 2}));
  EXPECT_EQ(p3.members[2].set, (VertexSet{1, 2}));
}

TEST(TwoVc, Examples) {
  auto p3 = two_vc_dimension(balls_system(path_graph(3), 1));
  EXPECT_EQ(p3.dimension, 2);
  EXPECT_EQ(two_shatter_violation(path_graph(3), 1, p3.witness), "");
  auto ends = two_vc_dimension(restrict_system(balls_system(path_graph(3), 1), {0, 2}));
  EXPECT_EQ(ends.witness.a_set, (VertexSet{0, 2}));
  EXPECT_EQ(ends.witness.pair_centers.at({0, 2}), 1);
  EXPECT_EQ(two_vc_dimension(balls_system(path_graph(2), 1)).dimension, 2);
  SetSystem lonely{{7}, {}};
  EXPECT_EQ(two_vc_dimension(lonely).dimension, 1);
  SetSystem none{{}, {}};
  EXPECT_EQ(two_vc_dimension(none).dimension, 0);
}

TEST(TwoVc, RefusesLargeUniverse) {
  EXPECT_THROW(two_vc_dimension(balls_system(path_graph(70), 1)), LimitExceeded);
  EXPECT_THROW(vc_dimension(balls_system(path_graph(70), 1)), LimitExceeded);
}

TEST(Vc, Examples) {
  EXPECT_EQ(vc_dimension(balls_system(path_graph(3), 1)).dimension, 1);
  SetSystem only_full{{4}, {{0, VertexSet{4}}}};
  EXPECT_EQ(vc_dimension(only_full).dimension, 0);
  SetSystem both{{4}, {{0, VertexSet{4}}, {1, VertexSet{}}}};
  EXPECT_EQ(vc_dimension(both).dimension, 1);
}

TEST(Vc, AgreesWithBruteForceAndBoundedByTwoVc) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const Vertex n = 4 + static_cast<Vertex>(trial % 8);
    Graph g = brute::random_graph(n, 0.3, rng);
    for (int r = 0; r <= 2; ++r) {
      SetSystem sys = balls_system(g, r);
      if (trial % 2) sys = restrict_system(sys, brute::random_subset(n, 0.6, rng));
      auto members = member_sets(sys);
      auto two = two_vc_dimension(sys);
      auto full = vc_dimension(sys);
      EXPECT_EQ(two.dimension, brute::two_vc(members, sys.universe));
      EXPECT_EQ(full.dimension, brute::vc(members, sys.universe));
      EXPECT_LE(full.dimension, two.dimension);
      EXPECT_EQ(static_cast<int>(two.witness.a_set.size()), two.dimension);
      EXPECT_EQ(static_cast<int>(full.witness.size()), full.dimension);
    }
  }
}

TEST(Vc, Hereditary) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = brute::random_graph(10, 0.25, rng);
    SetSystem sys = balls_system(g, 1);
    SetSystem sub = restrict_system(sys, brute::random_subset(10, 0.5, rng));
    EXPECT_LE(vc_dimension(sub).dimension, vc_dimension(sys).dimension);
    EXPECT_LE(two_vc_dimension(sub).dimension, two_vc_dimension(sys).dimension);
  }
}

TEST(ExtractMinor, P3FollowsTheConstruction) {
  Graph p3 = path_graph(3);
  TwoShatterWitness w{{0, 2}, {{{0, 2}, 1}}};
  auto model = extract_minor_model(p3, 1, w);
  ASSERT_EQ(model.branch_sets.size(), 2u);
  EXPECT_EQ(model.branch_sets[0], (VertexSet{0, 1}));
  EXPECT_EQ(model.branch_sets[1], VertexSet{2});
}

TEST(ExtractMinor, SingleVertex) {
  TwoShatterWitness w{{3}, {}};
  auto model = extract_minor_model(path_graph(5), 2, w);
  ASSERT_EQ(model.branch_sets.size(), 1u);
  EXPECT_EQ(model.branch_sets[0], VertexSet{3});
}

TEST(ExtractMinor, C6PairAtDistanceTwo) {
  Graph c6 = cycle_graph(6);
  auto sys = restrict_system(balls_system(c6, 1), {0, 2});
  auto two = two_vc_dimension(sys);
  ASSERT_EQ(two.dimension, 2);
  auto model = extract_minor_model(c6, 1, two.witness);
  EXPECT_EQ(minor_model_violation(c6, model), "");
}

TEST(ExtractMinor, RejectsInvalidWitness) {
  Graph p5 = path_graph(5);
  EXPECT_THROW(extract_minor_model(p5, 1, {{0, 4}, {{{0, 4}, 2}}}), InvalidWitness);
  EXPECT_THROW(extract_minor_model(p5, 1, {{0, 2}, {}}), InvalidWitness);
  Graph split(4, {{0, 1}, {2, 3}});
  EXPECT_THROW(extract_minor_model(split, 2, {{0, 2}, {{{0, 2}, 1}}}), InvalidWitness);
}

TEST(ExtractMinor, ValidModelForEveryWitnessFound) {
  std::mt19937_64 rng(33);
  int checked = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const Vertex n = 5 + static_cast<Vertex>(trial % 10);
    Graph g = brute::random_graph(n, 0.25, rng);
    for (int r = 1; r <= 3; ++r) {
      auto two = two_vc_dimension(balls_system(g, r));
      EXPECT_EQ(two_shatter_violation(g, r, two.witness), "");
      auto model = extract_minor_model(g, r, two.witness);
      EXPECT_EQ(static_cast<int>(model.branch_sets.size()), two.dimension);
      EXPECT_EQ(minor_model_violation(g, model), "");
      ++checked;
    }
  }
  EXPECT_GT(checked, 0);
}
