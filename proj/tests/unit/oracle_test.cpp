#include <gtest/gtest.h>

#include <random>

#include <distk/distance.hpp>
#include <distk/errors.hpp>
#include <distk/generators.hpp>
#include <distk/oracle.hpp>
#include <distk/simplex.hpp>

#include "support/brute.hpp"

using namespace distk;

TEST(Simplex, SmallProgramsByHand) {
  // max x + y s.t. x + 2y <= 4, 3x + y <= 6 -> (8/5, 6/5), value 14/5.
  LinearProgram lp{2, {1, 1}, {{{{0, 1}, {1, 2}}, Sense::kLessEqual, 4}, {{{0, 3}, {1, 1}}, Sense::kLessEqual, 6}}};
  auto res = solve_lp(lp);
  ASSERT_EQ(res.status, LpResult::Status::kOptimal);
  EXPECT_EQ(res.value, Rational(14, 5));
  EXPECT_EQ(res.x[0], Rational(8, 5));
  EXPECT_EQ(res.x[1], Rational(6, 5));
}

TEST(Simplex, InfeasibleUnboundedAndEqualities) {
  LinearProgram infeasible{1, {1}, {{{{0, 1}}, Sense::kLessEqual, 1}, {{{0, 1}}, Sense::kGreaterEqual, 2}}};
  EXPECT_EQ(solve_lp(infeasible).status, LpResult::Status::kInfeasible);
  LinearProgram unbounded{2, {1, 0}, {{{{0, 1}, {1, -1}}, Sense::kLessEqual, 1}, {{{1, 1}}, Sense::kGreaterEqual, 0}}};
  unbounded.objective = {1, 1};
  EXPECT_EQ(solve_lp(unbounded).status, LpResult::Status::kUnbounded);
  // max -x - y s.t. x + y = 3, x - y = 1 (duplicated row) -> value -3.
  LinearProgram eq{2, {-1, -1},
                   {{{{0, 1}, {1, 1}}, Sense::kEqual, 3},
                    {{{0, 1}, {1, -1}}, Sense::kEqual, 1},
                    {{{0, 2}, {1, 2}}, Sense::kEqual, 6}}};
  auto res = solve_lp(eq);
  ASSERT_EQ(res.status, LpResult::Status::kOptimal);
  EXPECT_EQ(res.value, Rational(-3));
  EXPECT_EQ(res.x[0], Rational(2));
  // Negative right-hand side: x >= 1 written as -x <= -1.
  LinearProgram neg{1, {-1}, {{{{0, -1}}, Sense::kLessEqual, -1}}};
  EXPECT_EQ(solve_lp(neg).value, Rational(-1));
}

TEST(Rational, Formatting) {
  EXPECT_EQ(to_string(Rational(4, 3)), "4/3");
  EXPECT_EQ(to_string(Rational(4)), "4/1");
  EXPECT_EQ(to_string(Rational(-6, 4)), "-3/2");
  EXPECT_EQ(parse_rational("8/6"), Rational(4, 3));
  EXPECT_EQ(parse_rational("5"), Rational(5));
  EXPECT_THROW(parse_rational("x/2"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_EQ(harmonic(3), Rational(11, 6));
}

TEST(Alpha, Examples) {
  Graph c4 = cycle_graph(4);
  EXPECT_EQ(alpha_exact(c4, VertexSet::range(4), 1).value, 2);
  EXPECT_EQ(alpha_exact(c4, VertexSet::range(4), 2).value, 1);
  EXPECT_EQ(alpha_exact(c4, {}, 1).value, 0);
  AnnotatedInstance inst{path_graph(10), VertexSet::range(10), 2, 2};
  EXPECT_EQ(alpha_exact(inst).value, 4);
}

TEST(Alpha, RefusesAboveLimit) {
  Graph p = path_graph(50);
  EXPECT_THROW(alpha_exact(p, VertexSet::range(50), 1), LimitExceeded);
  EXPECT_EQ(alpha_exact(p, VertexSet::range(50), 1, {.max_a = 50}).value, 25);
}

TEST(Gamma, Examples) {
  EXPECT_EQ(gamma_exact(star_graph(5), VertexSet::range(6), 1).value, 1);
  EXPECT_EQ(gamma_exact(cycle_graph(4), VertexSet::range(4), 1).value, 2);
  EXPECT_EQ(gamma_exact(cycle_graph(4), {}, 1).value, 0);
  Graph lonely(3, {{0, 1}});
  auto w = gamma_exact(lonely, {2}, 1);
  EXPECT_EQ(w.value, 1);
  EXPECT_EQ(w.witness, VertexSet{2});
}

TEST(Exact, MatchBruteForceWithValidWitnesses) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const Vertex n = 6 + static_cast<Vertex>(trial % 7);
    Graph g = brute::random_graph(n, 0.25, rng);
    VertexSet a = brute::random_subset(n, 0.7, rng);
    auto fw = brute::floyd(g);
    for (int r = 1; r <= 3; ++r) {
      auto al = alpha_exact(g, a, r);
      EXPECT_EQ(al.value, brute::alpha(g, a, r));
      EXPECT_EQ(static_cast<int>(al.witness.size()), al.value);
      EXPECT_TRUE(al.witness.is_subset_of(a));
      EXPECT_TRUE(brute::independent(fw, al.witness, r));
      auto ga = gamma_exact(g, a, r);
      EXPECT_EQ(ga.value, brute::gamma(g, a, r));
      EXPECT_EQ(static_cast<int>(ga.witness.size()), ga.value);
      EXPECT_TRUE(brute::dominates(fw, ga.witness, a, r));
    }
  }
}

TEST(Exact, Monotonicity) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = brute::random_graph(11, 0.25, rng);
    VertexSet a = brute::random_subset(11, 0.5, rng);
    VertexSet bigger = set_union(a, brute::random_subset(11, 0.3, rng));
    for (int r = 1; r <= 3; ++r) {
      EXPECT_GE(alpha_exact(g, a, r).value, alpha_exact(g, a, r + 1).value);
      EXPECT_GE(gamma_exact(g, a, r).value, gamma_exact(g, a, r + 1).value);
      EXPECT_LE(alpha_exact(g, a, r).value, alpha_exact(g, bigger, r).value);
      EXPECT_LE(gamma_exact(g, a, r).value, gamma_exact(g, bigger, r).value);
    }
  }
}

TEST(Lp, Examples) {
  EXPECT_EQ(lp_gamma(complete_graph(5), VertexSet::range(5), 1).value, Rational(1));
  auto c4 = lp_gamma(cycle_graph(4), VertexSet::range(4), 1);
  EXPECT_EQ(c4.value, Rational(4, 3));
  // Hand dual: y = 1/3 on every vertex packs, and each closed neighbourhood sums to 1.
  std::vector<Rational> y(4, Rational(1, 3));
  EXPECT_TRUE(is_fractional_packing(cycle_graph(4), VertexSet::range(4), 1, y));
  std::vector<Rational> quarter(4, Rational(1, 4));
  EXPECT_FALSE(is_fractional_cover(cycle_graph(4), VertexSet::range(4), 1, quarter));
  EXPECT_EQ(lp_alpha(cycle_graph(4), VertexSet::range(4), 1).value, Rational(4, 3));
  EXPECT_EQ(lp_gamma(cycle_graph(4), {}, 1).value, Rational(0));
}

TEST(Lp, ChainOnC4) {
  Graph c4 = cycle_graph(4);
  auto v = VertexSet::range(4);
  EXPECT_EQ(alpha_exact(c4, v, 2).value, 1);
  EXPECT_EQ(gamma_exact(c4, v, 1).value, 2);
  auto dual = lp_duality(c4, v, 1);
  EXPECT_EQ(dual.covering.value, Rational(4, 3));
}

TEST(Lp, DualityAndSandwichOnRandomInstances) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const Vertex n = 5 + static_cast<Vertex>(trial % 8);
    Graph g = brute::random_graph(n, 0.3, rng);
    VertexSet a = brute::random_subset(n, 0.6, rng);
    for (int r = 1; r <= 2; ++r) {
      auto dual = lp_duality(g, a, r);
      EXPECT_TRUE(is_fractional_cover(g, a, r, dual.covering.weights));
      EXPECT_TRUE(is_fractional_packing(g, a, r, dual.packing.weights));
      Rational sum_x = 0, sum_y = 0;
      for (const auto& w : dual.covering.weights) sum_x += w;
      for (const auto& w : dual.packing.weights) sum_y += w;
      EXPECT_EQ(sum_x, dual.covering.value);
      EXPECT_EQ(sum_y, dual.packing.value);
      EXPECT_LE(Rational(brute::alpha(g, a, 2 * r)), dual.covering.value);
      EXPECT_LE(dual.covering.value, Rational(brute::gamma(g, a, r)));
    }
  }
}

TEST(Minor, Examples) {
  auto tri = depth_minor_contains(cycle_graph(3), 3, 1);
  ASSERT_TRUE(tri);
  EXPECT_EQ(minor_model_violation(cycle_graph(3), *tri), "");
  EXPECT_FALSE(depth_minor_contains(random_tree(9, 3), 3, 2));
  EXPECT_FALSE(depth_minor_contains(cycle_graph(4), 4, 1));
  EXPECT_TRUE(depth_minor_contains(cycle_graph(4), 3, 1));
  // K4 from the 3x3 grid: needs radius-1 branch sets.
  EXPECT_FALSE(depth_minor_contains(grid_graph(3, 3), 4, 0));
  EXPECT_TRUE(depth_minor_contains(grid_graph(3, 3), 4, 1));
  EXPECT_THROW(depth_minor_contains(path_graph(20), 3, 1), LimitExceeded);
  EXPECT_THROW(depth_minor_contains(path_graph(5), 6, 1), LimitExceeded);
}

TEST(Minor, ModelValidation) {
  Graph p3 = path_graph(3);
  EXPECT_EQ(minor_model_violation(p3, {{VertexSet{0, 1}, VertexSet{2}}, 1}), "");
  EXPECT_NE(minor_model_violation(p3, {{VertexSet{0}, VertexSet{2}}, 1}), "");
  EXPECT_NE(minor_model_violation(p3, {{VertexSet{0, 2}, VertexSet{1}}, 1}), "");
  EXPECT_NE(minor_model_violation(p3, {{VertexSet{0, 1}, VertexSet{1, 2}}, 1}), "");
  EXPECT_NE(minor_model_violation(path_graph(4), {{VertexSet{0, 1, 2}, VertexSet{3}}, 0}), "");
}

TEST(Minor, MatchesBruteForceAssignment) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 40; ++trial) {
    const Vertex n = 5 + static_cast<Vertex>(trial % 3);
    Graph g = brute::random_graph(n, 0.35, rng);
    for (int t = 2; t <= 4; ++t)
      for (int r = 0; r <= 2; ++r) {
        auto model = depth_minor_contains(g, t, r);
        EXPECT_EQ(model.has_value(), brute::has_minor(g, t, r)) << "t=" << t << " r=" << r;
        if (model) {
          EXPECT_EQ(static_cast<int>(model->branch_sets.size()), t);
          EXPECT_EQ(minor_model_violation(g, *model), "");
        }
      }
  }
}
