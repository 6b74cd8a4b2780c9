#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace distk {

enum class Sense { kLessEqual, kGreaterEqual, kEqual };

struct LinearConstraint {
  std::vector<std::pair<std::size_t, Rational>> terms;  // (variable, coefficient)
  Sense sense = Sense::kLessEqual;
  Rational rhs = 0;
};

/// maximize objective . x  subject to constraints, x >= 0.
struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<Rational> objective;
  std::vector<LinearConstraint> constraints;
};

struct LpResult {
  enum class Status { kOptimal, kInfeasible, kUnbounded };
  Status status = Status::kInfeasible;
  Rational value = 0;
  std::vector<Rational> x;
  std::size_t pivots = 0;
};

namespace detail {

/// Dense two-phase tableau simplex over exact rationals.
class RationalTableau {
 public:
  explicit RationalTableau(const LinearProgram& lp) : lp_(lp) {
    const std::size_t m = lp.constraints.size();
    // Column layout: structural | slack/surplus | artificial | rhs
    std::size_t slacks = 0, artificials = 0;
    for (const auto& c : lp.constraints) {
      Sense s = normalized_sense(c);
      if (s != Sense::kEqual) ++slacks;
      if (s != Sense::kLessEqual) ++artificials;
    }
    first_slack_ = lp.num_vars;
    first_art_ = first_slack_ + slacks;
    cols_ = first_art_ + artificials;
    rows_.assign(m, std::vector<Rational>(cols_ + 1));
    basis_.assign(m, 0);
    active_.assign(m, true);

    std::size_t next_slack = first_slack_, next_art = first_art_;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& c = lp.constraints[i];
      const bool flip = c.rhs < 0;
      auto& row = rows_[i];
      for (const auto& [var, coef] : c.terms) {
        if (var >= lp.num_vars) throw std::out_of_range("simplex: variable index out of range");
        row[var] += flip ? Rational(-coef) : coef;
      }
      row[cols_] = flip ? Rational(-c.rhs) : c.rhs;
      Sense s = normalized_sense(c);
      if (s == Sense::kLessEqual) {
        row[next_slack] = 1;
        basis_[i] = next_slack++;
      } else if (s == Sense::kGreaterEqual) {
        row[next_slack++] = -1;
        row[next_art] = 1;
        basis_[i] = next_art++;
      } else {
        row[next_art] = 1;
        basis_[i] = next_art++;
      }
    }
  }

  LpResult solve() {
    LpResult result;
    // Phase 1: maximize -(sum of artificials).
    if (first_art_ < cols_) {
      std::vector<Rational> cost(cols_, 0);
      for (std::size_t j = first_art_; j < cols_; ++j) cost[j] = -1;
      load_cost(cost);
      if (!optimize(cols_, result.pivots)) throw std::logic_error("simplex: phase 1 unbounded");
      if (objective_value() < 0) {
        result.status = LpResult::Status::kInfeasible;
        return result;
      }
      evict_artificials(result.pivots);
    }
    // Phase 2 on structural and slack columns only.
    std::vector<Rational> cost(cols_, 0);
    for (std::size_t j = 0; j < lp_.num_vars && j < lp_.objective.size(); ++j) cost[j] = lp_.objective[j];
    load_cost(cost);
    if (!optimize(first_art_, result.pivots)) {
      result.status = LpResult::Status::kUnbounded;
      return result;
    }
    result.status = LpResult::Status::kOptimal;
    result.value = objective_value();
    result.x.assign(lp_.num_vars, 0);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (active_[i] && basis_[i] < lp_.num_vars) result.x[basis_[i]] = rows_[i][cols_];
    return result;
  }

 private:
  static Sense normalized_sense(const LinearConstraint& c) {
    if (c.rhs >= 0 || c.sense == Sense::kEqual) return c.sense;
    return c.sense == Sense::kLessEqual ? Sense::kGreaterEqual : Sense::kLessEqual;
  }

  void load_cost(const std::vector<Rational>& cost) {
    reduced_.assign(cost.begin(), cost.end());
    reduced_.emplace_back(0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (!active_[i]) continue;
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j)
        if (rows_[i][j] != 0) reduced_[j] -= cb * rows_[i][j];
    }
  }

  Rational objective_value() const { return -reduced_[cols_]; }

  /// Pivots over columns [0, limit) with the largest-coefficient rule, falling
  /// back to Bland's rule for good after a run of degenerate pivots. Returns
  /// false when unbounded.
  bool optimize(std::size_t limit, std::size_t& pivots) {
    constexpr std::size_t kDegenerateRun = 50;
    bool bland = false;
    std::size_t degenerate = 0;
    while (true) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (reduced_[j] <= 0) continue;
        if (bland) {
          enter = j;
          break;
        }
        if (enter == limit || reduced_[j] > reduced_[enter]) enter = j;
      }
      if (enter == limit) return true;
      std::size_t leave = rows_.size();
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (!active_[i] || rows_[i][enter] <= 0) continue;
        Rational ratio = rows_[i][cols_] / rows_[i][enter];
        if (leave == rows_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == rows_.size()) return false;
      degenerate = best_ratio == 0 ? degenerate + 1 : 0;
      if (degenerate >= kDegenerateRun) bland = true;
      pivot(leave, enter);
      ++pivots;
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    auto& prow = rows_[r];
    const Rational inv = 1 / prow[c];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j <= cols_; ++j)
      if (prow[j] != 0) {
        prow[j] *= inv;
        nz.push_back(j);
      }
    Rational tmp;
    auto eliminate = [&](std::vector<Rational>& row) {
      if (row[c] == 0) return;
      const Rational f = row[c];
      for (std::size_t j : nz) {
        tmp = f * prow[j];
        row[j] -= tmp;
      }
    };
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (i != r && active_[i]) eliminate(rows_[i]);
    eliminate(reduced_);
    basis_[r] = c;
  }

  void evict_artificials(std::size_t& pivots) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (!active_[i] || basis_[i] < first_art_) continue;
      std::size_t col = first_art_;
      for (std::size_t j = 0; j < first_art_; ++j)
        if (rows_[i][j] != 0) {
          col = j;
          break;
        }
      if (col == first_art_) {
        active_[i] = false;  // redundant equality
      } else {
        pivot(i, col);
        ++pivots;
      }
    }
  }

  const LinearProgram& lp_;
  std::size_t first_slack_ = 0, first_art_ = 0, cols_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> reduced_;
  std::vector<std::size_t> basis_;
  std::vector<bool> active_;
};

}  // namespace detail

/// Exact optimum of a linear program.
inline LpResult solve_lp(const LinearProgram& lp) { return detail::RationalTableau(lp).solve(); }

}  // namespace distk
