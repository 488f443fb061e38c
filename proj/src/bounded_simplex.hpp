#pragma once

// Exact primal simplex for covering LPs with box bounds:
//
//   min c.x   s.t.   A x >= b,   lower <= x <= upper
//
// Rows are added between solves. Every solve starts from x = upper with the
// surplus variables basic, which is primal feasible whenever upper satisfies
// all rows; callers guarantee that. Bland's rule (smallest index enters,
// smallest index leaves among ties) rules out cycling.

#include <optional>
#include <stdexcept>
#include <vector>

#include "fgc/rational.hpp"

namespace fgc::detail {

class BoundedSimplex {
 public:
  struct Row {
    std::vector<int> support;  // columns with coefficient 1
    Rational rhs;
  };

  BoundedSimplex(std::vector<Rational> cost, std::vector<Rational> lower, std::vector<Rational> upper)
      : cost_(std::move(cost)), lower_(std::move(lower)), upper_(std::move(upper)) {}

  void add_row(Row row) { rows_.push_back(std::move(row)); }
  [[nodiscard]] std::size_t row_count() const { return rows_.size(); }
  void set_bounds(std::vector<Rational> lower, std::vector<Rational> upper) {
    lower_ = std::move(lower);
    upper_ = std::move(upper);
  }

  struct Solution {
    Rational objective;
    std::vector<Rational> x;
    int pivots = 0;
  };

  /// nullopt when x = upper violates a row (the start point is infeasible).
  std::optional<Solution> solve() const {
    const int n = static_cast<int>(cost_.size());
    const int m = static_cast<int>(rows_.size());
    const int width = n + m;

    // Tableau T = B^{-1} [A | -I]; start with B = -I (surplus basis).
    std::vector<std::vector<Rational>> tableau(static_cast<std::size_t>(m),
                                               std::vector<Rational>(static_cast<std::size_t>(width)));
    std::vector<Rational> beta(static_cast<std::size_t>(m));
    std::vector<int> basic(static_cast<std::size_t>(m));
    std::vector<Rational> value(static_cast<std::size_t>(width));
    std::vector<char> is_basic(static_cast<std::size_t>(width), 0);
    for (int j = 0; j < n; ++j) value[j] = upper_[j];
    for (int i = 0; i < m; ++i) {
      Rational activity;
      for (int j : rows_[i].support) {
        tableau[i][j] = Rational(-1);
        activity += upper_[j];
      }
      tableau[i][n + i] = Rational(1);
      beta[i] = activity - rows_[i].rhs;
      if (beta[i].sign() < 0) return std::nullopt;
      basic[i] = n + i;
      is_basic[n + i] = 1;
    }
    // Reduced costs d_j = c_j - c_B^T T_j, with c_B = 0 initially.
    std::vector<Rational> reduced(static_cast<std::size_t>(width));
    for (int j = 0; j < n; ++j) reduced[j] = cost_[j];

    const auto lower_of = [&](int var) -> Rational { return var < n ? lower_[var] : Rational(0); };
    const auto upper_of = [&](int var) -> std::optional<Rational> {
      if (var < n) return upper_[var];
      return std::nullopt;
    };

    int pivots = 0;
    for (;;) {
      int enter = -1;
      int direction = 0;
      for (int j = 0; j < width; ++j) {
        if (is_basic[j]) continue;
        const int s = reduced[j].sign();
        if (s < 0 && value[j] < upper_of(j).value_or(value[j] + Rational(1))) {
          enter = j;
          direction = 1;
          break;
        }
        if (s > 0 && value[j] > lower_of(j)) {
          enter = j;
          direction = -1;
          break;
        }
      }
      if (enter < 0) break;

      // Ratio test. Basic row i moves at rate -T_ij * direction.
      std::optional<Rational> step;
      int leave_row = -1;
      int leave_var = width + 1;
      bool leave_to_upper = false;
      if (const auto ub = upper_of(enter)) step = *ub - lower_of(enter);
      for (int i = 0; i < m; ++i) {
        const Rational& t = tableau[i][enter];
        if (t.is_zero()) continue;
        const int rate_sign = -t.sign() * direction;
        std::optional<Rational> limit;
        bool to_upper = false;
        const int var = basic[i];
        if (rate_sign < 0) {
          limit = (beta[i] - lower_of(var)) / (t * Rational(direction));
        } else if (const auto ub = upper_of(var)) {
          limit = (*ub - beta[i]) / (-(t * Rational(direction)));
          to_upper = true;
        }
        if (!limit) continue;
        if (!step || *limit < *step || (*limit == *step && leave_row >= 0 && var < leave_var)) {
          step = limit;
          leave_row = i;
          leave_var = var;
          leave_to_upper = to_upper;
        }
      }
      if (!step) throw std::logic_error("simplex: unbounded direction in a boxed LP");
      const Rational& t_step = *step;
      const Rational signed_step = t_step * Rational(direction);
      for (int i = 0; i < m; ++i) {
        if (!tableau[i][enter].is_zero()) beta[i] -= tableau[i][enter] * signed_step;
      }
      if (leave_row < 0) {
        value[enter] += signed_step;  // bound flip
        continue;
      }
      const int old = basic[leave_row];
      value[old] = leave_to_upper ? *upper_of(old) : lower_of(old);
      is_basic[old] = 0;
      const Rational entering_value = value[enter] + signed_step;

      auto& pivot_row = tableau[leave_row];
      const Rational pivot = pivot_row[enter];
      for (auto& entry : pivot_row) {
        if (!entry.is_zero()) entry /= pivot;
      }
      // Keep the relation x_B = const - T x_N consistent: the leaving
      // variable's value is now fixed, so only coefficients change.
      for (int i = 0; i < m; ++i) {
        if (i == leave_row) continue;
        const Rational factor = tableau[i][enter];
        if (factor.is_zero()) continue;
        for (int j = 0; j < width; ++j) {
          if (!pivot_row[j].is_zero()) tableau[i][j] -= factor * pivot_row[j];
        }
      }
      const Rational factor = reduced[enter];
      for (int j = 0; j < width; ++j) {
        if (!pivot_row[j].is_zero()) reduced[j] -= factor * pivot_row[j];
      }
      basic[leave_row] = enter;
      is_basic[enter] = 1;
      beta[leave_row] = entering_value;
      ++pivots;
    }

    Solution out;
    out.x.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) out.x[j] = value[j];
    for (int i = 0; i < m; ++i) {
      if (basic[i] < n) out.x[basic[i]] = beta[i];
    }
    for (int j = 0; j < n; ++j) out.objective += cost_[j] * out.x[j];
    out.pivots = pivots;
    return out;
  }

 private:
  std::vector<Rational> cost_;
  std::vector<Rational> lower_;
  std::vector<Rational> upper_;
  std::vector<Row> rows_;
};

}  // namespace fgc::detail
