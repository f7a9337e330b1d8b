// Copyright 2026 The RSDP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "rsdp/error.hpp"

namespace rsdp {

// Dense linear program in inequality form:
//
//   minimize objective . x   subject to   rows[i] . x <= rhs[i],   x >= 0.
struct LpDense {
  int num_vars = 0;
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  std::vector<double> objective;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

struct LpResult {
  LpStatus status = LpStatus::kIterationLimit;
  double objective = 0.0;
  std::vector<double> x;
};

inline const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
    default: return "iteration-limit";
  }
}

namespace detail {

// Two-phase primal simplex on the full tableau. Column layout: structural
// variables, then one slack per row, then artificials for rows whose right
// hand side was negative, then the rhs column. Dantzig pricing with
// lowest-index tie break; switches to Bland's rule after a run of degenerate
// pivots so cycling cannot occur.
class SimplexTableau {
 public:
  explicit SimplexTableau(const LpDense& lp) : n_(lp.num_vars), m_(static_cast<int>(lp.rows.size())) {
    int artificials = 0;
    for (double b : lp.rhs)
      if (b < 0) ++artificials;
    cols_ = n_ + m_ + artificials;
    tableau_.assign(m_, std::vector<double>(cols_ + 1, 0.0));
    basis_.resize(m_);
    int next_artificial = n_ + m_;
    for (int i = 0; i < m_; ++i) {
      double sign = lp.rhs[i] < 0 ? -1.0 : 1.0;
      for (int j = 0; j < n_; ++j) tableau_[i][j] = sign * lp.rows[i][j];
      tableau_[i][n_ + i] = sign;
      tableau_[i][cols_] = sign * lp.rhs[i];
      if (sign < 0) {
        int a = next_artificial++;
        tableau_[i][a] = 1.0;
        basis_[i] = a;
      } else {
        basis_[i] = n_ + i;
      }
    }
    first_artificial_ = n_ + m_;
    row_active_.assign(m_, true);
  }

  LpResult minimize(const std::vector<double>& objective, int iteration_limit) {
    LpResult result;
    if (iteration_limit <= 0) iteration_limit = 50 * (m_ + cols_) + 1000;

    if (first_artificial_ < cols_) {
      std::vector<double> phase1(cols_, 0.0);
      for (int j = first_artificial_; j < cols_; ++j) phase1[j] = 1.0;
      build_objective_row(phase1);
      LpStatus status = iterate(/*ban_artificials=*/false, iteration_limit);
      if (status != LpStatus::kOptimal) {
        result.status = status == LpStatus::kUnbounded ? LpStatus::kInfeasible : status;
        return result;
      }
      if (-obj_row_[cols_] > kFeasTol) {
        result.status = LpStatus::kInfeasible;
        return result;
      }
      expel_artificials();
    }

    std::vector<double> phase2(cols_, 0.0);
    for (int j = 0; j < n_; ++j) phase2[j] = objective[j];
    build_objective_row(phase2);
    LpStatus status = iterate(/*ban_artificials=*/true, iteration_limit);
    result.status = status;
    if (status != LpStatus::kOptimal) return result;
    result.x.assign(n_, 0.0);
    for (int i = 0; i < m_; ++i)
      if (row_active_[i] && basis_[i] < n_) result.x[basis_[i]] = tableau_[i][cols_];
    result.objective = 0.0;
    for (int j = 0; j < n_; ++j) result.objective += objective[j] * result.x[j];
    return result;
  }

 private:
  static constexpr double kPivotTol = 1e-9;
  static constexpr double kFeasTol = 1e-8;

  // Reduced-cost row for cost vector c: obj_row_[j] = c_j - c_B . B^{-1} A_j,
  // with the running objective value (negated) in the rhs slot.
  void build_objective_row(const std::vector<double>& cost) {
    obj_row_.assign(cols_ + 1, 0.0);
    for (int j = 0; j < cols_; ++j) obj_row_[j] = cost[j];
    for (int i = 0; i < m_; ++i) {
      if (!row_active_[i]) continue;
      double cb = cost[basis_[i]];
      if (cb == 0.0) continue;
      for (int j = 0; j <= cols_; ++j) obj_row_[j] -= cb * tableau_[i][j];
    }
  }

  void pivot(int row, int col) {
    double inv = 1.0 / tableau_[row][col];
    for (int j = 0; j <= cols_; ++j) tableau_[row][j] *= inv;
    tableau_[row][col] = 1.0;
    for (int i = 0; i < m_; ++i) {
      if (i == row || !row_active_[i]) continue;
      double factor = tableau_[i][col];
      if (factor == 0.0) continue;
      for (int j = 0; j <= cols_; ++j) tableau_[i][j] -= factor * tableau_[row][j];
      tableau_[i][col] = 0.0;
    }
    double factor = obj_row_[col];
    if (factor != 0.0) {
      for (int j = 0; j <= cols_; ++j) obj_row_[j] -= factor * tableau_[row][j];
      obj_row_[col] = 0.0;
    }
    basis_[row] = col;
  }

  int choose_entering(bool ban_artificials, bool bland) const {
    int limit = ban_artificials ? first_artificial_ : cols_;
    int pick = -1;
    double best = -kFeasTol;
    for (int j = 0; j < limit; ++j) {
      if (obj_row_[j] < best) {
        if (bland) return j;
        best = obj_row_[j];
        pick = j;
      } else if (bland && obj_row_[j] < -kFeasTol) {
        return j;
      }
    }
    return pick;
  }

  int choose_leaving(int col) const {
    int pick = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m_; ++i) {
      if (!row_active_[i] || tableau_[i][col] <= kPivotTol) continue;
      double ratio = tableau_[i][cols_] / tableau_[i][col];
      if (ratio < best_ratio - 1e-12 ||
          (ratio < best_ratio + 1e-12 && (pick < 0 || basis_[i] < basis_[pick]))) {
        best_ratio = ratio;
        pick = i;
      }
    }
    return pick;
  }

  LpStatus iterate(bool ban_artificials, int iteration_limit) {
    int degenerate_run = 0;
    const int bland_after = 5 * (m_ + cols_) + 50;
    for (int iter = 0; iter < iteration_limit; ++iter) {
      bool bland = degenerate_run > bland_after;
      int col = choose_entering(ban_artificials, bland);
      if (col < 0) return LpStatus::kOptimal;
      int row = choose_leaving(col);
      if (row < 0) return LpStatus::kUnbounded;
      double before = obj_row_[cols_];
      pivot(row, col);
      degenerate_run = (obj_row_[cols_] > before + 1e-12) ? 0 : degenerate_run + 1;
    }
    return LpStatus::kIterationLimit;
  }

  // After phase 1, any artificial still in the basis sits at value zero.
  // Pivot it out on a structural/slack column when possible; a row with no
  // such column is linearly dependent and is dropped.
  void expel_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (!row_active_[i] || basis_[i] < first_artificial_) continue;
      int col = -1;
      for (int j = 0; j < first_artificial_; ++j)
        if (std::fabs(tableau_[i][j]) > 1e-7) {
          col = j;
          break;
        }
      if (col >= 0)
        pivot(i, col);
      else
        row_active_[i] = false;
    }
  }

  int n_;
  int m_;
  int cols_;
  int first_artificial_;
  std::vector<std::vector<double>> tableau_;
  std::vector<double> obj_row_;
  std::vector<int> basis_;
  std::vector<bool> row_active_;
};

}  // namespace detail

inline LpResult simplex_minimize(const LpDense& lp, int iteration_limit = 0) {
  if (static_cast<int>(lp.objective.size()) != lp.num_vars)
    throw std::invalid_argument("simplex_minimize: objective arity mismatch");
  if (lp.rows.size() != lp.rhs.size())
    throw std::invalid_argument("simplex_minimize: rows/rhs mismatch");
  for (const auto& row : lp.rows)
    if (static_cast<int>(row.size()) != lp.num_vars)
      throw std::invalid_argument("simplex_minimize: row arity mismatch");
  detail::SimplexTableau tableau(lp);
  return tableau.minimize(lp.objective, iteration_limit);
}

}  // namespace rsdp
