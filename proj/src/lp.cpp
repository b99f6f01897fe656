// Copyright 2026 The svkit developers
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

#include "svkit/lp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace svkit::lp {

namespace {

constexpr double kCostTol = 1e-11;
constexpr double kPivotTol = 1e-11;
constexpr double kFeasTol = 1e-9;

// Dense simplex tableau over the variables 0..n-1 plus m artificials.
// Row layout: m constraint rows, then the phase objective row.
struct Tableau {
  int m = 0;
  int n = 0;  // structural variables only
  std::vector<std::vector<double>> rows;
  std::vector<double> obj;  // reduced costs, size n + m + 1 (last = -value)
  std::vector<int> basis;   // basic variable per row

  double& a(int i, int j) { return rows[i][j]; }
  double rhs(int i) const { return rows[i][n + m]; }

  void pivot(int row, int col) {
    const double inv = 1.0 / rows[row][col];
    for (double& v : rows[row]) v *= inv;
    rows[row][col] = 1.0;  // cut rounding drift on the pivot element
    for (int i = 0; i < m; ++i) {
      if (i == row) continue;
      const double f = rows[i][col];
      if (f == 0.0) continue;
      for (int j = 0; j <= n + m; ++j) rows[i][j] -= f * rows[row][j];
      rows[i][col] = 0.0;
    }
    const double f = obj[col];
    if (f != 0.0) {
      for (int j = 0; j <= n + m; ++j) obj[j] -= f * rows[row][j];
      obj[col] = 0.0;
    }
    basis[row] = col;
  }

  // Bland's rule: entering = lowest-index column with negative reduced cost,
  // leaving = best ratio with ties broken by lowest basic variable index.
  // Returns kOptimal, kUnbounded or kIterationLimit.
  Status iterate(int num_cols, int& iterations, int max_iterations) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < num_cols; ++j) {
        if (obj[j] < -kCostTol) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return Status::kOptimal;
      int leave = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m; ++i) {
        const double a_ij = rows[i][enter];
        if (a_ij <= kPivotTol) continue;
        const double ratio = rhs(i) / a_ij;
        if (ratio < best_ratio - 1e-15 ||
            (std::abs(ratio - best_ratio) <= 1e-15 &&
             (leave < 0 || basis[i] < basis[leave]))) {
          best_ratio = ratio;
          leave = i;
        }
      }
      if (leave < 0) return Status::kUnbounded;
      pivot(leave, enter);
      if (++iterations >= max_iterations) return Status::kIterationLimit;
    }
  }
};

}  // namespace

Result solve(const std::vector<std::vector<double>>& a,
             const std::vector<double>& b, const std::vector<double>& c,
             int max_iterations) {
  const int m = static_cast<int>(a.size());
  const int n = static_cast<int>(c.size());
  if (static_cast<int>(b.size()) != m) {
    throw std::invalid_argument("lp::solve: row count mismatch");
  }

  Tableau t;
  t.m = m;
  t.n = n;
  t.rows.assign(m, std::vector<double>(n + m + 1, 0.0));
  t.basis.resize(m);

  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(a[i].size()) != n) {
      throw std::invalid_argument("lp::solve: column count mismatch");
    }
    const double sign = b[i] < 0.0 ? -1.0 : 1.0;
    for (int j = 0; j < n; ++j) t.rows[i][j] = sign * a[i][j];
    t.rows[i][n + i] = 1.0;
    t.rows[i][n + m] = sign * b[i];
    t.basis[i] = n + i;
  }

  Result result;

  // Phase 1: minimize the sum of artificials.
  t.obj.assign(n + m + 1, 0.0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= n + m; ++j) t.obj[j] -= t.rows[i][j];
    t.obj[n + i] = 0.0;
  }
  Status st = t.iterate(n + m, result.iterations, max_iterations);
  if (st == Status::kIterationLimit) {
    result.status = st;
    return result;
  }
  const double phase1 = -t.obj[n + m];
  if (phase1 > kFeasTol) {
    result.status = Status::kInfeasible;
    result.objective = phase1;
    return result;
  }
  // Drive any artificial still basic (at zero level) out of the basis.
  for (int i = 0; i < m; ++i) {
    if (t.basis[i] < n) continue;
    int col = -1;
    for (int j = 0; j < n; ++j) {
      if (std::abs(t.rows[i][j]) > kPivotTol) {
        col = j;
        break;
      }
    }
    if (col >= 0) t.pivot(i, col);
    // A fully zero row is redundant; its artificial stays basic at zero.
  }

  // Phase 2: original objective, artificial columns excluded.
  t.obj.assign(n + m + 1, 0.0);
  for (int j = 0; j < n; ++j) t.obj[j] = c[j];
  for (int i = 0; i < m; ++i) {
    if (t.basis[i] < n && t.obj[t.basis[i]] != 0.0) {
      const double f = t.obj[t.basis[i]];
      for (int j = 0; j <= n + m; ++j) t.obj[j] -= f * t.rows[i][j];
      t.obj[t.basis[i]] = 0.0;
    }
  }
  st = t.iterate(n, result.iterations, max_iterations);
  if (st != Status::kOptimal) {
    result.status = st;
    return result;
  }

  result.status = Status::kOptimal;
  result.x.assign(n, 0.0);
  for (int i = 0; i < m; ++i) {
    if (t.basis[i] < n) result.x[t.basis[i]] = t.rhs(i);
  }
  result.objective = -t.obj[n + m];
  return result;
}

}  // namespace svkit::lp
