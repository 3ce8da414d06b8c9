// Copyright 2026 The skewgm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "skewgm/lp.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include <Eigen/LU>

namespace skewgm {
namespace {

using Tableau = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

constexpr double kFeasTol = 1e-10;
constexpr double kPivotTol = 1e-11;

}  // namespace

L1BoxSolution solve_l1_box(const Matrix& A, const Vector& b, double radius) {
  if (A.rows() != b.size()) throw Error("solve_l1_box: dimension mismatch");
  if (radius < 0.0) throw Error("solve_l1_box: negative radius");
  const Index k = A.rows();
  const Index m = A.cols();
  const Index rows = 2 * k;
  const Index cols = 2 * m + 2 * k;

  // Constraint matrix [A -A I 0; -A A 0 I], right-hand side [b + r; r - b].
  Matrix M = Matrix::Zero(rows, cols);
  M.block(0, 0, k, m) = A;
  M.block(0, m, k, m) = -A;
  M.block(k, 0, k, m) = -A;
  M.block(k, m, k, m) = A;
  M.block(0, 2 * m, rows, rows).setIdentity();
  Vector rhs0(rows);
  rhs0.head(k) = b.array() + radius;
  rhs0.tail(k) = radius - b.array();

  Tableau T = M;
  Vector rhs = rhs0;
  Vector reduced = Vector::Zero(cols);
  reduced.head(2 * m).setOnes();
  std::vector<Index> basis(static_cast<std::size_t>(rows));
  for (Index r = 0; r < rows; ++r) basis[static_cast<std::size_t>(r)] = 2 * m + r;

  const int max_pivots = static_cast<int>(50 * (rows + cols));
  const int bland_after = static_cast<int>(5 * (rows + cols));
  L1BoxSolution sol;
  bool optimal = false;
  for (int pivot = 0; pivot < max_pivots; ++pivot) {
    const bool bland = pivot >= bland_after;
    Index leave = -1;
    double worst = -kFeasTol;
    for (Index r = 0; r < rows; ++r) {
      if (rhs(r) >= -kFeasTol) continue;
      if (bland) {
        if (leave < 0 || basis[static_cast<std::size_t>(r)] < basis[static_cast<std::size_t>(leave)]) leave = r;
      } else if (rhs(r) < worst) {
        worst = rhs(r);
        leave = r;
      }
    }
    if (leave < 0) {
      optimal = true;
      break;
    }

    Index enter = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    double best_mag = 0.0;
    for (Index c = 0; c < cols; ++c) {
      const double a = T(leave, c);
      if (a >= -kPivotTol) continue;
      const double ratio = std::max(reduced(c), 0.0) / -a;
      const bool better =
          ratio < best_ratio - 1e-12 ||
          (ratio <= best_ratio + 1e-12 && !bland && -a > best_mag);
      if (better) {
        best_ratio = ratio;
        best_mag = -a;
        enter = c;
      }
    }
    if (enter < 0) break;  // primal infeasible

    const double piv = T(leave, enter);
    T.row(leave) /= piv;
    rhs(leave) /= piv;
    for (Index r = 0; r < rows; ++r) {
      if (r == leave) continue;
      const double f = T(r, enter);
      if (f == 0.0) continue;
      T.row(r) -= f * T.row(leave);
      rhs(r) -= f * rhs(leave);
    }
    const double fc = reduced(enter);
    if (fc != 0.0) reduced -= fc * T.row(leave).transpose();
    basis[static_cast<std::size_t>(leave)] = enter;
    sol.pivots = pivot + 1;
  }
  if (!optimal) {
    sol.x = Vector::Zero(m);
    sol.feasible = false;
    sol.objective = std::numeric_limits<double>::infinity();
    sol.max_violation = std::numeric_limits<double>::infinity();
    return sol;
  }

  // Recompute the basic solution from the original columns.
  Matrix Bm(rows, rows);
  for (Index r = 0; r < rows; ++r) Bm.col(r) = M.col(basis[static_cast<std::size_t>(r)]);
  const Vector xb = Bm.partialPivLu().solve(rhs0);
  Vector full = Vector::Zero(cols);
  for (Index r = 0; r < rows; ++r) full(basis[static_cast<std::size_t>(r)]) = std::max(xb(r), 0.0);
  if (!xb.allFinite()) {
    for (Index r = 0; r < rows; ++r) full(basis[static_cast<std::size_t>(r)]) = std::max(rhs(r), 0.0);
  }

  sol.x = full.head(m) - full.segment(m, m);
  sol.objective = sol.x.lpNorm<1>();
  const double residual = (A * sol.x - b).lpNorm<Eigen::Infinity>();
  sol.max_violation = std::max(0.0, residual - radius);
  sol.feasible = true;
  return sol;
}

}  // namespace skewgm
