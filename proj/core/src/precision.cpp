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

#include "skewgm/precision.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "skewgm/lp.hpp"
#include "skewgm/parallel.hpp"

namespace skewgm {
namespace {

constexpr int kMaxInnerSweeps = 10000;

double soft_threshold(double x, double t) {
  if (x > t) return x - t;
  if (x < -t) return x + t;
  return 0.0;
}

void require_square_symmetric(const Matrix& S, const char* who) {
  if (S.rows() != S.cols() || S.rows() < 1) {
    throw Error(std::string(who) + ": matrix must be square and non-empty");
  }
  if (!S.allFinite()) throw Error(std::string(who) + ": matrix has non-finite entries");
  if ((S - S.transpose()).cwiseAbs().maxCoeff() > 1e-10 * (1.0 + S.cwiseAbs().maxCoeff())) {
    throw Error(std::string(who) + ": matrix is not symmetric");
  }
}

void require_psd(const Matrix& S) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(S, Eigen::EigenvaluesOnly);
  const double smallest = solver.eigenvalues().minCoeff();
  if (smallest < -1e-8) {
    std::ostringstream msg;
    msg << "glasso: input is not positive semidefinite (smallest eigenvalue " << smallest
        << "); apply psd_repair first";
    throw Error(msg.str());
  }
}

struct GlassoState {
  Matrix W;
  Matrix beta;  // beta(k, j): coefficient of node k when regressing node j
  bool warm = false;
};

PrecisionEstimate glasso_solve(const Matrix& S, double lambda, const GlassoOptions& opt,
                               GlassoState& state) {
  if (lambda < 0.0) throw Error("glasso: lambda must be non-negative");
  const Index p = S.rows();
  if (!state.warm) {
    state.W = S;
    state.beta = Matrix::Zero(p, p);
    state.warm = true;
  }
  Matrix& W = state.W;
  Matrix& beta = state.beta;
  W.diagonal() = S.diagonal().array() + lambda;

  double mean_abs_off = 0.0;
  if (p > 1) {
    mean_abs_off = (S.cwiseAbs().sum() - S.diagonal().cwiseAbs().sum()) /
                   static_cast<double>(p * (p - 1));
  }
  const double threshold = opt.tol * mean_abs_off;
  const double inner_tol = 1e-2 * opt.tol;

  PrecisionEstimate est;
  est.method = Shrinkage::glasso;
  est.lambda = lambda;
  est.converged = false;
  Vector wb(p);
  for (int iter = 1; iter <= opt.max_iter && p > 1; ++iter) {
    double change = 0.0;
    for (Index j = 0; j < p; ++j) {
      beta(j, j) = 0.0;
      wb.noalias() = W * beta.col(j);
      for (int sweep = 0; sweep < kMaxInnerSweeps; ++sweep) {
        double max_step = 0.0;
        for (Index k = 0; k < p; ++k) {
          if (k == j) continue;
          const double old = beta(k, j);
          const double partial = S(k, j) - (wb(k) - W(k, k) * old);
          const double updated = soft_threshold(partial, lambda) / W(k, k);
          if (updated != old) {
            const double d = updated - old;
            wb.noalias() += W.col(k) * d;
            beta(k, j) = updated;
            max_step = std::max(max_step, std::abs(d));
          }
        }
        if (max_step < inner_tol) break;
      }
      for (Index k = 0; k < p; ++k) {
        if (k == j) continue;
        change += std::abs(wb(k) - W(k, j));
        W(k, j) = wb(k);
        W(j, k) = wb(k);
      }
    }
    est.iterations = iter;
    if (change / static_cast<double>(p * (p - 1)) <= threshold) {
      est.converged = true;
      break;
    }
  }
  if (p == 1) est.converged = true;

  Matrix omega(p, p);
  for (Index j = 0; j < p; ++j) {
    double fitted = 0.0;
    for (Index k = 0; k < p; ++k) {
      if (k != j) fitted += W(k, j) * beta(k, j);
    }
    const double diag = 1.0 / (W(j, j) - fitted);
    for (Index k = 0; k < p; ++k) omega(k, j) = k == j ? diag : -beta(k, j) * diag;
  }
  est.omega = 0.5 * (omega + omega.transpose());
  est.kkt_residual = glasso_kkt_residual(S, est.omega, lambda);
  return est;
}

}  // namespace

std::string_view to_string(Shrinkage s) {
  switch (s) {
    case Shrinkage::glasso:
      return "glasso";
    case Shrinkage::clime:
      return "clime";
    case Shrinkage::dantzig:
      return "dantzig";
  }
  return "unknown";
}

EdgeSet::EdgeSet(Index p, std::vector<std::pair<Index, Index>> edges) : p_(p) {
  for (auto [i, j] : edges) {
    if (i == j) throw Error("EdgeSet: self-loop");
    if (i < 0 || j < 0 || i >= p || j >= p) throw Error("EdgeSet: node index out of range");
    if (i > j) std::swap(i, j);
    edges_.emplace_back(i, j);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool EdgeSet::contains(Index i, Index j) const {
  if (i > j) std::swap(i, j);
  return std::binary_search(edges_.begin(), edges_.end(), std::pair<Index, Index>{i, j});
}

double glasso_objective(const Matrix& S, const Matrix& omega, double lambda) {
  const Eigen::LLT<Matrix> llt(omega);
  if (llt.info() != Eigen::Success) return -std::numeric_limits<double>::infinity();
  const double logdet = 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
  return logdet - (S * omega).trace() - lambda * omega.cwiseAbs().sum();
}

double glasso_kkt_residual(const Matrix& S, const Matrix& omega, double lambda) {
  const Eigen::LDLT<Matrix> ldlt(omega);
  const Matrix W = ldlt.solve(Matrix::Identity(omega.rows(), omega.cols()));
  double worst = 0.0;
  for (Index j = 0; j < S.cols(); ++j) {
    for (Index i = 0; i < S.rows(); ++i) {
      const double g = S(i, j) - W(i, j);
      double v;
      if (omega(i, j) != 0.0) {
        v = std::abs(g + lambda * (omega(i, j) > 0 ? 1.0 : -1.0));
      } else {
        v = std::max(0.0, std::abs(g) - lambda);
      }
      worst = std::max(worst, v);
    }
  }
  return worst;
}

PrecisionEstimate glasso(const Matrix& S, double lambda, const GlassoOptions& options) {
  require_square_symmetric(S, "glasso");
  require_psd(S);
  GlassoState state;
  return glasso_solve(S, lambda, options, state);
}

PrecisionEstimate glasso(const CorrelationEstimate& S, double lambda,
                         const GlassoOptions& options) {
  return glasso(S.matrix, lambda, options);
}

std::vector<PrecisionEstimate> glasso_path(const Matrix& S, std::span<const double> lambdas,
                                           const GlassoOptions& options) {
  require_square_symmetric(S, "glasso");
  require_psd(S);
  std::vector<std::size_t> order(lambdas.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return lambdas[a] > lambdas[b]; });
  std::vector<PrecisionEstimate> out(lambdas.size());
  GlassoState state;
  for (std::size_t idx : order) out[idx] = glasso_solve(S, lambdas[idx], options, state);
  return out;
}

Matrix symmetrize_min_magnitude(const Matrix& omega) {
  Matrix out = omega;
  for (Index j = 0; j < omega.cols(); ++j) {
    for (Index i = j + 1; i < omega.rows(); ++i) {
      const double a = omega(i, j);
      const double b = omega(j, i);
      const double v = std::abs(a) <= std::abs(b) ? a : b;
      out(i, j) = v;
      out(j, i) = v;
    }
  }
  return out;
}

PrecisionEstimate clime(const Matrix& S, double lambda, double tol) {
  require_square_symmetric(S, "clime");
  if (lambda < 0.0) throw Error("clime: lambda must be non-negative");
  const Index p = S.rows();
  Matrix raw(p, p);
  std::vector<double> violation(static_cast<std::size_t>(p));
  std::vector<int> pivots(static_cast<std::size_t>(p));
  std::vector<char> ok(static_cast<std::size_t>(p), 1);
  parallel_for(static_cast<std::size_t>(p), [&](std::size_t c) {
    const auto col = static_cast<Index>(c);
    const L1BoxSolution sol = solve_l1_box(S, Vector::Unit(p, col), lambda);
    ok[c] = sol.feasible && sol.max_violation <= tol;
    raw.col(col) = sol.x;
    violation[c] = sol.max_violation;
    pivots[c] = sol.pivots;
  });
  for (Index c = 0; c < p; ++c) {
    if (!ok[static_cast<std::size_t>(c)]) {
      std::ostringstream msg;
      msg << "clime: column " << c << " infeasible at lambda " << lambda;
      throw Error(msg.str());
    }
  }
  PrecisionEstimate est;
  est.method = Shrinkage::clime;
  est.lambda = lambda;
  est.omega = symmetrize_min_magnitude(raw);
  est.iterations = std::accumulate(pivots.begin(), pivots.end(), 0);
  est.kkt_residual = *std::max_element(violation.begin(), violation.end());
  for (Index c = 0; c < p; ++c) {
    if (!(est.omega(c, c) > 0.0)) {
      std::ostringstream msg;
      msg << "clime: lambda " << lambda << " zeroes column " << c
          << "; the estimate has no positive diagonal";
      throw Error(msg.str());
    }
  }
  return est;
}

PrecisionEstimate clime(const CorrelationEstimate& S, double lambda, double tol) {
  return clime(S.matrix, lambda, tol);
}

PrecisionEstimate dantzig(const Matrix& S, double delta, double tol) {
  require_square_symmetric(S, "dantzig");
  if (delta < 0.0) throw Error("dantzig: delta must be non-negative");
  const Index p = S.rows();
  Matrix raw = Matrix::Zero(p, p);
  std::vector<double> violation(static_cast<std::size_t>(p));
  std::vector<int> pivots(static_cast<std::size_t>(p));
  std::vector<std::string> failure(static_cast<std::size_t>(p));
  parallel_for(static_cast<std::size_t>(p), [&](std::size_t c) {
    const auto j = static_cast<Index>(c);
    std::vector<Index> rest;
    rest.reserve(static_cast<std::size_t>(p - 1));
    for (Index k = 0; k < p; ++k) {
      if (k != j) rest.push_back(k);
    }
    const Matrix A = S(rest, rest);
    const Vector b = S(rest, j);
    const L1BoxSolution sol = solve_l1_box(A, b, delta);
    if (!sol.feasible || sol.max_violation > tol) {
      std::ostringstream msg;
      msg << "dantzig: column " << j << " infeasible at delta " << delta;
      failure[c] = msg.str();
      return;
    }
    const Vector& theta = sol.x;
    const double residual_var = S(j, j) - 2.0 * theta.dot(b) + theta.dot(A * theta);
    if (!(residual_var > 0.0)) {
      std::ostringstream msg;
      msg << "dantzig: non-positive residual variance for column " << j << " at delta "
          << delta;
      failure[c] = msg.str();
      return;
    }
    const double diag = 1.0 / residual_var;
    raw(j, j) = diag;
    for (std::size_t r = 0; r < rest.size(); ++r) raw(rest[r], j) = -diag * theta(static_cast<Index>(r));
    violation[c] = sol.max_violation;
    pivots[c] = sol.pivots;
  });
  for (const auto& f : failure) {
    if (!f.empty()) throw Error(f);
  }
  PrecisionEstimate est;
  est.method = Shrinkage::dantzig;
  est.lambda = delta;
  est.omega = symmetrize_min_magnitude(raw);
  est.iterations = std::accumulate(pivots.begin(), pivots.end(), 0);
  est.kkt_residual = *std::max_element(violation.begin(), violation.end());
  return est;
}

PrecisionEstimate dantzig(const CorrelationEstimate& S, double delta, double tol) {
  return dantzig(S.matrix, delta, tol);
}

EdgeSet edges_from_precision(const Matrix& omega, double zero_tol) {
  std::vector<std::pair<Index, Index>> edges;
  for (Index j = 0; j < omega.cols(); ++j) {
    for (Index i = 0; i < j; ++i) {
      if (std::abs(omega(i, j)) > zero_tol) edges.emplace_back(i, j);
    }
  }
  return EdgeSet(omega.rows(), std::move(edges));
}

EdgeSet edges_from_precision(const PrecisionEstimate& omega, double zero_tol) {
  return edges_from_precision(omega.omega, zero_tol);
}

}  // namespace skewgm
