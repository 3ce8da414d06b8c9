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

// Slow, independent reference implementations used only by tests. Nothing
// here calls into the library under test.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/quadrature/exp_sinh.hpp>

namespace skewgm::oracle {

inline int sign(double v) { return (v > 0) - (v < 0); }

/// tau-b from the O(n^2) pair definition.
inline double kendall_tau_b(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  long long s = 0, tx = 0, ty = 0, n0 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const int a = sign(x[i] - x[j]);
      const int b = sign(y[i] - y[j]);
      s += a * b;
      ++n0;
      if (a == 0) ++tx;
      if (b == 0) ++ty;
    }
  }
  return static_cast<double>(s) /
         std::sqrt(static_cast<double>(n0 - tx) * static_cast<double>(n0 - ty));
}

/// Average ranks by counting: rank_i = #{x_j < x_i} + (#{x_j == x_i} + 1) / 2.
inline std::vector<double> average_ranks(std::span<const double> x) {
  std::vector<double> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    double less = 0, equal = 0;
    for (double v : x) {
      less += v < x[i];
      equal += v == x[i];
    }
    r[i] = less + (equal + 1) / 2;
  }
  return r;
}

inline double pearson(std::span<const double> x, std::span<const double> y) {
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

inline double spearman_rho(std::span<const double> x, std::span<const double> y) {
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  return pearson(rx, ry);
}

/// E|Z|^{2 gamma} = 2 * integral_0^inf z^{2 gamma} phi(z) dz by exp-sinh quadrature.
inline double power_moment_quadrature(double gamma) {
  boost::math::quadrature::exp_sinh<double> integrator;
  auto f = [gamma](double z) {
    // Log form keeps z -> infinity from producing inf * 0.
    return std::exp(2 * gamma * std::log(z) - z * z / 2) / std::sqrt(2 * std::numbers::pi);
  };
  return 2 * integrator.integrate(f, 0.0, std::numeric_limits<double>::infinity(), 1e-14);
}

/// Dual of the l1-penalized (diagonal included) Gaussian likelihood:
///   max log det W  s.t.  |W_ij - S_ij| <= lambda for all i, j.
/// Solved by projected gradient ascent with backtracking; the primal optimum
/// equals -log det W* - p.
struct GlassoDualResult {
  Eigen::MatrixXd W;
  double primal_objective = 0.0;
  int iterations = 0;
};

inline GlassoDualResult glasso_dual(const Eigen::MatrixXd& S, double lambda, int max_iter = 200000,
                                    double tol = 1e-13) {
  const Eigen::Index p = S.rows();
  auto project = [&](Eigen::MatrixXd W) {
    for (Eigen::Index i = 0; i < p; ++i)
      for (Eigen::Index j = 0; j < p; ++j)
        W(i, j) = std::clamp(W(i, j), S(i, j) - lambda, S(i, j) + lambda);
    return W;
  };
  auto logdet = [](const Eigen::MatrixXd& W, bool& ok) {
    Eigen::LLT<Eigen::MatrixXd> llt(W);
    ok = llt.info() == Eigen::Success;
    if (!ok) return 0.0;
    return 2 * llt.matrixLLT().diagonal().array().log().sum();
  };
  // S + lambda I is interior-feasible on the diagonal and PD for PSD S.
  Eigen::MatrixXd W = S;
  W.diagonal().array() += lambda;
  bool ok = true;
  double f = logdet(W, ok);
  double step = 1.0;
  int it = 0;
  for (; it < max_iter; ++it) {
    const Eigen::MatrixXd G = W.inverse();
    bool accepted = false;
    Eigen::MatrixXd next;
    double fn = f;
    for (int back = 0; back < 60; ++back) {
      next = project(W + step * G);
      fn = logdet(next, ok);
      // Armijo condition along the projection arc.
      if (ok && fn >= f + 1e-4 * (G.cwiseProduct(next - W)).sum()) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
    const double change = (next - W).cwiseAbs().maxCoeff();
    W = next;
    const double gain = fn - f;
    f = fn;
    step = std::min(step * 2, 1e3);
    if (change < tol && gain < tol) break;
  }
  return {W, -f - static_cast<double>(p), it};
}

/// Max violation of the glasso stationarity conditions, computed directly:
/// S - W + lambda * Z = 0 with Z_ij = sign(Omega_ij) when Omega_ij != 0 and
/// |Z_ij| <= 1 otherwise.
inline double glasso_kkt(const Eigen::MatrixXd& S, const Eigen::MatrixXd& omega, double lambda,
                         double zero_tol = 0.0) {
  const Eigen::MatrixXd W = omega.inverse();
  double worst = 0;
  for (Eigen::Index i = 0; i < S.rows(); ++i) {
    for (Eigen::Index j = 0; j < S.cols(); ++j) {
      const double g = S(i, j) - W(i, j);
      const double w = omega(i, j);
      double v;
      if (std::abs(w) > zero_tol) {
        v = std::abs(g + lambda * sign(w));
      } else {
        v = std::max(0.0, std::abs(g) - lambda);
      }
      worst = std::max(worst, v);
    }
  }
  return worst;
}

/// l1 norm of x and max(0, ||A x - b||_inf - r).
inline double l1(const Eigen::VectorXd& x) { return x.cwiseAbs().sum(); }
inline double box_violation(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                            const Eigen::VectorXd& x, double r) {
  return std::max(0.0, (A * x - b).cwiseAbs().maxCoeff() - r);
}

}  // namespace skewgm::oracle
