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

#include "skewgm/skeptic.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "skewgm/rankcorr.hpp"

namespace skewgm {

double skew_correction_factor(double alpha_i, double alpha_j) {
  return (1.0 + alpha_i * alpha_j) /
         std::sqrt((1.0 + alpha_i * alpha_i) * (1.0 + alpha_j * alpha_j));
}

SkewCorrectionMatrix skew_correction(const Vector& alpha) {
  const Index p = alpha.size();
  Matrix B(p, p);
  for (Index i = 0; i < p; ++i) {
    B(i, i) = 1.0;
    for (Index j = i + 1; j < p; ++j) {
      const double b = alpha(i) == alpha(j) ? 1.0 : skew_correction_factor(alpha(i), alpha(j));
      B(i, j) = b;
      B(j, i) = b;
    }
  }
  return {std::move(B)};
}

SkewCorrectionMatrix skew_correction(const SkewnessVector& alpha) {
  return skew_correction(alpha.alpha);
}

CorrelationEstimate apply_skew_correction(const CorrelationEstimate& base,
                                          const SkewnessVector& alpha) {
  if (alpha.alpha.size() != base.matrix.rows()) {
    throw Error("apply_skew_correction: alpha length does not match matrix dimension");
  }
  const Matrix B = skew_correction(alpha).B;
  CorrelationEstimate out = base;
  out.matrix = base.matrix.cwiseProduct(B);
  out.matrix.diagonal().setOnes();
  out.skew_corrected = true;
  return out;
}

CorrelationEstimate skew_skeptic(const DataMatrix& data, Statistic statistic,
                                 const SkewnessVector& alpha) {
  switch (statistic) {
    case Statistic::kendall:
      return apply_skew_correction(skeptic_from_tau(kendall_tau_matrix(data)), alpha);
    case Statistic::spearman:
      return apply_skew_correction(skeptic_from_rho(spearman_rho_matrix(data)), alpha);
    case Statistic::pearson:
      break;
  }
  throw Error("skew_skeptic: statistic must be kendall or spearman");
}

CorrelationEstimate pearson_correlation(const DataMatrix& data) {
  const Matrix& x = data.values();
  Matrix centered = x.rowwise() - x.colwise().mean();
  for (Index j = 0; j < centered.cols(); ++j) {
    const double norm = centered.col(j).norm();
    if (!(norm > 0.0)) throw DegenerateColumnError(j, data.labels()[j]);
    centered.col(j) /= norm;
  }
  Matrix r = centered.transpose() * centered;
  r = 0.5 * (r + r.transpose()).eval();
  r = r.cwiseMax(-1.0).cwiseMin(1.0);
  r.diagonal().setOnes();
  return {std::move(r), Statistic::pearson, false, false, false};
}

double min_eigenvalue(const Matrix& symmetric) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(symmetric, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

CorrelationEstimate psd_repair(const CorrelationEstimate& est, double eig_floor) {
  const double accept = 0.5 * eig_floor;
  CorrelationEstimate out = est;
  for (int round = 0; round < 100; ++round) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(out.matrix);
    if (solver.eigenvalues().minCoeff() >= accept) return out;
    const Vector clipped = solver.eigenvalues().cwiseMax(eig_floor);
    Matrix rebuilt = solver.eigenvectors() * clipped.asDiagonal() * solver.eigenvectors().transpose();
    const Vector scale = rebuilt.diagonal().cwiseSqrt().cwiseInverse();
    rebuilt = scale.asDiagonal() * rebuilt * scale.asDiagonal();
    out.matrix = 0.5 * (rebuilt + rebuilt.transpose());
    out.matrix.diagonal().setOnes();
    out.psd_repaired = true;
  }
  throw Error("psd_repair: eigenvalue clipping did not reach the floor");
}

}  // namespace skewgm
