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

// Skew-corrected rank correlation estimates and indefiniteness repair.
//
// The skew-corrected estimate multiplies each off-diagonal sine-transformed
// rank statistic by
//
//   B_ij = (1 + a_i a_j) / sqrt((1 + a_i^2)(1 + a_j^2)),
//
// the correlation between the skewed latent margins implied by the
// half-normal/normal stochastic representation. |B_ij| <= 1, with equality
// iff a_i == a_j, so concordant skewness preserves dependence and
// discordant skewness attenuates it.

#pragma once

#include "skewgm/skewfit.hpp"
#include "skewgm/types.hpp"

namespace skewgm {

struct SkewCorrectionMatrix {
  Matrix B;
};

/// Correction factor for one pair of shapes.
double skew_correction_factor(double alpha_i, double alpha_j);

SkewCorrectionMatrix skew_correction(const Vector& alpha);
SkewCorrectionMatrix skew_correction(const SkewnessVector& alpha);

/// Multiplies the off-diagonal of a sine-transformed estimate by B.
CorrelationEstimate apply_skew_correction(const CorrelationEstimate& base,
                                          const SkewnessVector& alpha);

/// Skew-corrected (S)KEPTIC estimate from raw data.
///
/// statistic must be kendall or spearman. The spearman form is only
/// justified for closed skew-normal latent laws; the kendall form also
/// covers skew-t.
CorrelationEstimate skew_skeptic(const DataMatrix& data, Statistic statistic,
                                 const SkewnessVector& alpha);

/// Plain (untransformed, uncorrected) Pearson correlation.
CorrelationEstimate pearson_correlation(const DataMatrix& data);

inline constexpr double kDefaultEigFloor = 1e-4;

/// Eigenvalue clipping followed by rescaling to unit diagonal.
///
/// Inputs whose smallest eigenvalue is at least eig_floor / 2 are returned
/// unchanged with psd_repaired == false. Repaired outputs always satisfy
/// that bound, so the operation is idempotent.
CorrelationEstimate psd_repair(const CorrelationEstimate& est,
                               double eig_floor = kDefaultEigFloor);

double min_eigenvalue(const Matrix& symmetric);

}  // namespace skewgm
