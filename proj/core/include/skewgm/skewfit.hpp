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

// Per-marginal skewness (shape) estimation for skew-normal and skew-t
// margins. Only the direct shape parameter alpha is needed downstream.

#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "skewgm/types.hpp"

namespace skewgm {

/// |alpha| is never reported above this value.
inline constexpr double kAlphaCap = 50.0;

/// Degrees-of-freedom grid profiled by the skew-t fit.
inline constexpr std::array<double, 7> kSkewTDofGrid = {3, 4, 5, 7, 10, 20, 50};

enum class AlphaMethod { moments, skew_normal_mle, skew_t_mle };
enum class SkewFamily { skew_normal, skew_t };

std::string_view to_string(AlphaMethod m);

struct ColumnFitDiagnostics {
  bool converged = true;
  /// Sample skewness exceeded what |alpha| <= kAlphaCap can produce.
  bool clamped = false;
  /// MLE did not converge; alpha is the moments estimate.
  bool fell_back = false;
  double log_likelihood = 0.0;
  double location = 0.0;
  double scale = 1.0;
  /// Selected degrees of freedom (skew-t only, 0 otherwise).
  double dof = 0.0;
  int iterations = 0;
};

struct SkewnessVector {
  Vector alpha;
  AlphaMethod method = AlphaMethod::moments;
  std::vector<ColumnFitDiagnostics> diagnostics;

  /// All-zero alpha; the skew correction then reduces to the identity.
  static SkewnessVector zeros(Index p);
};

/// Skewness of a skew-normal with shape alpha:
/// ((4 - pi)/2) (delta sqrt(2/pi))^3 / (1 - 2 delta^2/pi)^{3/2}.
double skew_normal_skewness(double alpha);

/// Largest |skewness| reachable with |alpha| <= kAlphaCap.
double max_skewness_at_cap();

/// Inverse of skew_normal_skewness after clamping |g1| to
/// max_skewness_at_cap(). Sets *clamped when clamping happened.
double alpha_from_skewness(double g1, bool* clamped = nullptr);

/// Biased sample skewness m3 / m2^{3/2}.
double sample_skewness(std::span<const double> x);

/// Moment-matching estimate per column. Requires n >= 8.
SkewnessVector estimate_alpha_moments(const DataMatrix& data);

/// Univariate skew-normal log-likelihood at (location, scale, alpha).
double skew_normal_loglik(std::span<const double> x, double location, double scale,
                          double alpha);

/// Univariate skew-t log-likelihood at (location, scale, alpha, dof).
double skew_t_loglik(std::span<const double> x, double location, double scale, double alpha,
                     double dof);

struct UnivariateSkewFit {
  double alpha = 0.0;
  ColumnFitDiagnostics diagnostics;
};

UnivariateSkewFit fit_skew_normal(std::span<const double> x);
UnivariateSkewFit fit_skew_t(std::span<const double> x);

/// Per-column maximum likelihood. Requires n >= 20.
SkewnessVector estimate_alpha_mle(const DataMatrix& data, SkewFamily family);

}  // namespace skewgm
