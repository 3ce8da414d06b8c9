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

// End-to-end estimation: correlation estimate -> (repair) -> regularization
// selection -> precision matrix -> graph.

#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "skewgm/precision.hpp"
#include "skewgm/selection.hpp"
#include "skewgm/skeptic.hpp"
#include "skewgm/skewfit.hpp"
#include "skewgm/types.hpp"

namespace skewgm {

enum class Estimator {
  pearson,
  skeptic_rho,
  skeptic_tau,
  skew_skeptic_rho,
  skew_skeptic_tau,
  skew_keptic,
};

inline constexpr std::array<Estimator, 6> kAllEstimators = {
    Estimator::skeptic_rho,      Estimator::skeptic_tau, Estimator::skew_skeptic_rho,
    Estimator::skew_skeptic_tau, Estimator::skew_keptic, Estimator::pearson};

std::string_view to_string(Estimator e);
Estimator estimator_from_string(std::string_view name);
Shrinkage shrinkage_from_string(std::string_view name);
AlphaMethod alpha_method_from_string(std::string_view name);

bool uses_skewness(Estimator e);

/// Shape-fitting method an estimator uses unless overridden: skew-normal
/// MLE for the skew-SKEPTIC pair, skew-t MLE for skew-KEPTIC.
AlphaMethod default_alpha_method(Estimator e);

struct PipelineOptions {
  Estimator estimator = Estimator::skeptic_tau;
  Shrinkage shrinkage = Shrinkage::glasso;
  std::optional<AlphaMethod> alpha_method;
  /// Eigenvalue floor for psd_repair; repair runs whenever glasso is used.
  double eig_floor = kDefaultEigFloor;
  GlassoOptions glasso;
  double lp_tol = 1e-6;
  double zero_tol = kDefaultZeroTol;
};

struct CorrelationStage {
  /// Estimate handed to the shrinkage step (after repair, if any).
  CorrelationEstimate correlation;
  /// Estimate before repair.
  CorrelationEstimate raw;
  std::optional<SkewnessVector> alpha;
};

SkewnessVector estimate_alpha(const DataMatrix& data, AlphaMethod method);

/// Correlation estimate for opts.estimator. When `fixed_alpha` is given it
/// is used instead of fitting shapes on `data`.
CorrelationStage estimate_correlation(const DataMatrix& data, const PipelineOptions& opts,
                                      const SkewnessVector* fixed_alpha = nullptr);

PrecisionEstimate estimate_precision(const CorrelationEstimate& S, double lambda,
                                     const PipelineOptions& opts);

/// Edge sets for each lambda, in the order given. glasso paths are
/// warm-started.
std::vector<EdgeSet> edge_path(const CorrelationEstimate& S, std::span<const double> lambdas,
                               const PipelineOptions& opts);

/// Pipeline closure for stars_select. Shapes are taken from `fixed_alpha`
/// when provided and refitted per subsample otherwise.
EdgePathFn make_edge_path_fn(const PipelineOptions& opts,
                             std::optional<SkewnessVector> fixed_alpha = std::nullopt);

struct FixedLambda {
  double lambda = 0.0;
};

struct StarsSelection {
  StarsConfig config;
  /// Used to build config.lambda_grid when it is empty.
  int grid_size = 20;
  double grid_min_ratio = 0.1;
  /// Refit shapes on every subsample instead of reusing full-data fits.
  bool refit_alpha = false;
};

using Selection = std::variant<FixedLambda, StarsSelection>;

struct PipelineResult {
  CorrelationStage stage;
  PrecisionEstimate precision;
  EdgeSet edges;
  double lambda = 0.0;
  std::optional<StarsResult> stars;
};

PipelineResult run_pipeline(const DataMatrix& data, const PipelineOptions& opts,
                            const Selection& selection);

}  // namespace skewgm
