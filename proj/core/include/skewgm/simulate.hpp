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

// Synthetic data: random sparse precision matrices, Gaussian sampling,
// outlier contamination, power transformation, and closed skew-normal
// sampling through the half-normal/normal representation.

#pragma once

#include <array>
#include <cstdint>

#include <nlohmann/json.hpp>

#include "skewgm/precision.hpp"
#include "skewgm/types.hpp"

namespace skewgm {

struct SimulationConfig {
  int p = 100;
  int n = 200;
  double sparsity = 0.02;
  double contamination_r = 0.05;
  double power_gamma = 1.5;
  /// Standard deviation of replacement draws.
  double contamination_sd = 5.0;
  double off_diag_value = 0.3;
  /// Added to |lambda_min| of the zero-diagonal pattern matrix.
  double diagonal_boost = 1.2;
  /// Rescale so sigma has unit diagonal (omega becomes D omega D).
  bool unit_variance = false;
  std::uint64_t seed = 0;
};

void validate(const SimulationConfig& cfg);

struct GroundTruth {
  Matrix omega;
  Matrix sigma;
  EdgeSet edges;
  double off_diag_value = 0.0;
  double diagonal_boost = 0.0;
  bool unit_variance = false;
};

/// floor(sparsity * p(p-1)/2) (at least one) pairs chosen uniformly, each
/// set to off_diag_value; the diagonal is |lambda_min| + diagonal_boost.
/// With unit_variance the pair is rescaled so that sigma is a correlation
/// matrix; the support is unchanged.
GroundTruth random_precision(int p, double sparsity, double off_diag_value, std::uint64_t seed,
                             double diagonal_boost = 1.2, bool unit_variance = false);

/// n draws from N(0, truth.sigma) via its Cholesky factor.
DataMatrix sample_gaussian(const GroundTruth& truth, int n, std::uint64_t seed);

/// Replaces floor(n r) uniformly chosen entries per column by N(0, sd^2).
DataMatrix contaminate(const DataMatrix& data, double r, double sd, std::uint64_t seed);

/// E|Z|^{2 gamma} = 2^gamma Gamma(gamma + 1/2) / sqrt(pi) for Z ~ N(0, 1).
double power_moment(double gamma);

/// z -> sign(z) |z|^gamma / sqrt(power_moment(gamma)).
DataMatrix power_transform(const DataMatrix& data, double gamma);

/// Two-column closed skew-normal sample: X = A0 U + B0 V with V a Gaussian
/// copula sample, U = |V'| for an independent copy V'.
DataMatrix sample_csn_bivariate(double latent_corr, std::array<double, 2> alpha, int n,
                                std::uint64_t seed);

/// p-column generalization of sample_csn_bivariate for a full latent
/// correlation matrix.
DataMatrix sample_csn(const Matrix& latent_corr, const Vector& alpha, int n, std::uint64_t seed);

struct SimulatedDataset {
  GroundTruth truth;
  DataMatrix data;
};

/// random_precision -> sample_gaussian -> contaminate -> power_transform,
/// with sub-seeds derived from cfg.seed.
SimulatedDataset simulate_dataset(const SimulationConfig& cfg);

nlohmann::json to_json(const SimulationConfig& cfg);
SimulationConfig simulation_config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const GroundTruth& truth);
GroundTruth ground_truth_from_json(const nlohmann::json& j);

}  // namespace skewgm
