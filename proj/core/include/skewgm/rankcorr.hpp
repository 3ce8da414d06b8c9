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

// Rank statistics and the sine transforms that map them to latent
// Gaussian-copula correlations.

#pragma once

#include <span>
#include <vector>

#include "skewgm/types.hpp"

namespace skewgm {

/// n x p matrix of normalized ranks r_ij / (n + 1), ties averaged.
struct RankMatrix {
  Matrix ranks;
};

/// 1-based average ranks (ties share the mean of their positions).
std::vector<double> average_ranks(std::span<const double> x);

RankMatrix normalized_ranks(const DataMatrix& data);

/// Kendall's tau-b between two equally long samples, O(n log n).
///
/// Returns NaN when either sample is constant.
double kendall_tau_b(std::span<const double> x, std::span<const double> y);

/// Pairwise tau-b matrix with unit diagonal.
/// Throws DegenerateColumnError for constant columns.
Matrix kendall_tau_matrix(const DataMatrix& data);

/// Pearson correlation of average ranks, unit diagonal.
/// Throws DegenerateColumnError for constant columns.
Matrix spearman_rho_matrix(const DataMatrix& data);

/// Off-diagonal sin(pi/2 * tau), unit diagonal.
CorrelationEstimate skeptic_from_tau(const Matrix& tau);

/// Off-diagonal 2 sin(pi/6 * rho), unit diagonal.
CorrelationEstimate skeptic_from_rho(const Matrix& rho);

/// Phi^{-1}(r_ij / (n + 1)) for every entry; column ranks are preserved.
DataMatrix normal_scores(const DataMatrix& data);

}  // namespace skewgm
