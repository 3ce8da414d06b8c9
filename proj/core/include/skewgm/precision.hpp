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

// Sparse precision-matrix estimation from a correlation estimate, and
// extraction of the implied undirected graph.

#pragma once

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "skewgm/types.hpp"

namespace skewgm {

enum class Shrinkage { glasso, clime, dantzig };

std::string_view to_string(Shrinkage s);

struct PrecisionEstimate {
  Matrix omega;
  Shrinkage method = Shrinkage::glasso;
  double lambda = 0.0;
  int iterations = 0;
  /// glasso: max stationarity violation. clime/dantzig: max constraint violation.
  double kkt_residual = 0.0;
  bool converged = true;
};

/// Undirected simple graph on p nodes; edges stored sorted with i < j.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(Index p) : p_(p) {}
  EdgeSet(Index p, std::vector<std::pair<Index, Index>> edges);

  Index p() const { return p_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  const std::vector<std::pair<Index, Index>>& edges() const { return edges_; }
  bool contains(Index i, Index j) const;

  /// (p choose 2)
  long long pair_count() const { return static_cast<long long>(p_) * (p_ - 1) / 2; }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  Index p_ = 0;
  std::vector<std::pair<Index, Index>> edges_;
};

struct GlassoOptions {
  /// Sweeps stop when the mean absolute change of the working covariance
  /// off-diagonal falls below tol * mean |S_offdiag|.
  double tol = 1e-4;
  int max_iter = 1000;
};

/// Penalized Gaussian log-likelihood maximizer (block coordinate descent,
/// each block a coordinate-descent lasso). The l1 penalty includes the
/// diagonal. S must be positive semidefinite.
PrecisionEstimate glasso(const Matrix& S, double lambda, const GlassoOptions& options = {});
PrecisionEstimate glasso(const CorrelationEstimate& S, double lambda,
                         const GlassoOptions& options = {});

/// Solves over every lambda, warm-starting from larger to smaller values.
/// Results are returned in the order of `lambdas`.
std::vector<PrecisionEstimate> glasso_path(const Matrix& S, std::span<const double> lambdas,
                                           const GlassoOptions& options = {});

/// log det(Omega) - tr(S Omega) - lambda * sum |Omega_ij|.
double glasso_objective(const Matrix& S, const Matrix& omega, double lambda);

/// Largest violation of the glasso stationarity conditions, with W = Omega^{-1}.
double glasso_kkt_residual(const Matrix& S, const Matrix& omega, double lambda);

/// Column-wise min ||b||_1 s.t. ||S b - e_i||_inf <= lambda, then
/// min-magnitude symmetrization.
PrecisionEstimate clime(const Matrix& S, double lambda, double tol = 1e-6);
PrecisionEstimate clime(const CorrelationEstimate& S, double lambda, double tol = 1e-6);

/// Graphical Dantzig selector: nodewise min ||theta||_1 under
/// ||S_{-j,j} - S_{-j,-j} theta||_inf <= delta, converted to precision
/// columns through the residual variance and symmetrized by min magnitude.
PrecisionEstimate dantzig(const Matrix& S, double delta, double tol = 1e-6);
PrecisionEstimate dantzig(const CorrelationEstimate& S, double delta, double tol = 1e-6);

/// omega_ij = omega_ji = whichever of the two has smaller magnitude.
Matrix symmetrize_min_magnitude(const Matrix& omega);

inline constexpr double kDefaultZeroTol = 1e-8;

EdgeSet edges_from_precision(const Matrix& omega, double zero_tol = kDefaultZeroTol);
EdgeSet edges_from_precision(const PrecisionEstimate& omega, double zero_tol = kDefaultZeroTol);

}  // namespace skewgm
