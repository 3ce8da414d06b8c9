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

#include "skewgm/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "skewgm/parallel.hpp"

namespace skewgm {
namespace {

Matrix standard_normals(Index rows, Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix z(rows, cols);
  // Row-major fill so a prefix of rows is stable when n grows.
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) z(i, j) = normal(rng);
  }
  return z;
}

Matrix cholesky_lower(const Matrix& sigma, const char* who) {
  const Eigen::LLT<Matrix> llt(sigma);
  if (llt.info() != Eigen::Success) {
    throw Error(std::string(who) + ": covariance is not positive definite");
  }
  return llt.matrixL();
}

Matrix matrix_from_json(const nlohmann::json& j) {
  const auto rows = static_cast<Index>(j.size());
  const auto cols = rows > 0 ? static_cast<Index>(j.at(0).size()) : 0;
  Matrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) m(r, c) = j.at(r).at(c).get<double>();
  }
  return m;
}

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

void validate(const SimulationConfig& cfg) {
  if (cfg.p < 2) throw Error("simulation: p must be at least 2");
  if (cfg.n < 3) throw Error("simulation: n must be at least 3");
  if (!(cfg.sparsity > 0.0 && cfg.sparsity < 1.0)) throw Error("simulation: sparsity must lie in (0,1)");
  if (!(cfg.contamination_r >= 0.0 && cfg.contamination_r < 1.0)) {
    throw Error("simulation: contamination r must lie in [0,1)");
  }
  if (!(cfg.power_gamma > 0.0)) throw Error("simulation: gamma must be positive");
  if (!(cfg.contamination_sd > 0.0)) throw Error("simulation: contamination sd must be positive");
  if (!(cfg.diagonal_boost > 0.0)) throw Error("simulation: diagonal boost must be positive");
}

GroundTruth random_precision(int p, double sparsity, double off_diag_value, std::uint64_t seed,
                             double diagonal_boost, bool unit_variance) {
  if (p < 2) throw Error("random_precision: p must be at least 2");
  const long long total = static_cast<long long>(p) * (p - 1) / 2;
  const long long wanted =
      std::max(1LL, static_cast<long long>(std::floor(sparsity * static_cast<double>(total))));
  if (wanted > total) throw Error("random_precision: sparsity too large");

  std::vector<std::pair<Index, Index>> pairs;
  pairs.reserve(static_cast<std::size_t>(total));
  for (Index i = 0; i < p; ++i) {
    for (Index j = i + 1; j < p; ++j) pairs.emplace_back(i, j);
  }
  std::mt19937_64 rng(mix_seed(seed));
  std::vector<std::pair<Index, Index>> chosen;
  chosen.reserve(static_cast<std::size_t>(wanted));
  std::sample(pairs.begin(), pairs.end(), std::back_inserter(chosen), wanted, rng);

  Matrix omega = Matrix::Zero(p, p);
  for (auto [i, j] : chosen) {
    omega(i, j) = off_diag_value;
    omega(j, i) = off_diag_value;
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(omega, Eigen::EigenvaluesOnly);
  const double shift = std::abs(solver.eigenvalues().minCoeff()) + diagonal_boost;
  omega.diagonal().setConstant(shift);

  GroundTruth truth;
  truth.sigma = Eigen::LLT<Matrix>(omega).solve(Matrix::Identity(p, p));
  truth.sigma = 0.5 * (truth.sigma + truth.sigma.transpose()).eval();
  if (unit_variance) {
    const Vector d = truth.sigma.diagonal().cwiseSqrt();
    truth.sigma = d.cwiseInverse().asDiagonal() * truth.sigma * d.cwiseInverse().asDiagonal();
    truth.sigma.diagonal().setOnes();
    omega = d.asDiagonal() * omega * d.asDiagonal();
    omega = 0.5 * (omega + omega.transpose()).eval();
  }
  truth.omega = std::move(omega);
  truth.edges = EdgeSet(p, std::move(chosen));
  truth.off_diag_value = off_diag_value;
  truth.diagonal_boost = diagonal_boost;
  truth.unit_variance = unit_variance;
  return truth;
}

DataMatrix sample_gaussian(const GroundTruth& truth, int n, std::uint64_t seed) {
  const Matrix L = cholesky_lower(truth.sigma, "sample_gaussian");
  std::mt19937_64 rng(mix_seed(seed));
  const Matrix z = standard_normals(n, truth.sigma.rows(), rng);
  return DataMatrix(z * L.transpose());
}

DataMatrix contaminate(const DataMatrix& data, double r, double sd, std::uint64_t seed) {
  if (!(r >= 0.0 && r < 1.0)) throw Error("contaminate: r must lie in [0,1)");
  const Index n = data.n();
  const auto count = static_cast<Index>(std::floor(static_cast<double>(n) * r));
  if (count == 0) return data;
  Matrix x = data.values();
  std::mt19937_64 rng(mix_seed(seed));
  std::normal_distribution<double> noise(0.0, sd);
  std::vector<Index> rows(static_cast<std::size_t>(n));
  for (Index j = 0; j < data.p(); ++j) {
    std::iota(rows.begin(), rows.end(), Index{0});
    std::shuffle(rows.begin(), rows.end(), rng);
    for (Index k = 0; k < count; ++k) x(rows[static_cast<std::size_t>(k)], j) = noise(rng);
  }
  return data.with_values(std::move(x));
}

double power_moment(double gamma) {
  if (gamma == 1.0) return 1.0;
  return std::pow(2.0, gamma) * std::tgamma(gamma + 0.5) / std::sqrt(std::numbers::pi);
}

DataMatrix power_transform(const DataMatrix& data, double gamma) {
  if (!(gamma > 0.0)) throw Error("power_transform: gamma must be positive");
  if (gamma == 1.0) return data;
  const double norm = 1.0 / std::sqrt(power_moment(gamma));
  Matrix x = data.values().unaryExpr([&](double z) {
    return std::copysign(std::pow(std::abs(z), gamma), z) * norm;
  });
  return data.with_values(std::move(x));
}

DataMatrix sample_csn(const Matrix& latent_corr, const Vector& alpha, int n, std::uint64_t seed) {
  const Index p = latent_corr.rows();
  if (latent_corr.cols() != p || alpha.size() != p) throw Error("sample_csn: dimension mismatch");
  const Matrix L = cholesky_lower(latent_corr, "sample_csn");
  std::mt19937_64 rng(mix_seed(seed));
  const Matrix v = standard_normals(n, p, rng) * L.transpose();
  const Matrix u = (standard_normals(n, p, rng) * L.transpose()).cwiseAbs();
  Matrix x(n, p);
  for (Index j = 0; j < p; ++j) {
    const double scale = 1.0 / std::sqrt(1.0 + alpha(j) * alpha(j));
    x.col(j) = (alpha(j) * scale) * u.col(j) + scale * v.col(j);
  }
  return DataMatrix(std::move(x));
}

DataMatrix sample_csn_bivariate(double latent_corr, std::array<double, 2> alpha, int n,
                                std::uint64_t seed) {
  if (!(std::abs(latent_corr) < 1.0)) throw Error("sample_csn_bivariate: |latent_corr| must be < 1");
  Matrix corr(2, 2);
  corr << 1.0, latent_corr, latent_corr, 1.0;
  Vector a(2);
  a << alpha[0], alpha[1];
  return sample_csn(corr, a, n, seed);
}

SimulatedDataset simulate_dataset(const SimulationConfig& cfg) {
  validate(cfg);
  GroundTruth truth = random_precision(cfg.p, cfg.sparsity, cfg.off_diag_value,
                                       mix_seed(cfg.seed, 1), cfg.diagonal_boost, cfg.unit_variance);
  DataMatrix clean = sample_gaussian(truth, cfg.n, mix_seed(cfg.seed, 2));
  DataMatrix dirty =
      contaminate(clean, cfg.contamination_r, cfg.contamination_sd, mix_seed(cfg.seed, 3));
  return {std::move(truth), power_transform(dirty, cfg.power_gamma)};
}

nlohmann::json to_json(const SimulationConfig& cfg) {
  return {{"p", cfg.p},
          {"n", cfg.n},
          {"sparsity", cfg.sparsity},
          {"contamination_r", cfg.contamination_r},
          {"power_gamma", cfg.power_gamma},
          {"contamination_sd", cfg.contamination_sd},
          {"off_diag_value", cfg.off_diag_value},
          {"diagonal_boost", cfg.diagonal_boost},
          {"unit_variance", cfg.unit_variance},
          {"seed", cfg.seed}};
}

SimulationConfig simulation_config_from_json(const nlohmann::json& j) {
  SimulationConfig cfg;
  cfg.p = j.value("p", cfg.p);
  cfg.n = j.value("n", cfg.n);
  cfg.sparsity = j.value("sparsity", cfg.sparsity);
  cfg.contamination_r = j.value("contamination_r", cfg.contamination_r);
  cfg.power_gamma = j.value("power_gamma", cfg.power_gamma);
  cfg.contamination_sd = j.value("contamination_sd", cfg.contamination_sd);
  cfg.off_diag_value = j.value("off_diag_value", cfg.off_diag_value);
  cfg.diagonal_boost = j.value("diagonal_boost", cfg.diagonal_boost);
  cfg.unit_variance = j.value("unit_variance", cfg.unit_variance);
  cfg.seed = j.value("seed", cfg.seed);
  validate(cfg);
  return cfg;
}

nlohmann::json to_json(const GroundTruth& truth) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [i, j] : truth.edges.edges()) edges.push_back({i, j});
  return {{"p", truth.omega.rows()},
          {"off_diag_value", truth.off_diag_value},
          {"diagonal_boost", truth.diagonal_boost},
          {"unit_variance", truth.unit_variance},
          {"omega", matrix_to_json(truth.omega)},
          {"sigma", matrix_to_json(truth.sigma)},
          {"edges", std::move(edges)}};
}

GroundTruth ground_truth_from_json(const nlohmann::json& j) {
  GroundTruth truth;
  truth.omega = matrix_from_json(j.at("omega"));
  truth.sigma = matrix_from_json(j.at("sigma"));
  truth.off_diag_value = j.value("off_diag_value", 0.0);
  truth.diagonal_boost = j.value("diagonal_boost", 0.0);
  truth.unit_variance = j.value("unit_variance", false);
  std::vector<std::pair<Index, Index>> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<Index>(), e.at(1).get<Index>());
  truth.edges = EdgeSet(truth.omega.rows(), std::move(edges));
  return truth;
}

}  // namespace skewgm
