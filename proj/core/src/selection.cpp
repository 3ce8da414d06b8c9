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

#include "skewgm/selection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "skewgm/parallel.hpp"

namespace skewgm {

int default_subsample_size(Index n) {
  if (n > 144) return static_cast<int>(std::floor(10.0 * std::sqrt(static_cast<double>(n))));
  return static_cast<int>(std::floor(0.8 * static_cast<double>(n)));
}

void validate(const StarsConfig& cfg, Index n) {
  if (cfg.num_subsamples < 1) throw Error("stars: num_subsamples must be positive");
  const int b = cfg.subsample_size > 0 ? cfg.subsample_size : default_subsample_size(n);
  if (b < 3 || b >= n) {
    throw Error("stars: subsample size " + std::to_string(b) + " must lie in [3, n) with n = " +
                std::to_string(n));
  }
  if (!(cfg.beta_threshold > 0.0 && cfg.beta_threshold < 0.5)) {
    throw Error("stars: beta_threshold must lie in (0, 0.5)");
  }
  if (cfg.lambda_grid.empty()) throw Error("stars: empty lambda grid");
  for (std::size_t k = 0; k < cfg.lambda_grid.size(); ++k) {
    if (!(cfg.lambda_grid[k] > 0.0)) throw Error("stars: lambda grid must be positive");
    if (k > 0 && !(cfg.lambda_grid[k] < cfg.lambda_grid[k - 1])) {
      throw Error("stars: lambda grid must be strictly decreasing");
    }
  }
}

StarsResult stars_select(const DataMatrix& data, const EdgePathFn& pipeline,
                         const StarsConfig& cfg) {
  validate(cfg, data.n());
  const Index n = data.n();
  const Index p = data.p();
  const int b = cfg.subsample_size > 0 ? cfg.subsample_size : default_subsample_size(n);
  const std::size_t grid = cfg.lambda_grid.size();
  const auto subsamples = static_cast<std::size_t>(cfg.num_subsamples);

  // counts[s][g] is the p x p edge indicator of subsample s at grid point g.
  std::vector<std::vector<EdgeSet>> paths(subsamples);
  parallel_for(subsamples, [&](std::size_t s) {
    std::mt19937_64 rng(mix_seed(cfg.seed, s));
    std::vector<Index> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), Index{0});
    std::vector<Index> rows;
    rows.reserve(static_cast<std::size_t>(b));
    std::sample(all.begin(), all.end(), std::back_inserter(rows), b, rng);
    auto path = pipeline(data.select_rows(rows), cfg.lambda_grid);
    if (path.size() != grid) throw Error("stars: pipeline returned wrong path length");
    paths[s] = std::move(path);
  });

  const double pairs = static_cast<double>(p * (p - 1) / 2);
  StarsResult result;
  result.subsample_size = b;
  result.curve.resize(grid);
  Matrix freq(p, p);
  double running = 0.0;
  for (std::size_t g = 0; g < grid; ++g) {
    freq.setZero();
    for (std::size_t s = 0; s < subsamples; ++s) {
      for (auto [i, j] : paths[s][g].edges()) freq(i, j) += 1.0;
    }
    freq /= static_cast<double>(subsamples);
    double total = 0.0;
    for (Index j = 0; j < p; ++j) {
      for (Index i = 0; i < j; ++i) total += 2.0 * freq(i, j) * (1.0 - freq(i, j));
    }
    const double d = total / pairs;
    running = std::max(running, d);
    result.curve[g] = {cfg.lambda_grid[g], d, running};
  }

  // Along the descending grid the monotonized curve is non-decreasing, so
  // the admissible lambdas form a prefix.
  if (result.curve.front().monotone > cfg.beta_threshold) {
    result.threshold_met = false;
    result.index = grid - 1;
  } else {
    std::size_t idx = 0;
    while (idx + 1 < grid && result.curve[idx + 1].monotone <= cfg.beta_threshold) ++idx;
    result.index = idx;
  }
  result.lambda_star = cfg.lambda_grid[result.index];
  return result;
}

std::vector<double> lambda_grid_around(double center, double half_width, int count) {
  if (count < 1) throw Error("lambda_grid_around: count must be positive");
  if (half_width < 0.0) throw Error("lambda_grid_around: negative half width");
  if (!(center - half_width > 0.0)) {
    std::ostringstream msg;
    msg << "lambda_grid_around: lower endpoint " << center - half_width
        << " is not positive";
    throw Error(msg.str());
  }
  const double step = 2.0 * half_width / static_cast<double>(count + 1);
  std::vector<double> grid(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    grid[static_cast<std::size_t>(k)] = center + half_width - step * static_cast<double>(k + 1);
  }
  return grid;
}

std::vector<double> log_lambda_grid(const Matrix& S, int count, double min_ratio) {
  if (count < 1) throw Error("log_lambda_grid: count must be positive");
  if (!(min_ratio > 0.0 && min_ratio < 1.0)) throw Error("log_lambda_grid: min_ratio must lie in (0,1)");
  double top = 0.0;
  for (Index j = 0; j < S.cols(); ++j) {
    for (Index i = 0; i < j; ++i) top = std::max(top, std::abs(S(i, j)));
  }
  if (!(top > 0.0)) throw Error("log_lambda_grid: correlation matrix has no off-diagonal mass");
  std::vector<double> grid(static_cast<std::size_t>(count));
  if (count == 1) {
    grid[0] = top;
    return grid;
  }
  const double lo = std::log(top * min_ratio);
  const double hi = std::log(top);
  for (int k = 0; k < count; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(count - 1);
    grid[static_cast<std::size_t>(k)] = std::exp(hi + (lo - hi) * t);
  }
  return grid;
}

}  // namespace skewgm
