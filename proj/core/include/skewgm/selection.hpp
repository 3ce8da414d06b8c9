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

// StARS: stability approach to regularization selection.

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "skewgm/precision.hpp"
#include "skewgm/types.hpp"

namespace skewgm {

struct StarsConfig {
  int num_subsamples = 20;
  /// 0 selects floor(10 sqrt(n)) when n > 144 and floor(0.8 n) otherwise.
  int subsample_size = 0;
  double beta_threshold = 0.05;
  /// Strictly decreasing, positive.
  std::vector<double> lambda_grid;
  std::uint64_t seed = 0;
};

/// Maps a (sub)sample to one edge set per grid value, in grid order.
using EdgePathFn =
    std::function<std::vector<EdgeSet>(const DataMatrix&, std::span<const double>)>;

struct InstabilityPoint {
  double lambda = 0.0;
  double instability = 0.0;
  double monotone = 0.0;
};

struct StarsResult {
  double lambda_star = 0.0;
  std::size_t index = 0;
  std::vector<InstabilityPoint> curve;
  /// False when even the largest lambda is unstable; lambda_star is then
  /// the smallest grid value.
  bool threshold_met = true;
  int subsample_size = 0;
};

int default_subsample_size(Index n);

/// Validates cfg against n and throws Error on violation.
void validate(const StarsConfig& cfg, Index n);

/// Selects the smallest lambda whose monotonized instability
/// sup_{lambda' >= lambda} D(lambda') stays at or below beta_threshold.
StarsResult stars_select(const DataMatrix& data, const EdgePathFn& pipeline,
                         const StarsConfig& cfg);

/// `count` equally spaced values strictly inside
/// (center - half_width, center + half_width), descending.
std::vector<double> lambda_grid_around(double center, double half_width, int count);

/// `count` log-spaced values from max |S_offdiag| down to
/// min_ratio * max |S_offdiag|, descending.
std::vector<double> log_lambda_grid(const Matrix& S, int count, double min_ratio = 0.1);

}  // namespace skewgm
