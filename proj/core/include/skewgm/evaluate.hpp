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

// Graph-recovery scoring against a known edge set.

#pragma once

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "skewgm/precision.hpp"

namespace skewgm {

struct Confusion {
  long long fp = 0;
  long long fn = 0;
  long long tp = 0;
  long long tn = 0;
};

Confusion confusion(const EdgeSet& estimated, const EdgeSet& truth);

struct Rates {
  double fnr = 0.0;
  double fpr = 0.0;
};

/// fnr = fn / |E|, fpr = fp / ((p choose 2) - |E|). Requires |E| >= 1.
Rates rates(long long fp, long long fn, const EdgeSet& truth);

struct RocPoint {
  double lambda = 0.0;
  double fpr = 0.0;
  double fnr = 0.0;
  double tpr = 0.0;
};

struct RocResult {
  std::vector<RocPoint> points;
  double auc = 0.0;
  int trial_count = 1;
};

/// Trapezoidal area under the (FPR, TPR) polyline through the points
/// plus (0,0) and (1,1). Points are sorted by FPR; equal FPRs are merged
/// by averaging their TPRs.
double auc_from_points(std::span<const RocPoint> points);

/// Scores a precomputed edge path (one EdgeSet per grid value).
RocResult roc_from_path(std::span<const double> grid, std::span<const EdgeSet> path,
                        const EdgeSet& truth);

/// Evaluates `estimator` at every grid value. grid must be non-empty and
/// descending.
RocResult roc_curve(std::span<const double> grid,
                    const std::function<EdgeSet(double)>& estimator, const EdgeSet& truth);

struct EdgeComparison {
  long long only_a = 0;
  long long only_b = 0;
  long long both = 0;
};

EdgeComparison compare_edgesets(const EdgeSet& a, const EdgeSet& b);

struct MeanSe {
  double mean = 0.0;
  /// Sample standard deviation across trials. Published simulation tables
  /// label this spread "(s.e.)".
  double sd = 0.0;
  /// Standard error of the mean, sd / sqrt(count).
  double se = 0.0;
  int count = 0;
};

MeanSe mean_se(std::span<const double> values);

/// CSV with header: scenario,estimator,lambda,fpr,fnr,tpr
void write_roc_csv(std::ostream& out, const std::string& scenario, const std::string& estimator,
                   const RocResult& roc, bool header = true);

}  // namespace skewgm
