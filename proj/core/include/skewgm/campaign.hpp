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

// Simulation campaigns: scenarios x estimators x trials, scored by ROC
// around a stability-selected regularization level.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "skewgm/evaluate.hpp"
#include "skewgm/pipeline.hpp"
#include "skewgm/simulate.hpp"

namespace skewgm {

struct Scenario {
  std::string name;
  SimulationConfig sim;
};

/// r in {0.05, 0.1, 0.2} x gamma in {1.5, 2.5, 3} at p = 100, n = 200.
std::vector<Scenario> default_scenarios();

/// Whose stability-selected lambda centers the ROC grid.
enum class CenterSource {
  /// Every estimator uses its own selected lambda.
  per_estimator,
  /// All estimators use the lambda selected for `reference_estimator`.
  shared,
};

/// Which dataset the center is selected on.
enum class CenterScope {
  per_trial,
  /// Selected once per scenario on the trial-0 dataset and reused.
  global,
};

struct CampaignConfig {
  std::vector<Scenario> scenarios = default_scenarios();
  std::vector<Estimator> estimators = {std::begin(kAllEstimators), std::end(kAllEstimators)};
  int trials = 50;
  std::uint64_t seed = 0;
  Shrinkage shrinkage = Shrinkage::glasso;
  std::optional<AlphaMethod> alpha_method;

  int num_subsamples = 20;
  int subsample_size = 0;
  double beta_threshold = 0.05;
  int stars_grid_size = 20;
  double stars_grid_min_ratio = 0.1;

  int roc_points = 30;
  double roc_half_width = 0.1;

  CenterSource center_source = CenterSource::per_estimator;
  CenterScope center_scope = CenterScope::per_trial;
  Estimator reference_estimator = Estimator::skeptic_tau;
};

void validate(const CampaignConfig& cfg);

struct TrialRecord {
  std::string scenario;
  std::size_t scenario_index = 0;
  Estimator estimator = Estimator::skeptic_tau;
  int trial = 0;
  std::uint64_t data_seed = 0;
  bool ok = false;
  std::string error;
  double lambda_center = 0.0;
  bool stars_threshold_met = false;
  double auc = 0.0;
  /// Rates at lambda_center.
  double fpr = 0.0;
  double fnr = 0.0;
  long long edge_count = 0;
  long long true_edge_count = 0;
  RocResult roc;
};

struct CellSummary {
  std::string scenario;
  Estimator estimator = Estimator::skeptic_tau;
  MeanSe auc;
  MeanSe fpr;
  MeanSe fnr;
  MeanSe lambda_center;
  int ok_trials = 0;
  int failed_trials = 0;
  /// Pointwise mean over trials of the k-th grid point.
  RocResult mean_roc;
};

struct CampaignResult {
  CampaignConfig config;
  std::vector<TrialRecord> trials;
  /// Scenario-major, estimator-minor.
  std::vector<CellSummary> cells;
};

/// ROC grid of `count` points within +-half_width of center. The half
/// width shrinks to 0.999 * center when center - half_width would not be
/// positive.
std::vector<double> roc_grid(double center, double half_width, int count);

/// Seed of the dataset for (scenario, trial).
std::uint64_t trial_seed(std::uint64_t campaign_seed, std::size_t scenario, int trial);

CampaignResult run_campaign(const CampaignConfig& cfg);

std::vector<CellSummary> summarize(const CampaignConfig& cfg,
                                   const std::vector<TrialRecord>& trials);

/// One row per (scenario, estimator, trial).
void write_trials_csv(std::ostream& out, const std::vector<TrialRecord>& trials);

/// Mean ROC curve of every cell, in the evaluate CSV layout.
void write_mean_roc_csv(std::ostream& out, const std::vector<CellSummary>& cells);

/// Config echo plus, per scenario, per estimator: AUC/FPR/FNR as fractions
/// (full precision) and as percentages rounded to one decimal.
nlohmann::ordered_json summary_to_json(const CampaignResult& result);

nlohmann::ordered_json to_json(const CampaignConfig& cfg);
CampaignConfig campaign_config_from_json(const nlohmann::json& j);

}  // namespace skewgm
