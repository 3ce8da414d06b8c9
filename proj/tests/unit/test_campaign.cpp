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

#include <sstream>

#include <gtest/gtest.h>

#include "skewgm/campaign.hpp"

namespace skewgm {
namespace {

CampaignConfig tiny_config() {
  CampaignConfig cfg;
  Scenario s;
  s.name = "tiny";
  s.sim.p = 10;
  s.sim.n = 60;
  s.sim.sparsity = 0.15;
  cfg.scenarios = {s};
  cfg.estimators = {Estimator::skeptic_tau, Estimator::pearson, Estimator::skew_skeptic_tau};
  cfg.alpha_method = AlphaMethod::moments;
  cfg.trials = 2;
  cfg.seed = 99;
  cfg.num_subsamples = 6;
  cfg.stars_grid_size = 8;
  cfg.roc_points = 6;
  return cfg;
}

std::string tables(const CampaignResult& r) {
  std::ostringstream out;
  write_trials_csv(out, r.trials);
  write_mean_roc_csv(out, r.cells);
  out << summary_to_json(r).dump();
  return out.str();
}

TEST(DefaultScenarios, NineNamedCells) {
  const auto s = default_scenarios();
  ASSERT_EQ(s.size(), 9u);
  EXPECT_EQ(s.front().name, "r=0.05,gamma=1.5");
  EXPECT_EQ(s.back().sim.contamination_r, 0.2);
  EXPECT_EQ(s.back().sim.power_gamma, 3.0);
  for (const auto& sc : s) {
    EXPECT_EQ(sc.sim.p, 100);
    EXPECT_EQ(sc.sim.n, 200);
  }
}

TEST(RocGrid, ShrinksHalfWidthNearZero) {
  const auto g = roc_grid(0.5, 0.1, 5);
  EXPECT_GT(g.back(), 0.4);
  const auto small = roc_grid(0.05, 0.1, 5);
  EXPECT_GT(small.back(), 0.0);
  EXPECT_LT(small.front(), 0.1);
}

TEST(RunCampaign, IsDeterministicForFixedSeed) {
  auto cfg = tiny_config();
  cfg.trials = 1;
  EXPECT_EQ(tables(run_campaign(cfg)), tables(run_campaign(cfg)));
}

TEST(RunCampaign, ProducesOneCellPerScenarioAndEstimator) {
  auto cfg = tiny_config();
  Scenario b = cfg.scenarios[0];
  b.name = "tiny2";
  b.sim.contamination_r = 0.1;
  cfg.scenarios.push_back(b);
  const auto r = run_campaign(cfg);
  ASSERT_EQ(r.cells.size(), 6u);
  EXPECT_EQ(r.trials.size(), 12u);
  EXPECT_EQ(r.cells[0].scenario, "tiny");
  EXPECT_EQ(r.cells[3].scenario, "tiny2");
  EXPECT_EQ(r.cells[1].estimator, Estimator::pearson);
  for (const auto& c : r.cells) {
    EXPECT_EQ(c.ok_trials + c.failed_trials, 2);
    EXPECT_GE(c.auc.mean, 0.0);
    EXPECT_LE(c.auc.mean, 1.0);
  }
  // Estimators in one trial share the dataset.
  EXPECT_EQ(r.trials[0].data_seed, r.trials[1].data_seed);
  EXPECT_NE(r.trials[0].data_seed, r.trials[3].data_seed);
}

TEST(RunCampaign, SharedCenterUsesReferenceLambda) {
  auto cfg = tiny_config();
  cfg.center_source = CenterSource::shared;
  cfg.reference_estimator = Estimator::skeptic_tau;
  const auto r = run_campaign(cfg);
  for (const auto& t : r.trials) {
    const auto& ref = *std::find_if(r.trials.begin(), r.trials.end(), [&](const TrialRecord& x) {
      return x.trial == t.trial && x.estimator == Estimator::skeptic_tau;
    });
    EXPECT_EQ(t.lambda_center, ref.lambda_center);
  }
}

TEST(CampaignConfig, JsonRoundTripAndValidation) {
  const auto cfg = tiny_config();
  const auto back = campaign_config_from_json(to_json(cfg));
  EXPECT_EQ(to_json(back).dump(), to_json(cfg).dump());
  auto bad = cfg;
  bad.trials = 0;
  EXPECT_THROW(validate(bad), Error);
  bad = cfg;
  bad.estimators.clear();
  EXPECT_THROW(validate(bad), Error);
}

TEST(TrialSeed, DiffersAcrossScenariosAndTrials) {
  EXPECT_NE(trial_seed(1, 0, 0), trial_seed(1, 1, 0));
  EXPECT_NE(trial_seed(1, 0, 0), trial_seed(1, 0, 1));
  EXPECT_EQ(trial_seed(1, 2, 3), trial_seed(1, 2, 3));
}

}  // namespace
}  // namespace skewgm
