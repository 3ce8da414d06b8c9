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

#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "skewgm/evaluate.hpp"

namespace skewgm {
namespace {

const EdgeSet kTruth(4, {{0, 1}, {2, 3}});

TEST(Confusion, ReferenceCases) {
  const auto c = confusion(EdgeSet(4, {{0, 1}, {0, 2}}), kTruth);
  EXPECT_EQ(c.fp, 1);
  EXPECT_EQ(c.fn, 1);
  EXPECT_EQ(c.tp, 1);
  EXPECT_EQ(c.tn, 3);

  const auto same = confusion(kTruth, kTruth);
  EXPECT_EQ(same.tp, 2);
  EXPECT_EQ(same.tn, 4);
  EXPECT_EQ(same.fp + same.fn, 0);

  const auto none = confusion(EdgeSet(4), kTruth);
  EXPECT_EQ(none.fn, 2);
  EXPECT_EQ(none.tn, 4);
}

TEST(Confusion, CountsSumToPairCount) {
  std::mt19937_64 rng(1);
  for (int rep = 0; rep < 100; ++rep) {
    std::vector<std::pair<Index, Index>> a, b;
    for (Index i = 0; i < 9; ++i)
      for (Index j = i + 1; j < 9; ++j) {
        if (rng() % 3 == 0) a.emplace_back(i, j);
        if (rng() % 4 == 0) b.emplace_back(i, j);
      }
    const auto c = confusion(EdgeSet(9, a), EdgeSet(9, b));
    EXPECT_EQ(c.fp + c.fn + c.tp + c.tn, 36);
  }
}

TEST(Confusion, RejectsDimensionMismatch) {
  EXPECT_THROW(confusion(EdgeSet(3), kTruth), Error);
}

TEST(Rates, ReferenceCases) {
  const auto r = rates(1, 1, kTruth);
  EXPECT_EQ(r.fnr, 0.5);
  EXPECT_EQ(r.fpr, 0.25);
  EXPECT_EQ(rates(0, 0, kTruth).fnr, 0.0);
  EXPECT_EQ(rates(0, 2, kTruth).fnr, 1.0);
  EXPECT_EQ(rates(0, 2, kTruth).fpr, 0.0);
  EXPECT_THROW(rates(0, 0, EdgeSet(4)), Error);
}

TEST(AucFromPoints, EndpointAugmentedTrapezoid) {
  std::vector<RocPoint> pts{{0.1, 0.0, 0.0, 1.0}};
  EXPECT_EQ(auc_from_points(pts), 1.0);
  pts = {{0.1, 0.5, 0.5, 0.5}};
  EXPECT_DOUBLE_EQ(auc_from_points(pts), 0.5);
  pts = {{0.1, 0.2, 0.4, 0.6}, {0.2, 0.0, 0.8, 0.2}};
  // (0,0)-(0,.2)-(.2,.6)-(1,1): 0 + 0.2*0.4 + 0.8*0.8.
  EXPECT_NEAR(auc_from_points(pts), 0.08 + 0.64, 1e-15);
}

TEST(RocCurve, TruthReturningEstimatorHasUnitArea) {
  const std::vector<double> grid{0.3, 0.2, 0.1};
  const auto roc = roc_curve(grid, [](double) { return kTruth; }, kTruth);
  EXPECT_EQ(roc.auc, 1.0);
  ASSERT_EQ(roc.points.size(), 3u);
  for (const auto& p : roc.points) {
    EXPECT_EQ(p.fnr + p.tpr, 1.0);
  }
}

TEST(RocCurve, CoinFlipEstimatorIsNearChance) {
  const Index p = 60;
  std::mt19937_64 truth_rng(2);
  std::vector<std::pair<Index, Index>> t;
  for (Index i = 0; i < p; ++i)
    for (Index j = i + 1; j < p; ++j)
      if (truth_rng() % 20 == 0) t.emplace_back(i, j);
  const EdgeSet truth(p, t);
  std::vector<double> grid;
  for (int k = 0; k < 9; ++k) grid.push_back(0.9 - 0.1 * k);
  std::mt19937_64 rng(3);
  const auto roc = roc_curve(
      grid,
      [&](double lam) {
        std::vector<std::pair<Index, Index>> e;
        for (Index i = 0; i < p; ++i)
          for (Index j = i + 1; j < p; ++j)
            if (std::uniform_real_distribution<double>()(rng) > lam) e.emplace_back(i, j);
        return EdgeSet(p, e);
      },
      truth);
  EXPECT_NEAR(roc.auc, 0.5, 0.05);
}

TEST(AucFromPoints, InvariantToOrderAndBounded) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u;
  for (int rep = 0; rep < 100; ++rep) {
    std::vector<RocPoint> pts(8);
    for (auto& p : pts) {
      p.fpr = u(rng);
      p.tpr = u(rng);
      p.fnr = 1 - p.tpr;
    }
    const double a = auc_from_points(pts);
    std::shuffle(pts.begin(), pts.end(), rng);
    EXPECT_DOUBLE_EQ(auc_from_points(pts), a);
    EXPECT_GE(a, 0.0);
    EXPECT_LE(a, 1.0);
  }
}

TEST(CompareEdgesets, ReferenceCases) {
  const auto same = compare_edgesets(kTruth, kTruth);
  EXPECT_EQ(same.both, 2);
  EXPECT_EQ(same.only_a + same.only_b, 0);
  const auto disjoint = compare_edgesets(kTruth, EdgeSet(4, {{0, 2}}));
  EXPECT_EQ(disjoint.only_a, 2);
  EXPECT_EQ(disjoint.only_b, 1);
  EXPECT_EQ(disjoint.both, 0);
}

TEST(MeanSe, SampleSpreadAndStandardError) {
  const std::vector<double> v{1, 2, 3, 4};
  const auto m = mean_se(v);
  EXPECT_EQ(m.mean, 2.5);
  EXPECT_NEAR(m.sd, std::sqrt(5.0 / 3.0), 1e-15);
  EXPECT_NEAR(m.se, m.sd / 2, 1e-15);
  EXPECT_EQ(m.count, 4);
  EXPECT_EQ(mean_se(std::vector<double>{7}).sd, 0.0);
}

TEST(WriteRocCsv, HeaderAndRows) {
  RocResult roc;
  roc.points = {{0.5, 0.25, 0.5, 0.5}};
  std::ostringstream out;
  write_roc_csv(out, "s1", "skeptic_tau", roc);
  EXPECT_EQ(out.str(), "scenario,estimator,lambda,fpr,fnr,tpr\ns1,skeptic_tau,0.5,0.25,0.5,0.5\n");
}

}  // namespace
}  // namespace skewgm
