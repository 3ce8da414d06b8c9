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

#include "skewgm/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

namespace skewgm {
namespace {

void require_same_p(const EdgeSet& a, const EdgeSet& b, const char* who) {
  if (a.p() != b.p()) {
    throw Error(std::string(who) + ": edge sets have different node counts (" +
                std::to_string(a.p()) + " vs " + std::to_string(b.p()) + ")");
  }
}

long long intersection_size(const EdgeSet& a, const EdgeSet& b) {
  long long both = 0;
  auto ia = a.edges().begin();
  auto ib = b.edges().begin();
  while (ia != a.edges().end() && ib != b.edges().end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++both;
      ++ia;
      ++ib;
    }
  }
  return both;
}

}  // namespace

Confusion confusion(const EdgeSet& estimated, const EdgeSet& truth) {
  require_same_p(estimated, truth, "confusion");
  Confusion c;
  c.tp = intersection_size(estimated, truth);
  c.fp = static_cast<long long>(estimated.size()) - c.tp;
  c.fn = static_cast<long long>(truth.size()) - c.tp;
  c.tn = truth.pair_count() - static_cast<long long>(truth.size()) - c.fp;
  return c;
}

Rates rates(long long fp, long long fn, const EdgeSet& truth) {
  const auto positives = static_cast<long long>(truth.size());
  if (positives == 0) throw Error("rates: truth has no edges; FNR undefined");
  const long long negatives = truth.pair_count() - positives;
  Rates r;
  r.fnr = static_cast<double>(fn) / static_cast<double>(positives);
  r.fpr = negatives > 0 ? static_cast<double>(fp) / static_cast<double>(negatives) : 0.0;
  return r;
}

double auc_from_points(std::span<const RocPoint> points) {
  std::vector<std::pair<double, double>> pts;
  pts.reserve(points.size() + 2);
  for (const auto& pt : points) pts.emplace_back(pt.fpr, pt.tpr);
  std::sort(pts.begin(), pts.end());
  std::vector<std::pair<double, double>> merged;
  merged.emplace_back(0.0, 0.0);
  for (std::size_t k = 0; k < pts.size();) {
    std::size_t stop = k;
    double sum = 0.0;
    while (stop < pts.size() && pts[stop].first == pts[k].first) sum += pts[stop++].second;
    merged.emplace_back(pts[k].first, sum / static_cast<double>(stop - k));
    k = stop;
  }
  merged.emplace_back(1.0, 1.0);
  double area = 0.0;
  for (std::size_t k = 1; k < merged.size(); ++k) {
    const double width = merged[k].first - merged[k - 1].first;
    area += 0.5 * width * (merged[k].second + merged[k - 1].second);
  }
  return std::clamp(area, 0.0, 1.0);
}

RocResult roc_from_path(std::span<const double> grid, std::span<const EdgeSet> path,
                        const EdgeSet& truth) {
  if (grid.empty()) throw Error("roc: empty lambda grid");
  if (grid.size() != path.size()) throw Error("roc: path length does not match grid");
  RocResult roc;
  roc.points.reserve(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const Confusion c = confusion(path[k], truth);
    const Rates r = rates(c.fp, c.fn, truth);
    roc.points.push_back({grid[k], r.fpr, r.fnr, 1.0 - r.fnr});
  }
  roc.auc = auc_from_points(roc.points);
  return roc;
}

RocResult roc_curve(std::span<const double> grid,
                    const std::function<EdgeSet(double)>& estimator, const EdgeSet& truth) {
  if (grid.empty()) throw Error("roc: empty lambda grid");
  for (std::size_t k = 1; k < grid.size(); ++k) {
    if (grid[k] > grid[k - 1]) throw Error("roc: lambda grid must be descending");
  }
  std::vector<EdgeSet> path;
  path.reserve(grid.size());
  for (double lambda : grid) path.push_back(estimator(lambda));
  return roc_from_path(grid, path, truth);
}

EdgeComparison compare_edgesets(const EdgeSet& a, const EdgeSet& b) {
  require_same_p(a, b, "compare_edgesets");
  EdgeComparison c;
  c.both = intersection_size(a, b);
  c.only_a = static_cast<long long>(a.size()) - c.both;
  c.only_b = static_cast<long long>(b.size()) - c.both;
  return c;
}

MeanSe mean_se(std::span<const double> values) {
  MeanSe m;
  m.count = static_cast<int>(values.size());
  if (values.empty()) return m;
  double sum = 0.0;
  for (double v : values) sum += v;
  m.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - m.mean) * (v - m.mean);
    m.sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
    m.se = m.sd / std::sqrt(static_cast<double>(values.size()));
  }
  return m;
}

void write_roc_csv(std::ostream& out, const std::string& scenario, const std::string& estimator,
                   const RocResult& roc, bool header) {
  if (header) out << "scenario,estimator,lambda,fpr,fnr,tpr\n";
  out << std::setprecision(17);
  for (const auto& pt : roc.points) {
    out << scenario << ',' << estimator << ',' << pt.lambda << ',' << pt.fpr << ',' << pt.fnr
        << ',' << pt.tpr << '\n';
  }
}

}  // namespace skewgm
