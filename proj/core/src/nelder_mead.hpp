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

#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

namespace skewgm::detail {

struct SimplexResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Nelder-Mead minimization with the standard coefficients
// (reflection 1, expansion 2, contraction 1/2, shrink 1/2).
// Stops when the spread of objective values across the simplex drops
// below `ftol`.
template <typename Objective>
SimplexResult nelder_mead(Objective&& f, const Eigen::VectorXd& start,
                          const Eigen::VectorXd& step, double ftol, int max_iter) {
  const Eigen::Index d = start.size();
  std::vector<Eigen::VectorXd> pts(static_cast<std::size_t>(d + 1), start);
  std::vector<double> vals(static_cast<std::size_t>(d + 1));
  for (Eigen::Index k = 0; k < d; ++k) pts[static_cast<std::size_t>(k + 1)](k) += step(k);
  for (std::size_t k = 0; k < pts.size(); ++k) vals[k] = f(pts[k]);

  std::vector<std::size_t> order(pts.size());
  SimplexResult result;
  for (int it = 0; it < max_iter; ++it) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[order.size() - 2];
    result.iterations = it;
    if (std::abs(vals[worst] - vals[best]) < ftol) {
      result.converged = true;
      break;
    }

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(d);
    for (std::size_t k = 0; k + 1 < order.size(); ++k) centroid += pts[order[k]];
    centroid /= static_cast<double>(d);

    const Eigen::VectorXd reflected = centroid + (centroid - pts[worst]);
    const double fr = f(reflected);
    if (fr < vals[best]) {
      const Eigen::VectorXd expanded = centroid + 2.0 * (centroid - pts[worst]);
      const double fe = f(expanded);
      if (fe < fr) {
        pts[worst] = expanded;
        vals[worst] = fe;
      } else {
        pts[worst] = reflected;
        vals[worst] = fr;
      }
      continue;
    }
    if (fr < vals[second]) {
      pts[worst] = reflected;
      vals[worst] = fr;
      continue;
    }
    const bool outside = fr < vals[worst];
    const Eigen::VectorXd contracted =
        outside ? Eigen::VectorXd(centroid + 0.5 * (reflected - centroid))
                : Eigen::VectorXd(centroid + 0.5 * (pts[worst] - centroid));
    const double fc = f(contracted);
    if (fc < (outside ? fr : vals[worst])) {
      pts[worst] = contracted;
      vals[worst] = fc;
      continue;
    }
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (k == best) continue;
      pts[k] = pts[best] + 0.5 * (pts[k] - pts[best]);
      vals[k] = f(pts[k]);
    }
  }
  const auto best = static_cast<std::size_t>(
      std::min_element(vals.begin(), vals.end()) - vals.begin());
  result.x = pts[best];
  result.value = vals[best];
  return result;
}

}  // namespace skewgm::detail
