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

#include "skewgm/rankcorr.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <numeric>

#include <boost/math/distributions/normal.hpp>

#include "skewgm/parallel.hpp"

namespace skewgm {
namespace {

using Count = std::int64_t;

// Dense 0-based ranks: equal values share a rank, gaps are closed.
std::vector<std::int32_t> dense_ranks(std::span<const double> x) {
  const std::size_t n = x.size();
  std::vector<std::int32_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::int32_t a, std::int32_t b) { return x[a] < x[b]; });
  std::vector<std::int32_t> rank(n);
  std::int32_t r = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0 && x[order[k]] != x[order[k - 1]]) ++r;
    rank[order[k]] = r;
  }
  return rank;
}

// Sum over tie groups of t(t-1)/2 for a sorted sequence.
template <typename T>
Count tied_pairs_sorted(std::span<const T> sorted) {
  Count total = 0;
  Count run = 1;
  for (std::size_t k = 1; k < sorted.size(); ++k) {
    if (sorted[k] == sorted[k - 1]) {
      ++run;
    } else {
      total += run * (run - 1) / 2;
      run = 1;
    }
  }
  return total + run * (run - 1) / 2;
}

Count tied_pairs(std::span<const std::int32_t> rank) {
  std::vector<std::int32_t> sorted(rank.begin(), rank.end());
  std::sort(sorted.begin(), sorted.end());
  return tied_pairs_sorted<std::int32_t>(sorted);
}

// Bottom-up merge sort of `y` counting pairs (a < b) with y[a] > y[b].
Count count_inversions(std::vector<std::int32_t>& y) {
  const std::size_t n = y.size();
  std::vector<std::int32_t> buffer(n);
  Count swaps = 0;
  for (std::size_t width = 1; width < n; width *= 2) {
    for (std::size_t lo = 0; lo < n; lo += 2 * width) {
      const std::size_t mid = std::min(lo + width, n);
      const std::size_t hi = std::min(lo + 2 * width, n);
      std::size_t a = lo, b = mid, out = lo;
      while (a < mid && b < hi) {
        if (y[b] < y[a]) {
          swaps += static_cast<Count>(mid - a);
          buffer[out++] = y[b++];
        } else {
          buffer[out++] = y[a++];
        }
      }
      while (a < mid) buffer[out++] = y[a++];
      while (b < hi) buffer[out++] = y[b++];
    }
    y.swap(buffer);
  }
  return swaps;
}

// tau-b from dense ranks with precomputed marginal tie counts (Knight 1966).
double tau_b_from_ranks(std::span<const std::int32_t> rx, std::span<const std::int32_t> ry,
                        Count ties_x, Count ties_y) {
  const std::size_t n = rx.size();
  const Count n0 = static_cast<Count>(n) * static_cast<Count>(n - 1) / 2;
  if (ties_x == n0 || ties_y == n0) return std::numeric_limits<double>::quiet_NaN();

  std::vector<std::int64_t> keys(n);
  for (std::size_t k = 0; k < n; ++k) {
    keys[k] = static_cast<std::int64_t>(rx[k]) * static_cast<std::int64_t>(n) + ry[k];
  }
  std::sort(keys.begin(), keys.end());
  const Count joint_ties = tied_pairs_sorted<std::int64_t>(keys);

  std::vector<std::int32_t> y(n);
  for (std::size_t k = 0; k < n; ++k) y[k] = static_cast<std::int32_t>(keys[k] % static_cast<std::int64_t>(n));
  const Count swaps = count_inversions(y);

  const double numerator =
      static_cast<double>(n0 - ties_x - ties_y + joint_ties - 2 * swaps);
  const double denominator =
      std::sqrt(static_cast<double>(n0 - ties_x)) * std::sqrt(static_cast<double>(n0 - ties_y));
  return std::clamp(numerator / denominator, -1.0, 1.0);
}

void require_nondegenerate(const DataMatrix& data, std::span<const Count> ties) {
  const Count n = data.n();
  const Count n0 = n * (n - 1) / 2;
  for (Index j = 0; j < data.p(); ++j) {
    if (ties[j] == n0) throw DegenerateColumnError(j, data.labels()[j]);
  }
}

}  // namespace

std::vector<double> average_ranks(std::span<const double> x) {
  const std::size_t n = x.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> ranks(n);
  for (std::size_t start = 0; start < n;) {
    std::size_t stop = start + 1;
    while (stop < n && x[order[stop]] == x[order[start]]) ++stop;
    // positions start..stop-1 are 0-based; mean 1-based rank of the run
    const double mean_rank = 0.5 * static_cast<double>(start + 1 + stop);
    for (std::size_t k = start; k < stop; ++k) ranks[order[k]] = mean_rank;
    start = stop;
  }
  return ranks;
}

RankMatrix normalized_ranks(const DataMatrix& data) {
  const Index n = data.n();
  RankMatrix out{Matrix(n, data.p())};
  const double scale = 1.0 / static_cast<double>(n + 1);
  for (Index j = 0; j < data.p(); ++j) {
    const auto r = average_ranks(data.column(j));
    for (Index i = 0; i < n; ++i) out.ranks(i, j) = r[static_cast<std::size_t>(i)] * scale;
  }
  return out;
}

double kendall_tau_b(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw Error("kendall_tau_b: length mismatch");
  if (x.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  const auto rx = dense_ranks(x);
  const auto ry = dense_ranks(y);
  return tau_b_from_ranks(rx, ry, tied_pairs(rx), tied_pairs(ry));
}

Matrix kendall_tau_matrix(const DataMatrix& data) {
  const Index p = data.p();
  std::vector<std::vector<std::int32_t>> ranks(static_cast<std::size_t>(p));
  std::vector<Count> ties(static_cast<std::size_t>(p));
  for (Index j = 0; j < p; ++j) {
    ranks[j] = dense_ranks(data.column(j));
    ties[j] = tied_pairs(ranks[j]);
  }
  require_nondegenerate(data, ties);

  Matrix tau = Matrix::Identity(p, p);
  const auto pairs = static_cast<std::size_t>(p * (p - 1) / 2);
  std::vector<std::pair<Index, Index>> index;
  index.reserve(pairs);
  for (Index i = 0; i < p; ++i) {
    for (Index j = i + 1; j < p; ++j) index.emplace_back(i, j);
  }
  parallel_for(pairs, [&](std::size_t k) {
    const auto [i, j] = index[k];
    const double t = tau_b_from_ranks(ranks[i], ranks[j], ties[i], ties[j]);
    tau(i, j) = t;
    tau(j, i) = t;
  });
  return tau;
}

Matrix spearman_rho_matrix(const DataMatrix& data) {
  const Index n = data.n();
  const Index p = data.p();
  Matrix centered(n, p);
  for (Index j = 0; j < p; ++j) {
    const auto r = average_ranks(data.column(j));
    const double mean = 0.5 * static_cast<double>(n + 1);
    double ss = 0.0;
    for (Index i = 0; i < n; ++i) {
      const double d = r[static_cast<std::size_t>(i)] - mean;
      centered(i, j) = d;
      ss += d * d;
    }
    if (ss <= 0.0) throw DegenerateColumnError(j, data.labels()[j]);
    centered.col(j) /= std::sqrt(ss);
  }
  Matrix rho = centered.transpose() * centered;
  rho = rho.cwiseMax(-1.0).cwiseMin(1.0);
  rho.diagonal().setOnes();
  return 0.5 * (rho + rho.transpose());
}

CorrelationEstimate skeptic_from_tau(const Matrix& tau) {
  Matrix s = (tau.array() * (std::numbers::pi / 2.0)).sin().matrix();
  s.diagonal().setOnes();
  return {std::move(s), Statistic::kendall, true, false, false};
}

CorrelationEstimate skeptic_from_rho(const Matrix& rho) {
  Matrix s = 2.0 * (rho.array() * (std::numbers::pi / 6.0)).sin().matrix();
  s.diagonal().setOnes();
  return {std::move(s), Statistic::spearman, true, false, false};
}

DataMatrix normal_scores(const DataMatrix& data) {
  const boost::math::normal standard;
  Matrix ranks = normalized_ranks(data).ranks;
  for (Index j = 0; j < ranks.cols(); ++j) {
    for (Index i = 0; i < ranks.rows(); ++i) {
      ranks(i, j) = boost::math::quantile(standard, ranks(i, j));
    }
  }
  return data.with_values(std::move(ranks));
}

}  // namespace skewgm
