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

// Price-panel ingestion and marginal normality testing.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "skewgm/types.hpp"

namespace skewgm {

struct DroppedTicker {
  std::string ticker;
  std::string reason;
};

struct ReturnsPanel {
  /// Dates of the return observations (the first price date is dropped).
  std::vector<std::string> dates;
  std::vector<std::string> tickers;
  /// (dates.size()) x (tickers.size()); entry (t, k) = ln(P_{t+1} / P_t).
  Matrix log_returns;
  std::vector<DroppedTicker> dropped_tickers;

  /// Log returns as a validated DataMatrix labelled by ticker. Throws when
  /// fewer than two tickers or three returns survive.
  DataMatrix data() const;
};

struct IngestConfig {
  char delimiter = ',';
  /// Header of the first column; matched case-insensitively.
  std::string date_column = "date";
  /// Cells spelled like these (case-insensitive) count as missing.
  std::vector<std::string> missing_tokens = {"", "na", "nan", "null"};
};

/// Reads a header row `date,<ticker>,...` followed by one row per date.
/// Dates must be ISO-8601 (YYYY-MM-DD, optionally followed by a time) and
/// strictly increasing. Tickers with a missing or non-positive price are
/// dropped with a reason naming the first offending date.
ReturnsPanel ingest_prices(std::istream& in, const IngestConfig& config = {});
ReturnsPanel ingest_prices(const std::filesystem::path& csv_path, const IngestConfig& config = {});

/// Writes `date,<ticker>...` rows of full-precision log returns.
void write_returns_csv(std::ostream& out, const ReturnsPanel& panel);

inline constexpr int kMinNormalitySample = 20;

struct SeriesNormality {
  std::string ticker;
  Index n = 0;
  bool skipped = false;
  std::string skip_reason;
  double lilliefors_stat = 0.0;
  double lilliefors_p = 1.0;
  double jarque_bera_stat = 0.0;
  double jarque_bera_p = 1.0;
};

struct NormalityConfig {
  std::vector<double> levels = {0.01, 0.05};
  /// Null replicates for the Lilliefors p-value.
  int replicates = 10000;
  std::uint64_t seed = 0;
};

struct NormalityReport {
  std::vector<double> levels;
  std::vector<SeriesNormality> series;
  /// Counts per level, aligned with `levels`.
  std::vector<int> lilliefors_rejections;
  std::vector<int> jarque_bera_rejections;
  int tested = 0;
};

/// Kolmogorov-Smirnov distance between the sample and a normal with the
/// sample mean and standard deviation (n - 1 denominator).
double lilliefors_statistic(std::span<const double> x);

/// n/6 (S^2 + (K - 3)^2 / 4) with biased moment estimates.
double jarque_bera_statistic(std::span<const double> x);

/// Chi-square(2) upper tail, exp(-jb / 2).
double jarque_bera_pvalue(double jb);

/// Sorted Lilliefors null statistics for samples of size n. The sample
/// for replicate k is drawn from a generator seeded with
/// mix_seed(mix_seed(seed, n), k), so results do not depend on threading.
std::vector<double> lilliefors_null(Index n, int replicates, std::uint64_t seed);

/// (1 + #{null >= stat}) / (1 + replicates).
double monte_carlo_pvalue(std::span<const double> sorted_null, double stat);

NormalityReport normality_tests(std::span<const std::string> names, const Matrix& series,
                                const NormalityConfig& config = {});
NormalityReport normality_tests(const ReturnsPanel& panel, const NormalityConfig& config = {});

/// One row per series: ticker,n,skipped,lilliefors_stat,lilliefors_p,jb_stat,jb_p
void write_normality_csv(std::ostream& out, const NormalityReport& report);

}  // namespace skewgm
