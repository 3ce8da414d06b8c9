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

#include "skewgm/returns.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>

#include "skewgm/parallel.hpp"

namespace skewgm {
namespace {

std::string trim(std::string_view s) {
  auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return {};
  auto end = s.find_last_not_of(" \t\r\n");
  s = s.substr(begin, end - begin + 1);
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
  return std::string(s);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::vector<std::string> split(const std::string& line, char delim) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(delim, start);
    out.push_back(trim(std::string_view(line).substr(start, pos - start)));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

bool iso_date(const std::string& s) {
  if (s.size() < 10) return false;
  for (int k : {0, 1, 2, 3, 5, 6, 8, 9}) {
    if (!std::isdigit(static_cast<unsigned char>(s[static_cast<std::size_t>(k)]))) return false;
  }
  if (s[4] != '-' || s[7] != '-') return false;
  if (s.size() != 10 && s[10] != 'T' && s[10] != ' ') return false;
  const int y = std::stoi(s.substr(0, 4));
  const unsigned m = static_cast<unsigned>(std::stoi(s.substr(5, 2)));
  const unsigned d = static_cast<unsigned>(std::stoi(s.substr(8, 2)));
  return std::chrono::year_month_day{std::chrono::year{y}, std::chrono::month{m}, std::chrono::day{d}}.ok();
}

std::string line_context(std::size_t line_no) { return "line " + std::to_string(line_no); }

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

struct Moments {
  double mean = 0.0;
  double m2 = 0.0;
  double m3 = 0.0;
  double m4 = 0.0;
};

Moments central_moments(std::span<const double> x) {
  Moments m;
  const double n = static_cast<double>(x.size());
  for (double v : x) m.mean += v;
  m.mean /= n;
  for (double v : x) {
    const double d = v - m.mean;
    const double d2 = d * d;
    m.m2 += d2;
    m.m3 += d2 * d;
    m.m4 += d2 * d2;
  }
  m.m2 /= n;
  m.m3 /= n;
  m.m4 /= n;
  return m;
}

}  // namespace

DataMatrix ReturnsPanel::data() const { return DataMatrix(log_returns, tickers); }

ReturnsPanel ingest_prices(std::istream& in, const IngestConfig& config) {
  std::string line;
  std::size_t line_no = 0;
  // Skip leading blank lines and a UTF-8 byte-order mark.
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (!trim(line).empty()) break;
  }
  if (trim(line).empty()) throw Error("ingest_prices: empty input");

  const std::vector<std::string> header = split(line, config.delimiter);
  if (header.size() < 2) throw Error("ingest_prices: header needs a date column and at least one ticker");
  if (lower(header[0]) != lower(config.date_column)) {
    throw Error("ingest_prices: first column must be '" + config.date_column + "', got '" +
                header[0] + "'");
  }
  const std::size_t k = header.size() - 1;
  {
    std::vector<std::string> names(header.begin() + 1, header.end());
    std::sort(names.begin(), names.end());
    if (auto dup = std::adjacent_find(names.begin(), names.end()); dup != names.end()) {
      throw Error("ingest_prices: duplicate ticker '" + *dup + "'");
    }
    if (!names.empty() && names.front().empty()) throw Error("ingest_prices: empty ticker name");
  }

  std::vector<std::string> missing;
  for (const auto& t : config.missing_tokens) missing.push_back(lower(t));

  std::vector<std::string> dates;
  std::vector<std::vector<double>> prices(k);
  // First bad date per ticker, if any.
  std::vector<std::optional<std::string>> bad(k);
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split(line, config.delimiter);
    if (cells.size() != header.size()) {
      throw Error("ingest_prices: " + line_context(line_no) + " has " +
                  std::to_string(cells.size()) + " fields, expected " +
                  std::to_string(header.size()));
    }
    const std::string& date = cells[0];
    if (!iso_date(date)) {
      throw Error("ingest_prices: " + line_context(line_no) + ": '" + date +
                  "' is not an ISO-8601 date");
    }
    if (!dates.empty() && !(dates.back() < date)) {
      throw Error("ingest_prices: dates not strictly increasing at " + line_context(line_no) +
                  " ('" + dates.back() + "' then '" + date + "')");
    }
    dates.push_back(date);
    for (std::size_t c = 0; c < k; ++c) {
      const std::string& cell = cells[c + 1];
      const bool is_missing =
          std::find(missing.begin(), missing.end(), lower(cell)) != missing.end();
      double value = std::numeric_limits<double>::quiet_NaN();
      if (!is_missing) {
        const char* first = cell.data();
        const char* last = first + cell.size();
        if (first != last && *first == '+') ++first;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last) {
          throw Error("ingest_prices: " + line_context(line_no) + ": cannot parse '" + cell +
                      "' for ticker '" + header[c + 1] + "'");
        }
      }
      prices[c].push_back(value);
      if (bad[c]) continue;
      if (is_missing || !std::isfinite(value)) {
        bad[c] = "missing value at " + date;
      } else if (value <= 0.0) {
        bad[c] = "non-positive price at " + date;
      }
    }
  }
  if (dates.size() < 2) throw Error("ingest_prices: need at least two dated rows");

  ReturnsPanel panel;
  panel.dates.assign(dates.begin() + 1, dates.end());
  std::vector<std::size_t> kept;
  for (std::size_t c = 0; c < k; ++c) {
    if (bad[c]) {
      panel.dropped_tickers.push_back({header[c + 1], *bad[c]});
    } else {
      kept.push_back(c);
      panel.tickers.push_back(header[c + 1]);
    }
  }
  if (kept.empty()) throw Error("ingest_prices: no ticker survived cleaning");

  const auto rows = static_cast<Index>(dates.size() - 1);
  panel.log_returns.resize(rows, static_cast<Index>(kept.size()));
  for (std::size_t col = 0; col < kept.size(); ++col) {
    const auto& p = prices[kept[col]];
    for (Index t = 0; t < rows; ++t) {
      const auto u = static_cast<std::size_t>(t);
      panel.log_returns(t, static_cast<Index>(col)) = std::log(p[u + 1] / p[u]);
    }
  }
  return panel;
}

ReturnsPanel ingest_prices(const std::filesystem::path& csv_path, const IngestConfig& config) {
  std::ifstream in(csv_path);
  if (!in) throw Error("ingest_prices: cannot open '" + csv_path.string() + "'");
  return ingest_prices(in, config);
}

void write_returns_csv(std::ostream& out, const ReturnsPanel& panel) {
  const auto old_precision = out.precision(17);
  out << "date";
  for (const auto& t : panel.tickers) out << ',' << t;
  out << '\n';
  for (Index t = 0; t < panel.log_returns.rows(); ++t) {
    out << panel.dates[static_cast<std::size_t>(t)];
    for (Index c = 0; c < panel.log_returns.cols(); ++c) out << ',' << panel.log_returns(t, c);
    out << '\n';
  }
  out.precision(old_precision);
}

double lilliefors_statistic(std::span<const double> x) {
  const std::size_t n = x.size();
  if (n < 2) throw Error("lilliefors_statistic: need at least two observations");
  std::vector<double> z(x.begin(), x.end());
  double mean = 0.0;
  for (double v : z) mean += v;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double v : z) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  if (!(sd > 0.0)) throw Error("lilliefors_statistic: constant series");
  std::sort(z.begin(), z.end());
  double d = 0.0;
  const double nn = static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double f = normal_cdf((z[i] - mean) / sd);
    d = std::max({d, static_cast<double>(i + 1) / nn - f, f - static_cast<double>(i) / nn});
  }
  return d;
}

double jarque_bera_statistic(std::span<const double> x) {
  if (x.size() < 2) throw Error("jarque_bera_statistic: need at least two observations");
  const Moments m = central_moments(x);
  if (!(m.m2 > 0.0)) throw Error("jarque_bera_statistic: constant series");
  const double s = m.m3 / std::pow(m.m2, 1.5);
  const double k = m.m4 / (m.m2 * m.m2);
  return static_cast<double>(x.size()) / 6.0 * (s * s + 0.25 * (k - 3.0) * (k - 3.0));
}

double jarque_bera_pvalue(double jb) { return std::exp(-0.5 * std::max(jb, 0.0)); }

std::vector<double> lilliefors_null(Index n, int replicates, std::uint64_t seed) {
  if (n < 2) throw Error("lilliefors_null: need n >= 2");
  if (replicates < 1) throw Error("lilliefors_null: replicates must be positive");
  const std::uint64_t base = mix_seed(seed, static_cast<std::uint64_t>(n));
  std::vector<double> stats(static_cast<std::size_t>(replicates));
  parallel_for(stats.size(), [&](std::size_t r) {
    std::mt19937_64 rng(mix_seed(base, r));
    std::normal_distribution<double> normal;
    std::vector<double> x(static_cast<std::size_t>(n));
    for (double& v : x) v = normal(rng);
    stats[r] = lilliefors_statistic(x);
  });
  std::sort(stats.begin(), stats.end());
  return stats;
}

double monte_carlo_pvalue(std::span<const double> sorted_null, double stat) {
  const auto at_least =
      sorted_null.end() - std::lower_bound(sorted_null.begin(), sorted_null.end(), stat);
  return (1.0 + static_cast<double>(at_least)) / (1.0 + static_cast<double>(sorted_null.size()));
}

NormalityReport normality_tests(std::span<const std::string> names, const Matrix& series,
                                const NormalityConfig& config) {
  if (static_cast<Index>(names.size()) != series.cols()) {
    throw Error("normality_tests: name count does not match series count");
  }
  for (double level : config.levels) {
    if (!(level > 0.0 && level < 1.0)) throw Error("normality_tests: levels must lie in (0,1)");
  }
  if (config.replicates < 1) throw Error("normality_tests: replicates must be positive");

  NormalityReport report;
  report.levels = config.levels;
  report.series.resize(names.size());
  const Index n = series.rows();
  std::vector<double> null_stats;
  if (n >= kMinNormalitySample) null_stats = lilliefors_null(n, config.replicates, config.seed);

  for (std::size_t c = 0; c < names.size(); ++c) {
    SeriesNormality& s = report.series[c];
    s.ticker = names[c];
    s.n = n;
    if (n < kMinNormalitySample) {
      s.skipped = true;
      s.skip_reason = "n = " + std::to_string(n) + " below " + std::to_string(kMinNormalitySample);
      continue;
    }
    const auto col = static_cast<Index>(c);
    const std::span<const double> x(series.col(col).data(), static_cast<std::size_t>(n));
    if (series.col(col).maxCoeff() == series.col(col).minCoeff()) {
      s.skipped = true;
      s.skip_reason = "constant series";
      continue;
    }
    s.lilliefors_stat = lilliefors_statistic(x);
    s.lilliefors_p = monte_carlo_pvalue(null_stats, s.lilliefors_stat);
    s.jarque_bera_stat = jarque_bera_statistic(x);
    s.jarque_bera_p = jarque_bera_pvalue(s.jarque_bera_stat);
  }

  report.lilliefors_rejections.assign(config.levels.size(), 0);
  report.jarque_bera_rejections.assign(config.levels.size(), 0);
  for (const auto& s : report.series) {
    if (s.skipped) continue;
    ++report.tested;
    for (std::size_t l = 0; l < config.levels.size(); ++l) {
      if (s.lilliefors_p < config.levels[l]) ++report.lilliefors_rejections[l];
      if (s.jarque_bera_p < config.levels[l]) ++report.jarque_bera_rejections[l];
    }
  }
  return report;
}

NormalityReport normality_tests(const ReturnsPanel& panel, const NormalityConfig& config) {
  return normality_tests(panel.tickers, panel.log_returns, config);
}

void write_normality_csv(std::ostream& out, const NormalityReport& report) {
  const auto old_precision = out.precision(17);
  out << "ticker,n,skipped,lilliefors_stat,lilliefors_p,jb_stat,jb_p\n";
  for (const auto& s : report.series) {
    out << s.ticker << ',' << s.n << ',' << (s.skipped ? 1 : 0) << ',';
    if (s.skipped) {
      out << ",,,\n";
      continue;
    }
    out << s.lilliefors_stat << ',' << s.lilliefors_p << ',' << s.jarque_bera_stat << ','
        << s.jarque_bera_p << '\n';
  }
  out.precision(old_precision);
}

}  // namespace skewgm
