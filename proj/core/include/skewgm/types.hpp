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

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace skewgm {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A column whose values are all tied, so rank statistics are undefined.
class DegenerateColumnError : public Error {
 public:
  DegenerateColumnError(Index column, std::string label);

  Index column() const { return column_; }
  const std::string& label() const { return label_; }

 private:
  Index column_;
  std::string label_;
};

/// n x p observation matrix with one label per column.
///
/// Construction validates n >= 3, p >= 2, finite entries and unique labels.
class DataMatrix {
 public:
  explicit DataMatrix(Matrix values);
  DataMatrix(Matrix values, std::vector<std::string> labels);

  const Matrix& values() const { return values_; }
  const std::vector<std::string>& labels() const { return labels_; }
  Index n() const { return values_.rows(); }
  Index p() const { return values_.cols(); }

  std::span<const double> column(Index j) const {
    return {values_.col(j).data(), static_cast<std::size_t>(values_.rows())};
  }

  /// Rows selected by `rows`, in the given order; labels are kept.
  DataMatrix select_rows(std::span<const Index> rows) const;

  /// Same labels, new values of identical shape.
  DataMatrix with_values(Matrix values) const;

 private:
  void validate() const;

  Matrix values_;
  std::vector<std::string> labels_;
};

/// Labels "V1", ..., "Vp".
std::vector<std::string> default_labels(Index p);

enum class Statistic { kendall, spearman, pearson };

std::string_view to_string(Statistic s);

/// A p x p correlation matrix plus how it was produced.
struct CorrelationEstimate {
  Matrix matrix;
  Statistic statistic = Statistic::pearson;
  bool transformed = false;
  bool skew_corrected = false;
  bool psd_repaired = false;
};

}  // namespace skewgm
