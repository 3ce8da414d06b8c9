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

#include "skewgm/types.hpp"

#include <unordered_set>
#include <utility>

namespace skewgm {

DegenerateColumnError::DegenerateColumnError(Index column, std::string label)
    : Error("degenerate column " + std::to_string(column) + " ('" + label +
            "'): all values tied, rank statistic undefined"),
      column_(column),
      label_(std::move(label)) {}

std::vector<std::string> default_labels(Index p) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(p));
  for (Index j = 0; j < p; ++j) labels.push_back("V" + std::to_string(j + 1));
  return labels;
}

DataMatrix::DataMatrix(Matrix values)
    : values_(std::move(values)), labels_(default_labels(values_.cols())) {
  validate();
}

DataMatrix::DataMatrix(Matrix values, std::vector<std::string> labels)
    : values_(std::move(values)), labels_(std::move(labels)) {
  validate();
}

void DataMatrix::validate() const {
  if (values_.rows() < 3) {
    throw Error("data matrix needs at least 3 observations, got " +
                std::to_string(values_.rows()));
  }
  if (values_.cols() < 2) {
    throw Error("data matrix needs at least 2 variables, got " +
                std::to_string(values_.cols()));
  }
  if (static_cast<Index>(labels_.size()) != values_.cols()) {
    throw Error("label count " + std::to_string(labels_.size()) +
                " does not match column count " +
                std::to_string(values_.cols()));
  }
  if (!values_.allFinite()) throw Error("data matrix contains non-finite values");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw Error("duplicate column label '" + l + "'");
  }
}

DataMatrix DataMatrix::select_rows(std::span<const Index> rows) const {
  Matrix out(static_cast<Index>(rows.size()), values_.cols());
  for (std::size_t r = 0; r < rows.size(); ++r) out.row(static_cast<Index>(r)) = values_.row(rows[r]);
  return DataMatrix(std::move(out), labels_);
}

DataMatrix DataMatrix::with_values(Matrix values) const {
  if (values.rows() != values_.rows() || values.cols() != values_.cols()) {
    throw Error("with_values: shape mismatch");
  }
  return DataMatrix(std::move(values), labels_);
}

std::string_view to_string(Statistic s) {
  switch (s) {
    case Statistic::kendall:
      return "kendall";
    case Statistic::spearman:
      return "spearman";
    case Statistic::pearson:
      return "pearson";
  }
  return "unknown";
}

}  // namespace skewgm
