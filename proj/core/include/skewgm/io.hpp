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

// Plain numeric CSV for observation matrices.

#pragma once

#include <filesystem>
#include <iosfwd>

#include "skewgm/types.hpp"

namespace skewgm {

/// Header row of column labels, then one numeric row per observation. A
/// leading column named "date" (any case) is skipped.
DataMatrix read_data_csv(std::istream& in);
DataMatrix read_data_csv(const std::filesystem::path& path);

/// Header of labels and full-precision rows.
void write_data_csv(std::ostream& out, const DataMatrix& data);

/// Square matrix with a label header row and a label first column.
void write_matrix_csv(std::ostream& out, const Matrix& m, const std::vector<std::string>& labels);

}  // namespace skewgm
