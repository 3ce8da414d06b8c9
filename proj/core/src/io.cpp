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

#include "skewgm/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace skewgm {
namespace {

std::vector<std::string> split_cells(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    std::string cell = line.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
    while (!cell.empty() && std::isspace(static_cast<unsigned char>(cell.back()))) cell.pop_back();
    std::size_t b = 0;
    while (b < cell.size() && std::isspace(static_cast<unsigned char>(cell[b]))) ++b;
    cell.erase(0, b);
    if (cell.size() >= 2 && cell.front() == '"' && cell.back() == '"') cell = cell.substr(1, cell.size() - 2);
    out.push_back(std::move(cell));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

bool is_date_header(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s == "date";
}

}  // namespace

DataMatrix read_data_csv(std::istream& in) {
  std::string line;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    header = split_cells(line);
    break;
  }
  if (header.empty()) throw Error("read_data_csv: missing header row");
  const std::size_t skip = is_date_header(header.front()) ? 1 : 0;
  std::vector<std::string> labels(header.begin() + static_cast<std::ptrdiff_t>(skip), header.end());
  std::vector<double> values;
  std::size_t rows = 0;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto cells = split_cells(line);
    if (cells.size() != header.size()) {
      throw Error("read_data_csv: line " + std::to_string(line_no) + " has " +
                  std::to_string(cells.size()) + " fields, expected " + std::to_string(header.size()));
    }
    for (std::size_t c = skip; c < cells.size(); ++c) {
      double v = 0.0;
      const char* first = cells[c].data();
      const char* last = first + cells[c].size();
      if (first != last && *first == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, last, v);
      if (ec != std::errc() || ptr != last || first == last) {
        throw Error("read_data_csv: line " + std::to_string(line_no) + ": cannot parse '" +
                    cells[c] + "'");
      }
      values.push_back(v);
    }
    ++rows;
  }
  const auto p = static_cast<Index>(labels.size());
  Matrix m(static_cast<Index>(rows), p);
  for (std::size_t r = 0; r < rows; ++r) {
    for (Index c = 0; c < p; ++c) m(static_cast<Index>(r), c) = values[r * labels.size() + static_cast<std::size_t>(c)];
  }
  return DataMatrix(std::move(m), std::move(labels));
}

DataMatrix read_data_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("read_data_csv: cannot open '" + path.string() + "'");
  return read_data_csv(in);
}

void write_data_csv(std::ostream& out, const DataMatrix& data) {
  const auto old_precision = out.precision(17);
  for (Index c = 0; c < data.p(); ++c) out << (c ? "," : "") << data.labels()[static_cast<std::size_t>(c)];
  out << '\n';
  for (Index r = 0; r < data.n(); ++r) {
    for (Index c = 0; c < data.p(); ++c) out << (c ? "," : "") << data.values()(r, c);
    out << '\n';
  }
  out.precision(old_precision);
}

void write_matrix_csv(std::ostream& out, const Matrix& m, const std::vector<std::string>& labels) {
  if (static_cast<Index>(labels.size()) != m.rows() || m.rows() != m.cols()) {
    throw Error("write_matrix_csv: label count does not match matrix shape");
  }
  const auto old_precision = out.precision(17);
  out << "label";
  for (const auto& l : labels) out << ',' << l;
  out << '\n';
  for (Index r = 0; r < m.rows(); ++r) {
    out << labels[static_cast<std::size_t>(r)];
    for (Index c = 0; c < m.cols(); ++c) out << ',' << m(r, c);
    out << '\n';
  }
  out.precision(old_precision);
}

}  // namespace skewgm
