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

#include "skewgm/export.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

namespace skewgm {
namespace {

std::string shortest(double v) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc()) throw Error("export: cannot format number");
  return std::string(buf.data(), ptr);
}

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string strip(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
  std::size_t b = 0;
  while (b < s.size() && (s[b] == ' ' || s[b] == '\t')) ++b;
  return s.substr(b);
}

void check_shapes(const EdgeSet& edges, const PrecisionEstimate& omega,
                  const std::vector<std::string>& labels) {
  const auto p = static_cast<Index>(labels.size());
  if (edges.p() != p) throw Error("export_graph: edge set dimension does not match label count");
  if (omega.omega.rows() != p || omega.omega.cols() != p) {
    throw Error("export_graph: precision matrix dimension does not match label count");
  }
}

}  // namespace

GraphFormat graph_format_from_string(std::string_view name) {
  if (name == "json") return GraphFormat::json;
  if (name == "dot") return GraphFormat::dot;
  throw Error("unknown graph format '" + std::string(name) + "'");
}

SectorMap load_sectors(std::istream& in) {
  SectorMap out;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    line = strip(line);
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw Error("load_sectors: expected 'ticker,sector', got '" + line + "'");
    out[strip(line.substr(0, comma))] = strip(line.substr(comma + 1));
  }
  return out;
}

SectorMap load_sectors(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("load_sectors: cannot open '" + path.string() + "'");
  return load_sectors(in);
}

nlohmann::ordered_json graph_to_json(const EdgeSet& edges, const PrecisionEstimate& omega,
                                     const std::vector<std::string>& labels,
                                     const SectorMap& sectors) {
  check_shapes(edges, omega, labels);
  nlohmann::ordered_json doc;
  doc["directed"] = false;
  doc["method"] = std::string(to_string(omega.method));
  doc["lambda"] = omega.lambda;
  auto nodes = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < labels.size(); ++k) {
    nlohmann::ordered_json node;
    node["id"] = k;
    node["label"] = labels[k];
    if (auto it = sectors.find(labels[k]); it != sectors.end()) node["sector"] = it->second;
    nodes.push_back(std::move(node));
  }
  auto links = nlohmann::ordered_json::array();
  for (auto [i, j] : edges.edges()) {
    nlohmann::ordered_json e;
    e["source"] = i;
    e["target"] = j;
    e["weight"] = std::abs(omega.omega(i, j));
    links.push_back(std::move(e));
  }
  doc["nodes"] = std::move(nodes);
  doc["edges"] = std::move(links);
  return doc;
}

void export_graph(std::ostream& out, const EdgeSet& edges, const PrecisionEstimate& omega,
                  const std::vector<std::string>& labels, GraphFormat format,
                  const SectorMap& sectors) {
  if (format == GraphFormat::json) {
    out << graph_to_json(edges, omega, labels, sectors).dump(2) << '\n';
  } else {
    check_shapes(edges, omega, labels);
    out << "graph skewgm {\n";
    for (std::size_t k = 0; k < labels.size(); ++k) {
      out << "  n" << k << " [label=" << dot_quote(labels[k]);
      if (auto it = sectors.find(labels[k]); it != sectors.end()) {
        out << ", sector=" << dot_quote(it->second);
      }
      out << "];\n";
    }
    for (auto [i, j] : edges.edges()) {
      out << "  n" << i << " -- n" << j << " [weight=" << shortest(std::abs(omega.omega(i, j)))
          << "];\n";
    }
    out << "}\n";
  }
  if (!out) throw Error("export_graph: write failed");
}

void export_graph(const std::filesystem::path& path, const EdgeSet& edges,
                  const PrecisionEstimate& omega, const std::vector<std::string>& labels,
                  GraphFormat format, const SectorMap& sectors) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("export_graph: cannot open '" + path.string() + "' for writing");
  export_graph(out, edges, omega, labels, format, sectors);
  out.close();
  if (!out) throw Error("export_graph: write to '" + path.string() + "' failed");
}

}  // namespace skewgm
