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

// Graph serialization. Output bytes depend only on the inputs.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "skewgm/precision.hpp"

namespace skewgm {

enum class GraphFormat { json, dot };

GraphFormat graph_format_from_string(std::string_view name);

/// label -> sector
using SectorMap = std::map<std::string, std::string>;

/// Two-column CSV `ticker,sector` with a header row.
SectorMap load_sectors(std::istream& in);
SectorMap load_sectors(const std::filesystem::path& path);

/// {"directed": false, "method", "lambda", "nodes": [{"id", "label", "sector"?}],
///  "edges": [{"source", "target", "weight"}]} with weight = |omega_ij|.
nlohmann::ordered_json graph_to_json(const EdgeSet& edges, const PrecisionEstimate& omega,
                                     const std::vector<std::string>& labels,
                                     const SectorMap& sectors = {});

void export_graph(std::ostream& out, const EdgeSet& edges, const PrecisionEstimate& omega,
                  const std::vector<std::string>& labels, GraphFormat format,
                  const SectorMap& sectors = {});
void export_graph(const std::filesystem::path& path, const EdgeSet& edges,
                  const PrecisionEstimate& omega, const std::vector<std::string>& labels,
                  GraphFormat format, const SectorMap& sectors = {});

}  // namespace skewgm
