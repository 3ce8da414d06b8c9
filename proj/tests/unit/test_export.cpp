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

#include <sstream>

#include <gtest/gtest.h>

#include "skewgm/export.hpp"
#include "skewgm/io.hpp"
#include "skewgm/returns.hpp"

namespace skewgm {
namespace {

PrecisionEstimate precision_with(std::vector<std::tuple<Index, Index, double>> entries, Index p) {
  PrecisionEstimate est;
  est.omega = Matrix::Identity(p, p);
  for (auto [i, j, v] : entries) est.omega(i, j) = est.omega(j, i) = v;
  est.lambda = 0.5;
  return est;
}

std::string render(const EdgeSet& e, const PrecisionEstimate& o, const std::vector<std::string>& labels,
                   GraphFormat f, const SectorMap& sectors = {}) {
  std::ostringstream out;
  export_graph(out, e, o, labels, f, sectors);
  return out.str();
}

TEST(ExportGraph, EmptyEdgeSetJsonHasNodesOnly) {
  const auto o = precision_with({}, 3);
  const auto j = nlohmann::json::parse(render(EdgeSet(3), o, {"a", "b", "c"}, GraphFormat::json));
  EXPECT_EQ(j["nodes"].size(), 3u);
  EXPECT_TRUE(j["edges"].empty());
  EXPECT_EQ(j["nodes"][1]["label"], "b");
  EXPECT_EQ(j["directed"], false);
}

TEST(ExportGraph, SingleEdgeDotHasOneConnector) {
  const auto o = precision_with({{0, 2, -0.25}}, 3);
  const std::string dot = render(EdgeSet(3, {{0, 2}}), o, {"a", "b", "c"}, GraphFormat::dot);
  std::size_t count = 0;
  for (auto pos = dot.find("--"); pos != std::string::npos; pos = dot.find("--", pos + 2)) ++count;
  EXPECT_EQ(count, 1u);
  EXPECT_NE(dot.find("n0 -- n2 [weight=0.25];"), std::string::npos);
}

TEST(ExportGraph, IsByteIdenticalOnRepeat) {
  const auto o = precision_with({{0, 1, 0.3}, {1, 2, -0.125}}, 3);
  const EdgeSet e(3, {{0, 1}, {1, 2}});
  const SectorMap sectors{{"a", "Tech"}, {"c", "Energy \"X\""}};
  for (auto f : {GraphFormat::json, GraphFormat::dot}) {
    EXPECT_EQ(render(e, o, {"a", "b", "c"}, f, sectors), render(e, o, {"a", "b", "c"}, f, sectors));
  }
  const std::string dot = render(e, o, {"a", "b", "c"}, GraphFormat::dot, sectors);
  EXPECT_NE(dot.find("sector=\"Energy \\\"X\\\"\""), std::string::npos);
}

TEST(ExportGraph, RejectsShapeMismatch) {
  const auto o = precision_with({}, 3);
  EXPECT_THROW(render(EdgeSet(3), o, {"a", "b"}, GraphFormat::json), Error);
}

TEST(ExportGraph, IngestRoundTripKeepsTickerOrder) {
  std::istringstream in(
      "date,MSFT,AAPL,XOM\n2024-01-02,10,20,30\n2024-01-03,11,19,31\n2024-01-04,12,21,29\n"
      "2024-01-05,11,22,30\n");
  const auto panel = ingest_prices(in);
  const auto data = panel.data();
  const auto o = precision_with({}, 3);
  const auto j = nlohmann::json::parse(render(EdgeSet(3), o, data.labels(), GraphFormat::json));
  for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(j["nodes"][k]["label"], panel.tickers[k]);
}

TEST(LoadSectors, SkipsHeaderAndTrims) {
  std::istringstream in("ticker,sector\nAAPL, Tech\r\n\nXOM,Energy\n");
  const auto s = load_sectors(in);
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.at("AAPL"), "Tech");
  std::istringstream bad("ticker,sector\nnocomma\n");
  EXPECT_THROW(load_sectors(bad), Error);
}

TEST(DataCsv, RoundTripsExactly) {
  Matrix m(3, 2);
  m << 0.1, -2.5e-7, 1.0 / 3.0, 4, 5, 6;
  const DataMatrix d(m, {"x", "y"});
  std::ostringstream out;
  write_data_csv(out, d);
  std::istringstream in(out.str());
  const auto back = read_data_csv(in);
  EXPECT_EQ(back.values(), d.values());
  EXPECT_EQ(back.labels(), d.labels());
}

TEST(DataCsv, SkipsLeadingDateColumn) {
  std::istringstream in("date,a,b\n2024-01-01,1,2\n2024-01-02,3,5\n2024-01-03,4,4\n");
  const auto d = read_data_csv(in);
  EXPECT_EQ(d.labels(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(d.values()(2, 1), 4.0);
}

}  // namespace
}  // namespace skewgm
