// Copyright 2026 The orbiforest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lab/config.hpp"

#include <gtest/gtest.h>

#include "common/error.hpp"

namespace orbi::lab {
namespace {

using nlohmann::json;

ErrorCode code_of(const json& doc) {
  try {
    parse_config(doc);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

std::string message_of(const json& doc) {
  try {
    parse_config(doc);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

TEST(Config, Defaults) {
  const ExperimentConfig c = parse_config(json::object());
  EXPECT_EQ(c.radius, 4);
  EXPECT_EQ(c.seed, 1u);
  EXPECT_EQ(c.percolation.p, 0.5);
  EXPECT_EQ(c.indist.min_configurations, 30u);
  EXPECT_EQ(default_p_grid().size(), 51u);
  EXPECT_EQ(default_p_grid()[14], 0.28);
}

TEST(Config, FullDocument) {
  const json doc = json::parse(R"({
    "group": {"kind": "product_with_z", "inner": {"kind": "free", "rank": 2}},
    "radius": 6, "seed": 9, "trials": 12, "workers": 2,
    "percolation": {"p": 0.3, "p_grid": {"start": 0.1, "stop": 0.3, "step": 0.1}},
    "forest": {"epsilon": 0.1, "builder": "stacks", "ends_radii": [1, 3]},
    "indist": {"alpha": 0.01, "observable": "growth-ratio"},
    "paths": [{"from": "", "to": "a t", "max_len": 5}],
    "output": {"dir": "/tmp/x"}
  })");
  const ExperimentConfig c = parse_config(doc);
  EXPECT_EQ(c.group.kind, GroupKind::kProductWithZ);
  EXPECT_EQ(c.percolation.p_grid, (std::vector<double>{0.1, 0.2, 0.3}));
  EXPECT_EQ(c.forest.builder, ForestBuilder::kStacks);
  EXPECT_EQ(c.indist.observable, Observable::kGrowthRatio);
  ASSERT_EQ(c.paths.size(), 1u);
  EXPECT_EQ(c.paths[0].to, "a t");
  EXPECT_EQ(c.output_dir, "/tmp/x");
}

TEST(Config, UnknownKeysRejected) {
  EXPECT_EQ(code_of(json{{"radious", 3}}), ErrorCode::kConfig);
  EXPECT_NE(message_of(json{{"percolation", {{"q", 0.1}}}}).find("percolation.q"), std::string::npos);
  EXPECT_EQ(code_of(json::parse(R"({"group": {"kind": "free", "rank": 2, "orders": [2]}})")), ErrorCode::kConfig);
}

TEST(Config, RangesChecked) {
  EXPECT_EQ(code_of(json{{"percolation", {{"p", 1.5}}}}), ErrorCode::kConfig);
  EXPECT_EQ(code_of(json{{"indist", {{"alpha", 0.0}}}}), ErrorCode::kConfig);
  EXPECT_EQ(code_of(json{{"radius", -1}}), ErrorCode::kConfig);
  EXPECT_EQ(code_of(json{{"trials", 0}}), ErrorCode::kConfig);
  EXPECT_EQ(code_of(json{{"seed", -3}}), ErrorCode::kConfig);
  EXPECT_EQ(code_of(json{{"forest", {{"builder", "prim"}}}}), ErrorCode::kConfig);
  EXPECT_EQ(code_of(json{{"forest", {{"ends_radii", {2, 1}}}}}), ErrorCode::kConfig);
  EXPECT_EQ(code_of(json{{"percolation", {{"p_grid", {0.5, 0.2}}}}}), ErrorCode::kConfig);
  EXPECT_EQ(code_of(json::parse(R"({"group": {"kind": "free_product_cyclic", "orders": [1]}})")),
            ErrorCode::kConfig);
  EXPECT_EQ(code_of(json::parse(R"({"group": {"kind": "free", "rank": 2, "letters": ["u", "u"]}})")),
            ErrorCode::kConfig);
}

TEST(Config, InfiniteOrder) {
  const auto c = parse_config(json::parse(R"({"group": {"kind": "free_product_cyclic", "orders": [2, "inf"]}})"));
  EXPECT_EQ(c.group.orders, (std::vector<std::int64_t>{2, kInfiniteOrder}));
  EXPECT_EQ(group_to_json(c.group)["orders"][1], "inf");
}

TEST(Config, Overrides) {
  json doc = json::object();
  apply_override(doc, "percolation.p", "0.25");
  apply_override(doc, "forest.builder", "stacks");
  apply_override(doc, "group", R"({"kind": "free_abelian", "rank": 2})");
  const ExperimentConfig c = parse_config(doc);
  EXPECT_EQ(c.percolation.p, 0.25);
  EXPECT_EQ(c.forest.builder, ForestBuilder::kStacks);
  EXPECT_EQ(c.group.kind, GroupKind::kFreeAbelian);
}

TEST(Config, HashIgnoresWorkersAndOutput) {
  ExperimentConfig a = parse_config(json::object());
  ExperimentConfig b = a;
  b.workers = 8;
  b.output_dir = "/elsewhere";
  EXPECT_EQ(a.hash(), b.hash());
  EXPECT_EQ(a.hash().size(), 16u);
  b.seed = 2;
  EXPECT_NE(a.hash(), b.hash());
}

TEST(Config, CanonicalRoundTrip) {
  const ExperimentConfig a = parse_config(json::parse(R"({"radius": 5, "percolation": {"p": 0.4}})"));
  const ExperimentConfig b = parse_config(a.canonical());
  EXPECT_EQ(a.canonical(), b.canonical());
}

TEST(Config, MissingFile) {
  try {
    read_config_file("/nonexistent/orbiforest.json");
    FAIL() << "expected kIo";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

}  // namespace
}  // namespace orbi::lab
