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

#include "lab/lab.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <gtest/gtest.h>

#include "common/error.hpp"

namespace orbi::lab {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::map<std::string, std::string> read_tree(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::ifstream in(entry.path(), std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    out[entry.path().filename().string()] = buffer.str();
  }
  return out;
}

ExperimentConfig small_config() {
  return parse_config(json::parse(R"({
    "group": {"kind": "product_with_z", "inner": {"kind": "free", "rank": 2}},
    "radius": 3, "radii": [3], "seed": 5, "trials": 8,
    "percolation": {"p": 0.5, "p_grid": [0.2, 0.5]},
    "forest": {"epsilon": 0.1, "ends_radii": [1, 2]},
    "indist": {"min_configurations": 2, "resample": 20},
    "paths": [{"from": "", "to": "a", "max_len": 4}]
  })"));
}

class LabTest : public ::testing::Test {
 protected:
  void SetUp() override {
    root_ = fs::temp_directory_path() /
            ("orbiforest-lab-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(root_);
  }
  void TearDown() override { fs::remove_all(root_); }
  fs::path root_;
};

TEST_F(LabTest, EverySubcommandIsDeterministicAcrossWorkers) {
  for (const std::string& sub : subcommands()) {
    if (sub == "selftest") continue;  // covered by the oracle tests
    ExperimentConfig c = small_config();
    if (sub == "indist") {
      // Needs two large boundary clusters per configuration.
      c.radius = 5;
      c.percolation.p = 0.55;
    }
    ExperimentConfig p = c;
    p.workers = 3;
    const fs::path a = root_ / "a" / sub, b = root_ / "b" / sub, again = root_ / "c" / sub;
    const RunResult ra = run(sub, c, a.string());
    const RunResult rb = run(sub, p, b.string());
    run(sub, c, again.string());
    EXPECT_EQ(ra.exit_code, 0) << sub;
    EXPECT_FALSE(ra.artifacts.empty()) << sub;
    EXPECT_EQ(ra.summary.dump(), rb.summary.dump()) << sub;
    EXPECT_EQ(read_tree(a), read_tree(b)) << sub;
    EXPECT_EQ(read_tree(a), read_tree(again)) << sub;
  }
}

TEST_F(LabTest, CsvSidecarsCarryProvenance) {
  const ExperimentConfig c = small_config();
  run("percolate", c, (root_ / "p").string());
  std::ifstream in(root_ / "p" / "clusters.csv.meta.json");
  ASSERT_TRUE(in.good());
  const json meta = json::parse(in);
  EXPECT_EQ(meta["provenance"]["config_hash"], c.hash());
  EXPECT_EQ(meta["provenance"]["seed"], 5);
  EXPECT_EQ(meta["provenance"]["subcommand"], "percolate");
  EXPECT_FALSE(meta["columns"].empty());
}

TEST_F(LabTest, BallSummary) {
  ExperimentConfig c = small_config();
  c.group = GroupSpec::free(2);
  c.radius = 2;
  const RunResult r = run("ball", c, (root_ / "ball").string());
  EXPECT_EQ(r.summary["vertices"], 17);
  EXPECT_EQ(r.summary["edges"], 16);
  EXPECT_TRUE(fs::exists(root_ / "ball" / "ball.svg"));
}

TEST_F(LabTest, PhaseScanColumns) {
  const ExperimentConfig c = small_config();
  run("phase-scan", c, (root_ / "scan").string());
  std::ifstream in(root_ / "scan" / "phase_scan.csv");
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "group,R,p,trials,theta_hat,u_hat,nbig_hat,se_theta");
}

TEST_F(LabTest, ForestColumns) {
  const ExperimentConfig c = small_config();
  run("pipeline", c, (root_ / "pipe").string());
  std::ifstream in(root_ / "pipe" / "forest.csv");
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "edge_id,tail,head,label,in_F1,in_F2");
}

TEST(Lab, UnknownSubcommand) {
  EXPECT_THROW(run("frobnicate", small_config(), "/tmp/orbiforest-unused"), Error);
}

TEST(Lab, OutputDirectoryPrecedence) {
  ExperimentConfig c = small_config();
  ::setenv("ORBIFOREST_OUT", "/env", 1);
  EXPECT_EQ(resolve_output_dir(c, "/explicit", "ball"), "/explicit/ball");
  EXPECT_EQ(resolve_output_dir(c, "", "ball"), "/env/ball");
  c.output_dir = "/cfg";
  EXPECT_EQ(resolve_output_dir(c, "", "ball"), "/cfg/ball");
  ::unsetenv("ORBIFOREST_OUT");
  c.output_dir.clear();
  EXPECT_EQ(resolve_output_dir(c, "", "ball"), "orbiforest-out/ball");
}

}  // namespace
}  // namespace orbi::lab
