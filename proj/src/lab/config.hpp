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

#ifndef ORBIFOREST_LAB_CONFIG_HPP
#define ORBIFOREST_LAB_CONFIG_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cost/indist.hpp"
#include "forest/pipeline.hpp"
#include "group/group.hpp"

namespace orbi::lab {

struct PathQuery {
  std::string from;  // words over the basis letters
  std::string to;
  std::uint32_t max_len = 8;
};

struct ExperimentConfig {
  GroupSpec group = GroupSpec::free(2);
  std::vector<std::string> generators;  // empty: one per basis letter
  int radius = 4;
  std::vector<int> radii;               // phase-scan; empty: {radius}
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  unsigned workers = 1;                 // never part of the provenance hash

  struct {
    double p = 0.5;
    std::vector<double> p_grid;         // empty: 0, 0.02, ..., 1
    double delta_c = 0.05;
    double delta_u = 0.05;
  } percolation;

  struct {
    double epsilon = 0.05;
    ForestBuilder builder = ForestBuilder::kLoopErasedWalk;
    std::vector<std::uint32_t> ends_radii = {1, 2};
  } forest;

  struct {
    double alpha = 0.05;
    Observable observable = Observable::kMeanDegree;
    std::size_t resample = 200;
    std::size_t min_configurations = 30;
  } indist;

  struct {
    std::size_t vertex_cap = 2'000'000;
    std::uint64_t pop_cap = 1'000'000'000;
    std::uint64_t path_cap = 1'000'000;
  } caps;

  std::vector<PathQuery> paths;
  std::string output_dir;               // empty: ORBIFOREST_OUT, then ./orbiforest-out

  // Canonical JSON of every field above except workers and output_dir.
  nlohmann::json canonical() const;
  // FNV-1a of canonical().dump(), as 16 hex digits.
  std::string hash() const;
};

// Strict parse: unknown keys, wrong types and out-of-range values throw kConfig.
ExperimentConfig parse_config(const nlohmann::json& doc);

nlohmann::json read_config_file(const std::string& path);

// Sets a dotted key ("percolation.p") in the raw document. The value is read
// as JSON when it parses, otherwise as a string.
void apply_override(nlohmann::json& doc, std::string_view dotted_key, std::string_view value);

// Default grid 0, 0.02, ..., 1 with exact two-decimal values.
std::vector<double> default_p_grid();

nlohmann::json group_to_json(const GroupSpec& spec);

}  // namespace orbi::lab

#endif  // ORBIFOREST_LAB_CONFIG_HPP
