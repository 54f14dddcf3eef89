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

#ifndef ORBIFOREST_LAB_LAB_HPP
#define ORBIFOREST_LAB_LAB_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lab/config.hpp"

namespace orbi::lab {

struct RunResult {
  nlohmann::json summary;
  std::vector<std::string> artifacts;  // file names inside the output directory
  int exit_code = 0;                   // nonzero when a check or suite failed
};

const std::vector<std::string>& subcommands();

// Explicit directory, else config output.dir, else $ORBIFOREST_OUT, else
// ./orbiforest-out; the subcommand name is appended.
std::string resolve_output_dir(const ExperimentConfig& config, std::string_view explicit_dir,
                               std::string_view subcommand);

RunResult run(std::string_view subcommand, const ExperimentConfig& config, const std::string& out_dir);

}  // namespace orbi::lab

#endif  // ORBIFOREST_LAB_LAB_HPP
