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

#include "common/error.hpp"

namespace orbi {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kUnknownGenerator: return "unknown_generator";
    case ErrorCode::kCapExceeded: return "cap_exceeded";
    case ErrorCode::kDegenerate: return "degenerate";
    case ErrorCode::kInsufficientData: return "insufficient_data";
    case ErrorCode::kConfig: return "config";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kCheckFailed: return "check_failed";
    case ErrorCode::kInternal: return "internal";
  }
  return "internal";
}

}  // namespace orbi
