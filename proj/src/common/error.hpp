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

#ifndef ORBIFOREST_COMMON_ERROR_HPP
#define ORBIFOREST_COMMON_ERROR_HPP

#include <stdexcept>
#include <string>

namespace orbi {

// Values are mirrored one-to-one by orbi_status in the public C header.
enum class ErrorCode : int {
  kInvalidArgument = 1,
  kUnknownGenerator = 2,
  kCapExceeded = 3,
  kDegenerate = 4,
  kInsufficientData = 5,
  kConfig = 6,
  kIo = 7,
  kCheckFailed = 8,
  kInternal = 9,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace orbi

#endif  // ORBIFOREST_COMMON_ERROR_HPP
