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

#ifndef ORBIFOREST_COMMON_RNG_HPP
#define ORBIFOREST_COMMON_RNG_HPP

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace orbi {

// Seed derivation contract (frozen; test vectors in tests/rng_test.cpp):
//
//   state  = mix64(master ^ mix64(fnv1a64(context)))
//   state  = mix64(state ^ mix64(index + kGolden))     for each index in order
//
// Every random stream in the library is keyed by a derived seed, so a run is
// a pure function of (master seed, context, indices) and never of scheduling.

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view bytes) noexcept {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

constexpr std::uint64_t derive_seed(
    std::uint64_t master, std::string_view context,
    std::initializer_list<std::uint64_t> indices = {}) noexcept {
  std::uint64_t state = mix64(master ^ mix64(fnv1a64(context)));
  for (std::uint64_t index : indices) state = mix64(state ^ mix64(index + kGolden));
  return state;
}

// Maps 64 random bits to the half-open interval (0, 1] with 53-bit
// resolution. Zero is excluded so that thresholding at p = 0 is empty.
constexpr double bits_to_unit(std::uint64_t bits) noexcept {
  return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;
}

// Counter-based uniform: value number `index` of the stream keyed by `stream`.
// This is position `index` of the SplitMix64 sequence started at `stream`.
constexpr double counter_uniform(std::uint64_t stream, std::uint64_t index) noexcept {
  return bits_to_unit(mix64(stream + index * kGolden));
}

// Sequential stream for walks and resampling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return bits_to_unit(engine_()); }

  // Uniform integer in [0, n), n >= 1.
  std::uint64_t below(std::uint64_t n) {
    __extension__ using Wide = unsigned __int128;
    return static_cast<std::uint64_t>((static_cast<Wide>(engine_()) * n) >> 64);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace orbi

#endif  // ORBIFOREST_COMMON_RNG_HPP
