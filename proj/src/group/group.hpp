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

#ifndef ORBIFOREST_GROUP_GROUP_HPP
#define ORBIFOREST_GROUP_GROUP_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace orbi {

enum class GroupKind { kFree, kFreeAbelian, kFreeProductCyclic, kProductWithZ };

// Order 0 stands for an infinite cyclic factor.
inline constexpr std::int64_t kInfiniteOrder = 0;

// Description of a group from the supported catalog. `letters` optionally
// renames the basis letters introduced by this level (the extra central
// letter for kProductWithZ); defaults are a, b, c, ... for free and free
// product factors, x, y, z, ... for free abelian, and t for the Z factor.
struct GroupSpec {
  GroupKind kind = GroupKind::kFree;
  int rank = 0;
  std::vector<std::int64_t> orders;
  std::shared_ptr<const GroupSpec> inner;
  std::vector<std::string> letters;

  static GroupSpec free(int rank);
  static GroupSpec free_abelian(int rank);
  static GroupSpec free_product_cyclic(std::vector<std::int64_t> orders);
  static GroupSpec product_with_z(GroupSpec inner);

  GroupSpec with_letters(std::vector<std::string> names) const;
  std::string describe() const;
};

struct Syllable {
  std::uint32_t factor;
  std::int64_t exponent;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// Normal form: alternating syllables over the free-product factors (adjacent
// factors distinct, exponents reduced mod finite orders into [1, m-1]),
// followed by the exponent vector of the central free abelian letters.
struct Element {
  std::vector<Syllable> word;
  std::vector<std::int64_t> central;

  bool is_identity() const;
  friend bool operator==(const Element&, const Element&) = default;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept;
};

// A flattened catalog group: a free product of cyclic groups times a free
// abelian group. Every catalog kind reduces to this shape, which keeps the
// word problem a few lines of syllable arithmetic.
class Group {
 public:
  explicit Group(const GroupSpec& spec);

  const GroupSpec& spec() const { return spec_; }
  std::size_t factor_count() const { return factor_orders_.size(); }
  std::size_t central_count() const { return central_names_.size(); }
  std::int64_t factor_order(std::size_t i) const { return factor_orders_[i]; }

  // Free-product letters first, then central letters.
  std::vector<std::string> basis_letters() const;

  Element identity() const;
  Element letter(std::size_t index, std::int64_t exponent = 1) const;
  Element multiply(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;

  // Parses whitespace-separated tokens `name`, `name^k` or `name⁻¹` and
  // returns the normal form of their product. Throws kUnknownGenerator.
  Element normalize(std::string_view word) const;

  // Canonical text: syllables as "a", "a^-1", "b^2"; identity is "".
  std::string format(const Element& e) const;

 private:
  void flatten(const GroupSpec& spec);
  std::int64_t reduce(std::size_t factor, std::int64_t exponent) const;
  void append(Element& target, Syllable s) const;

  GroupSpec spec_;
  std::vector<std::string> factor_names_;
  std::vector<std::int64_t> factor_orders_;
  std::vector<std::string> central_names_;
  std::unordered_map<std::string, std::size_t> letter_index_;
};

}  // namespace orbi

#endif  // ORBIFOREST_GROUP_GROUP_HPP
