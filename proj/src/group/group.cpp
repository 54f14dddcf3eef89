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

#include "group/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include <fmt/format.h>

#include "common/error.hpp"
#include "common/rng.hpp"

namespace orbi {
namespace {

constexpr std::string_view kSuperscriptInverse = "⁻¹";

std::string default_product_letter(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return fmt::format("g{}", i + 1);
}

std::string default_abelian_letter(std::size_t i) {
  static constexpr std::string_view kNames = "xyzw";
  if (i < kNames.size()) return std::string(1, kNames[i]);
  return fmt::format("x{}", i + 1);
}

std::int64_t parse_exponent(std::string_view text, std::string_view token) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    fail(ErrorCode::kInvalidArgument, fmt::format("malformed exponent in token '{}'", token));
  }
  return value;
}

}  // namespace

GroupSpec GroupSpec::free(int rank) {
  GroupSpec s;
  s.kind = GroupKind::kFree;
  s.rank = rank;
  return s;
}

GroupSpec GroupSpec::free_abelian(int rank) {
  GroupSpec s;
  s.kind = GroupKind::kFreeAbelian;
  s.rank = rank;
  return s;
}

GroupSpec GroupSpec::free_product_cyclic(std::vector<std::int64_t> orders) {
  GroupSpec s;
  s.kind = GroupKind::kFreeProductCyclic;
  s.orders = std::move(orders);
  return s;
}

GroupSpec GroupSpec::product_with_z(GroupSpec inner) {
  GroupSpec s;
  s.kind = GroupKind::kProductWithZ;
  s.inner = std::make_shared<const GroupSpec>(std::move(inner));
  return s;
}

GroupSpec GroupSpec::with_letters(std::vector<std::string> names) const {
  GroupSpec s = *this;
  s.letters = std::move(names);
  return s;
}

std::string GroupSpec::describe() const {
  switch (kind) {
    case GroupKind::kFree: return fmt::format("free({})", rank);
    case GroupKind::kFreeAbelian: return fmt::format("free_abelian({})", rank);
    case GroupKind::kFreeProductCyclic: {
      std::string out = "free_product_cyclic(";
      for (std::size_t i = 0; i < orders.size(); ++i) {
        if (i) out += ",";
        out += orders[i] == kInfiniteOrder ? std::string("inf") : std::to_string(orders[i]);
      }
      return out + ")";
    }
    case GroupKind::kProductWithZ:
      return fmt::format("product_with_z({})", inner ? inner->describe() : std::string("?"));
  }
  return "?";
}

bool Element::is_identity() const {
  if (!word.empty()) return false;
  for (std::int64_t c : central) {
    if (c != 0) return false;
  }
  return true;
}

std::size_t ElementHash::operator()(const Element& e) const noexcept {
  std::uint64_t h = 0x51ED270B27E1B3A5ULL;
  for (const Syllable& s : e.word) {
    h = mix64(h ^ s.factor);
    h = mix64(h ^ static_cast<std::uint64_t>(s.exponent));
  }
  h = mix64(h ^ 0xFFULL);
  for (std::int64_t c : e.central) h = mix64(h ^ static_cast<std::uint64_t>(c));
  return static_cast<std::size_t>(h);
}

Group::Group(const GroupSpec& spec) : spec_(spec) {
  flatten(spec_);
  for (std::size_t i = 0; i < factor_names_.size(); ++i) {
    if (!letter_index_.emplace(factor_names_[i], i).second) {
      fail(ErrorCode::kConfig, fmt::format("duplicate letter '{}'", factor_names_[i]));
    }
  }
  for (std::size_t i = 0; i < central_names_.size(); ++i) {
    if (!letter_index_.emplace(central_names_[i], factor_names_.size() + i).second) {
      fail(ErrorCode::kConfig, fmt::format("duplicate letter '{}'", central_names_[i]));
    }
  }
}

void Group::flatten(const GroupSpec& spec) {
  auto named = [&](std::size_t count, auto default_name) {
    if (!spec.letters.empty() && spec.letters.size() != count) {
      fail(ErrorCode::kConfig, fmt::format("{} expects {} letter names, got {}",
                                           spec.describe(), count, spec.letters.size()));
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < count; ++i) {
      names.push_back(spec.letters.empty() ? default_name(i) : spec.letters[i]);
      if (names.back().empty()) fail(ErrorCode::kConfig, "empty letter name");
    }
    return names;
  };

  switch (spec.kind) {
    case GroupKind::kFree: {
      if (spec.rank < 1) fail(ErrorCode::kConfig, "free group rank must be >= 1");
      for (auto& n : named(static_cast<std::size_t>(spec.rank), default_product_letter)) {
        factor_names_.push_back(n);
        factor_orders_.push_back(kInfiniteOrder);
      }
      break;
    }
    case GroupKind::kFreeAbelian: {
      if (spec.rank < 1) fail(ErrorCode::kConfig, "free abelian rank must be >= 1");
      for (auto& n : named(static_cast<std::size_t>(spec.rank), default_abelian_letter)) {
        central_names_.push_back(n);
      }
      break;
    }
    case GroupKind::kFreeProductCyclic: {
      if (spec.orders.empty()) fail(ErrorCode::kConfig, "free product needs at least one factor");
      auto names = named(spec.orders.size(), default_product_letter);
      for (std::size_t i = 0; i < spec.orders.size(); ++i) {
        const std::int64_t m = spec.orders[i];
        if (m != kInfiniteOrder && m < 2) {
          fail(ErrorCode::kConfig, fmt::format("cyclic factor order must be >= 2 or inf, got {}", m));
        }
        factor_names_.push_back(names[i]);
        factor_orders_.push_back(m);
      }
      break;
    }
    case GroupKind::kProductWithZ: {
      if (!spec.inner) fail(ErrorCode::kConfig, "product_with_z needs an inner group");
      flatten(*spec.inner);
      auto taken = [&](const std::string& n) {
        return std::find(central_names_.begin(), central_names_.end(), n) != central_names_.end() ||
               std::find(factor_names_.begin(), factor_names_.end(), n) != factor_names_.end();
      };
      std::string name = "t";
      for (int k = 2; taken(name); ++k) name = fmt::format("t{}", k);
      central_names_.push_back(named(1, [&](std::size_t) { return name; })[0]);
      break;
    }
  }
}

std::int64_t Group::reduce(std::size_t factor, std::int64_t exponent) const {
  const std::int64_t m = factor_orders_[factor];
  if (m == kInfiniteOrder) return exponent;
  std::int64_t r = exponent % m;
  if (r < 0) r += m;
  return r;
}

void Group::append(Element& target, Syllable s) const {
  s.exponent = reduce(s.factor, s.exponent);
  if (s.exponent == 0) return;
  if (!target.word.empty() && target.word.back().factor == s.factor) {
    const std::int64_t merged = reduce(s.factor, target.word.back().exponent + s.exponent);
    if (merged == 0) {
      target.word.pop_back();
    } else {
      target.word.back().exponent = merged;
    }
    return;
  }
  target.word.push_back(s);
}

std::vector<std::string> Group::basis_letters() const {
  std::vector<std::string> out = factor_names_;
  out.insert(out.end(), central_names_.begin(), central_names_.end());
  return out;
}

Element Group::identity() const {
  Element e;
  e.central.assign(central_names_.size(), 0);
  return e;
}

Element Group::letter(std::size_t index, std::int64_t exponent) const {
  Element e = identity();
  if (index < factor_names_.size()) {
    append(e, Syllable{static_cast<std::uint32_t>(index), exponent});
  } else {
    e.central.at(index - factor_names_.size()) = exponent;
  }
  return e;
}

Element Group::multiply(const Element& a, const Element& b) const {
  Element out = a;
  // Merging at the junction can cancel whole syllables of `a`; each append
  // re-examines the new last syllable, so cascades are handled.
  for (const Syllable& s : b.word) append(out, s);
  for (std::size_t i = 0; i < out.central.size(); ++i) out.central[i] += b.central[i];
  return out;
}

Element Group::inverse(const Element& a) const {
  Element out = identity();
  for (auto it = a.word.rbegin(); it != a.word.rend(); ++it) {
    append(out, Syllable{it->factor, -it->exponent});
  }
  for (std::size_t i = 0; i < out.central.size(); ++i) out.central[i] = -a.central[i];
  return out;
}

Element Group::normalize(std::string_view word) const {
  Element out = identity();
  std::size_t pos = 0;
  while (pos < word.size()) {
    while (pos < word.size() && std::isspace(static_cast<unsigned char>(word[pos]))) ++pos;
    if (pos >= word.size()) break;
    std::size_t end = pos;
    while (end < word.size() && !std::isspace(static_cast<unsigned char>(word[end]))) ++end;
    const std::string_view token = word.substr(pos, end - pos);
    pos = end;

    std::string_view name = token;
    std::int64_t exponent = 1;
    if (const auto caret = token.find('^'); caret != std::string_view::npos) {
      name = token.substr(0, caret);
      exponent = parse_exponent(token.substr(caret + 1), token);
    } else if (token.size() > kSuperscriptInverse.size() &&
               token.substr(token.size() - kSuperscriptInverse.size()) == kSuperscriptInverse) {
      name = token.substr(0, token.size() - kSuperscriptInverse.size());
      exponent = -1;
    }
    const auto found = letter_index_.find(std::string(name));
    if (found == letter_index_.end()) {
      fail(ErrorCode::kUnknownGenerator, fmt::format("unknown generator label '{}'", name));
    }
    out = multiply(out, letter(found->second, exponent));
  }
  return out;
}

std::string Group::format(const Element& e) const {
  std::string out;
  auto emit = [&out](const std::string& name, std::int64_t exponent) {
    if (!out.empty()) out += ' ';
    out += name;
    if (exponent != 1) out += fmt::format("^{}", exponent);
  };
  for (const Syllable& s : e.word) {
    std::int64_t shown = s.exponent;
    // Finite factors print the shorter of the two representatives.
    const std::int64_t m = factor_orders_[s.factor];
    if (m != kInfiniteOrder && shown > m / 2) shown -= m;
    emit(factor_names_[s.factor], shown);
  }
  for (std::size_t i = 0; i < e.central.size(); ++i) {
    if (e.central[i] != 0) emit(central_names_[i], e.central[i]);
  }
  return out;
}

}  // namespace orbi
