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

#include <gtest/gtest.h>

#include "common/error.hpp"
#include "oracles/suites.hpp"

namespace orbi {
namespace {

TEST(Normalize, FreeReduction) {
  const Group g(GroupSpec::free(2));
  EXPECT_TRUE(g.normalize("a a⁻¹").is_identity());
  EXPECT_TRUE(g.normalize("a^-1 b b^-1 a").is_identity());
  EXPECT_EQ(g.format(g.normalize("a b b^-1 a")), "a^2");
}

TEST(Normalize, CyclicRelator) {
  const Group g(GroupSpec::free_product_cyclic({2, 3}));
  EXPECT_TRUE(g.normalize("b b b").is_identity());
  EXPECT_TRUE(g.normalize("a a").is_identity());
  EXPECT_EQ(g.normalize("b^2"), g.normalize("b^-1"));
}

TEST(Normalize, AbelianCommutes) {
  const Group g(GroupSpec::free_abelian(2));
  EXPECT_EQ(g.format(g.normalize("y x y")), "x y^2");
  EXPECT_EQ(g.normalize("x y"), g.normalize("y x"));
}

TEST(Normalize, ProductWithZCentral) {
  const Group g(GroupSpec::product_with_z(GroupSpec::free(2)));
  EXPECT_EQ(g.normalize("t a"), g.normalize("a t"));
  EXPECT_NE(g.normalize("a b"), g.normalize("b a"));
  EXPECT_EQ(g.basis_letters(), (std::vector<std::string>{"a", "b", "t"}));
}

TEST(Normalize, Idempotent) {
  const Group g(GroupSpec::free_product_cyclic({2, 3, kInfiniteOrder}));
  const Element e = g.normalize("a b c^-2 b b a");
  EXPECT_EQ(g.normalize(g.format(e)), e);
}

TEST(Normalize, WordTimesInverseIsIdentity) {
  const Group g(GroupSpec::product_with_z(GroupSpec::free(2)));
  const Element w = g.normalize("a b^-1 t^3 a");
  EXPECT_TRUE(g.multiply(w, g.inverse(w)).is_identity());
}

TEST(Normalize, UnknownLabelIsNamed) {
  const Group g(GroupSpec::free(2));
  try {
    g.normalize("a z");
    FAIL() << "expected rejection";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownGenerator);
    EXPECT_NE(std::string(e.what()).find("'z'"), std::string::npos);
  }
}

TEST(Normalize, HomomorphismOnRandomPairs) {
  const auto r = oracle::suite_group(5, 2'500);  // 4 groups x 2500 = 10^4 pairs
  EXPECT_TRUE(r.passed) << r.detail;
  EXPECT_EQ(r.cases, 10'000u);
}

TEST(GroupSpec, CustomLettersAndDuplicates) {
  const Group g(GroupSpec::free(2).with_letters({"u", "v"}));
  EXPECT_EQ(g.format(g.normalize("u v u^-1")), "u v u^-1");
  EXPECT_THROW(Group(GroupSpec::free(2).with_letters({"u", "u"})), Error);
  EXPECT_THROW(Group(GroupSpec::free(2).with_letters({"u"})), Error);
}

TEST(GroupSpec, InvalidKinds) {
  EXPECT_THROW(Group(GroupSpec::free(0)), Error);
  EXPECT_THROW(Group(GroupSpec::free_product_cyclic({1})), Error);
  EXPECT_THROW(Group(GroupSpec::free_product_cyclic({})), Error);
}

TEST(GroupSpec, ZLetterAvoidsCollisions) {
  const Group g(GroupSpec::product_with_z(GroupSpec::free(2).with_letters({"t", "s"})));
  EXPECT_EQ(g.basis_letters(), (std::vector<std::string>{"t", "s", "t2"}));
}

}  // namespace
}  // namespace orbi
