// Copyright 2026 The Authors.
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

#include <gtest/gtest.h>

#include "trialab/enumerate.hpp"
#include "trialab/reduce.hpp"

namespace trialab {
namespace {

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_dimaps(0).size(), 1U);
  EXPECT_EQ(enumerate_dimaps(1).size(), 1U);
  EXPECT_EQ(enumerate_dimaps(2).size(), 4U);
  EXPECT_EQ(enumerate_dimaps(3).size(), 11U);
  EXPECT_EQ(enumerate_dimaps(4).size(), 43U);
}

TEST(Enumerate, StrategiesAgree) {
  for (std::size_t k = 0; k <= 4; ++k) {
    const Catalog a = enumerate_dimaps(k, kDefaultEnumerationCap, GenerationStrategy::RotationFirst);
    const Catalog b = enumerate_dimaps(k, kDefaultEnumerationCap, GenerationStrategy::SuccessorPairs);
    EXPECT_EQ(a.forms, b.forms) << k;
  }
}

TEST(Enumerate, MembersArePairwiseNonIsomorphicAndValid) {
  for (std::size_t k = 0; k <= 4; ++k) {
    const Catalog c = enumerate_dimaps(k);
    for (std::size_t i = 0; i < c.size(); ++i) {
      EXPECT_TRUE(validate(c.maps[i]).empty());
      EXPECT_EQ(c.maps[i].num_edges(), k);
      EXPECT_EQ(canonical_form(c.maps[i]), c.forms[i]);
      EXPECT_EQ(c.find(c.maps[i]), std::optional<std::size_t>{i});
      if (i > 0) EXPECT_LT(c.forms[i - 1], c.forms[i]);
    }
  }
}

TEST(Enumerate, ClosedUnderTrialAndReduction) {
  for (std::size_t k = 1; k <= 4; ++k) {
    const Catalog c = enumerate_dimaps(k);
    const Catalog below = enumerate_dimaps(k - 1);
    for (const auto& g : c.maps) {
      EXPECT_TRUE(c.find(trial(g).map).has_value());
      for (std::size_t e = 0; e < k; ++e) {
        for (auto mu : ReductionKind::all()) EXPECT_TRUE(below.find(reduce(g, e, mu)).has_value());
      }
    }
  }
}

TEST(Enumerate, DisjointUnionsAppear) {
  const Catalog three = enumerate_dimaps(3);
  for (const auto& a : enumerate_dimaps(1).maps) {
    for (const auto& b : enumerate_dimaps(2).maps) EXPECT_TRUE(three.find(disjoint_union(a, b)).has_value());
  }
}

TEST(Enumerate, SelfTrialMembers) {
  const auto zero = self_trial_members(enumerate_dimaps(0));
  ASSERT_EQ(zero.size(), 1U);
  EXPECT_TRUE(zero.front().empty());
  const auto one = self_trial_members(enumerate_dimaps(1));
  ASSERT_EQ(one.size(), 1U);
  EXPECT_TRUE(isomorphic(one.front(), ultraloops(1)));
  const auto two = self_trial_members(enumerate_dimaps(2));
  ASSERT_EQ(two.size(), 1U);
  EXPECT_TRUE(isomorphic(two.front(), ultraloops(2)));
  EXPECT_EQ(self_trial_members(enumerate_dimaps(3)).size(), 2U);
  EXPECT_EQ(self_trial_members(enumerate_dimaps(4)).size(), 4U);
}

TEST(Enumerate, SummaryCounts) {
  const Catalog c = enumerate_dimaps(3);
  std::size_t total = 0;
  for (const auto& [entry, n] : c.counts) total += n;
  EXPECT_EQ(total, c.size());
  bool has_torus = false;
  for (const auto& e : c.entries) has_torus = has_torus || (e.components == 1 && e.genus_profile == std::vector<std::size_t>{1});
  EXPECT_TRUE(has_torus);
}

TEST(Enumerate, Caps) {
  try {
    enumerate_dimaps(5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
  EXPECT_THROW(enumerate_dimaps(6, 10), Error);
}

}  // namespace
}  // namespace trialab
