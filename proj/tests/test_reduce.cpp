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

#include <random>

#include "trialab/enumerate.hpp"
#include "trialab/oracle.hpp"
#include "trialab/reduce.hpp"
#include "trialab/suites.hpp"

namespace trialab {
namespace {

using K = ReductionKind;

AlternatingDimap from_perms(std::vector<std::string> labels, std::vector<std::size_t> left,
                            std::vector<std::size_t> right) {
  return AlternatingDimap::from_permutations({std::move(labels), std::move(left), std::move(right)});
}

TEST(ReductionKind, Group) {
  EXPECT_EQ(K::omega() * K::omega(), K::omega2());
  EXPECT_EQ(K::omega() * K::omega2(), K::one());
  EXPECT_EQ(K::omega().inverse(), K::omega2());
  EXPECT_EQ(K::one().inverse(), K::one());
  EXPECT_EQ(K::omega2().name(), "w2");
  EXPECT_LE(std::abs(K::omega().value() - kOmega), 1e-15);
}

TEST(Reduce, UltraloopDisappears) {
  for (auto mu : K::all()) EXPECT_TRUE(reduce(ultraloops(1), "e0", mu).empty());
}

TEST(Reduce, TwoUltraloops) {
  for (auto mu : K::all()) {
    for (const char* e : {"e0", "e1"}) EXPECT_TRUE(isomorphic(reduce(ultraloops(2), e, mu), ultraloops(1)));
  }
}

TEST(Reduce, UnknownEdge) {
  try {
    reduce(ultraloops(2), "nope", K::one());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownEdge);
  }
  EXPECT_THROW(reduce(ultraloops(2), std::size_t{2}, K::one()), Error);
}

TEST(Reduce, ContractNonLoopMergesEndpoints) {
  // Directed 2-cycle a: x->y, b: y->x.
  const AlternatingDimap g = AlternatingDimap::build({{{"a", 0, 1}, {"b", 2, 3}}, {{0, 3}, {1, 2}}});
  ASSERT_EQ(g.num_vertices(), 2U);
  const AlternatingDimap h = reduce(g, "a", K::one());
  EXPECT_EQ(h.num_vertices(), 1U);
  EXPECT_TRUE(isomorphic(h, ultraloops(1)));
}

TEST(Reduce, ResultValidatesEverywhere) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    const AlternatingDimap g = suites::random_dimap(rng, 1 + rng() % 6);
    for (const auto& label : g.labels()) {
      for (auto mu : K::all()) {
        const AlternatingDimap h = reduce(g, label, mu);
        EXPECT_TRUE(validate(h).empty());
        EXPECT_EQ(h.num_edges() + 1, g.num_edges());
        EXPECT_FALSE(h.find_edge(label).has_value());
      }
    }
  }
}

TEST(Reduce, MatchesSuccessorSplicing) {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 200; ++t) {
    const AlternatingDimap g = suites::random_dimap(rng, 1 + rng() % 7);
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      for (auto mu : K::all()) {
        const AlternatingDimap expected =
            AlternatingDimap::from_permutations(oracle::splice_reduce(g.permutations(), e, mu));
        EXPECT_TRUE(labeled_equal(reduce(g, e, mu), expected)) << "edge " << e << " kind " << mu.name();
      }
    }
  }
}

TEST(Reduce, SuccessorsSkipTheRemovedEdge) {
  const AlternatingDimap g = from_perms({"a", "b", "c"}, {1, 2, 0}, {2, 0, 1});
  const AlternatingDimap h = reduce(g, "b", K::one());
  EXPECT_EQ(left_successor(h, "a"), "c");
  EXPECT_EQ(right_successor(h, "c"), "a");
}

TEST(TrialMinor, Examples) {
  const AlternatingDimap g = from_perms({"a", "b", "c"}, {1, 2, 0}, {2, 0, 1});
  EXPECT_TRUE(trial_minor_check(g, "a", K::one(), K::omega()));
  EXPECT_TRUE(trial_minor_check(g, "b", K::omega(), K::omega2()));
}

TEST(TrialMinor, ExhaustiveUpToFourEdges) {
  for (std::size_t k = 1; k <= 4; ++k) {
    for (const auto& g : enumerate_dimaps(k).maps) {
      for (const auto& label : g.labels()) {
        for (auto mu : K::all()) {
          for (auto nu : K::all()) EXPECT_TRUE(trial_minor_check(g, label, mu, nu));
        }
      }
    }
  }
}

TEST(Degenerate, Examples) {
  EXPECT_TRUE(is_degenerate_edge(ultraloops(1), "e0"));
  const AlternatingDimap omega_loop = from_perms({"a", "b"}, {0, 1}, {1, 0});
  EXPECT_TRUE(is_degenerate_edge(omega_loop, "a"));
  const AlternatingDimap plain = from_perms({"a", "b", "c"}, {1, 2, 0}, {2, 0, 1});
  EXPECT_FALSE(is_degenerate_edge(plain, "a"));
}

TEST(Degenerate, EveryTwoEdgeEdgeIsATriloop) {
  // Two permutations of two letters always fix e or agree on it.
  for (const auto& g : enumerate_dimaps(2).maps) {
    for (const auto& label : g.labels()) {
      EXPECT_TRUE(classify_edge(g, label).is_triloop);
      EXPECT_TRUE(is_degenerate_edge(g, label));
    }
  }
}

TEST(Classify, Ultraloop) {
  const EdgeClassification c = classify_edge(ultraloops(1), "e0");
  EXPECT_TRUE(c.is_ultraloop);
  EXPECT_TRUE(c.is_1loop && c.is_omega_loop && c.is_omega2_loop);
  EXPECT_FALSE(c.is_proper_triloop);
  EXPECT_FALSE(c.is_proper_semiloop);
}

TEST(Classify, OneLoopNeedNotBeALoop) {
  const AlternatingDimap g = from_perms({"a", "b"}, {1, 0}, {1, 0});
  const std::size_t a = g.edge_index("a");
  EXPECT_FALSE(g.is_loop(a));
  const EdgeClassification c = classify_edge(g, "a");
  EXPECT_TRUE(c.is_1loop);
  EXPECT_FALSE(c.is_omega_loop);
  EXPECT_TRUE(c.is_proper_triloop);
}

TEST(Classify, ProperOmegaLoop) {
  const AlternatingDimap g = from_perms({"a", "b"}, {0, 1}, {1, 0});
  const EdgeClassification c = classify_edge(g, "a");
  EXPECT_TRUE(c.is_omega_loop);
  EXPECT_FALSE(c.is_ultraloop);
  EXPECT_TRUE(c.is_proper_triloop);
}

TEST(Classify, TriloopIffAllReductionsAgree) {
  for (std::size_t k = 1; k <= 4; ++k) {
    for (const auto& g : enumerate_dimaps(k).maps) {
      for (const auto& label : g.labels()) {
        EXPECT_EQ(classify_edge(g, label).is_triloop, is_degenerate_edge(g, label));
      }
    }
  }
}

TEST(Classify, TrialPermutesLoopKinds) {
  // Trial sends 1-loops to w-loops, w-loops to w2-loops and w2-loops to 1-loops.
  std::mt19937_64 rng(33);
  for (int t = 0; t < 100; ++t) {
    const AlternatingDimap g = suites::random_dimap(rng, 1 + rng() % 5);
    const AlternatingDimap h = trial(g).map;
    for (const auto& label : g.labels()) {
      const EdgeClassification a = classify_edge(g, label);
      const EdgeClassification b = classify_edge(h, label);
      EXPECT_EQ(a.is_1loop, b.is_omega_loop);
      EXPECT_EQ(a.is_omega_loop, b.is_omega2_loop);
      EXPECT_EQ(a.is_omega2_loop, b.is_1loop);
    }
  }
}

TEST(Classify, UnknownEdge) { EXPECT_THROW(classify_edge(ultraloops(1), "x"), Error); }

TEST(Commutativity, UltraloopsCommute) {
  for (std::size_t k = 0; k <= 4; ++k) EXPECT_TRUE(totally_reduction_commutative(ultraloops(k)));
}

TEST(Commutativity, SmallMapsCommute) {
  for (std::size_t k = 0; k <= 2; ++k) {
    for (const auto& g : enumerate_dimaps(k).maps) {
      EXPECT_TRUE(totally_reduction_commutative(g));
      EXPECT_FALSE(find_noncommuting_pair(g).has_value());
    }
  }
}

TEST(Commutativity, WitnessAtFourEdges) {
  std::size_t found = 0;
  for (std::size_t k = 3; k <= 4; ++k) {
    for (const auto& g : enumerate_dimaps(k).maps) {
      const auto w = find_noncommuting_pair(g);
      if (!w) continue;
      ++found;
      const auto ab = apply_reductions(g, {{w->first_edge, w->first_kind}, {w->second_edge, w->second_kind}});
      const auto ba = apply_reductions(g, {{w->second_edge, w->second_kind}, {w->first_edge, w->first_kind}});
      EXPECT_FALSE(labeled_equal(ab, ba));
      EXPECT_FALSE(totally_reduction_commutative(g));
    }
  }
  EXPECT_GT(found, 0U);
}

TEST(Commutativity, CapExceeded) {
  try {
    totally_reduction_commutative(ultraloops(7));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
}

}  // namespace
}  // namespace trialab
