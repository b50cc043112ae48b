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

#include "trialab/altmap.hpp"
#include "trialab/enumerate.hpp"
#include "trialab/reduce.hpp"
#include "trialab/suites.hpp"

namespace trialab {
namespace {

AlternatingDimap c1() { return AlternatingDimap::build({{{"e0", 0, 1}}, {{0, 1}}}); }

AlternatingDimap from_perms(std::vector<std::string> labels, std::vector<std::size_t> left,
                            std::vector<std::size_t> right) {
  return AlternatingDimap::from_permutations({std::move(labels), std::move(left), std::move(right)});
}

std::vector<AlternatingDimap> small_maps() {
  std::vector<AlternatingDimap> out;
  for (std::size_t k = 0; k <= 3; ++k) {
    for (const auto& g : enumerate_dimaps(k).maps) out.push_back(g);
  }
  return out;
}

TEST(Validate, Ultraloop) { EXPECT_TRUE(validate(DimapSpec{{{"e0", 0, 1}}, {{0, 1}}}).empty()); }

TEST(Validate, EmptyMap) { EXPECT_TRUE(validate(DimapSpec{}).empty()); }

TEST(Validate, AdjacentHeadsBreakAlternation) {
  const ValidationReport r = validate(DimapSpec{{{"a", 0, 1}, {"b", 2, 3}}, {{0, 2, 1, 3}}});
  ASSERT_FALSE(r.empty());
}

TEST(Validate, StructuralErrors) {
  EXPECT_FALSE(validate(DimapSpec{{{"a", 0, 1}, {"a", 2, 3}}, {{0, 1, 2, 3}}}).empty());
  EXPECT_FALSE(validate(DimapSpec{{{"a", 0, 1}}, {{0, 1}, {}}}).empty());
  EXPECT_FALSE(validate(DimapSpec{{{"a", 0, 1}}, {{0}}}).empty());
  EXPECT_FALSE(validate(DimapSpec{{{"a", 0, 0}}, {{0, 0}}}).empty());
  EXPECT_FALSE(validate(DimapSpec{{{"a", 0, 1}}, {{0, 1, 7}}}).empty());
}

TEST(Build, RejectsInvalidAndRenumbers) {
  try {
    AlternatingDimap::build(DimapSpec{{{"a", 0, 1}, {"b", 2, 3}}, {{0, 2, 1, 3}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidMap);
  }
  const AlternatingDimap g = AlternatingDimap::build({{{"x", 17, 4}}, {{4, 17}}});
  EXPECT_TRUE(labeled_equal(g, AlternatingDimap::build({{{"x", 0, 1}}, {{0, 1}}})));
}

TEST(Faces, Ultraloop) {
  const auto f = faces(c1());
  ASSERT_EQ(f.size(), 2U);
  EXPECT_NE(f[0].orientation, f[1].orientation);
  EXPECT_EQ(f[0].edges.size(), 1U);
  EXPECT_EQ(f[1].edges.size(), 1U);
}

TEST(Faces, UltraloopsHaveTwoEach) {
  for (std::size_t k = 0; k <= 5; ++k) EXPECT_EQ(faces(ultraloops(k)).size(), 2 * k);
}

TEST(Faces, EveryEdgeOnOneFaceOfEachColour) {
  for (const auto& g : small_maps()) {
    std::vector<int> cw(g.num_edges(), 0);
    std::vector<int> acw(g.num_edges(), 0);
    for (const auto& f : faces(g)) {
      for (std::size_t e : f.edges) ++(f.orientation == FaceOrientation::Clockwise ? cw : acw)[e];
    }
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      EXPECT_EQ(cw[e], 1);
      EXPECT_EQ(acw[e], 1);
    }
  }
}

TEST(Faces, AnticlockwiseFacesFollowLeftSuccessors) {
  for (const auto& g : small_maps()) {
    for (const auto& f : faces(g)) {
      for (std::size_t k = 0; k < f.edges.size(); ++k) {
        const std::size_t e = f.edges[k];
        const std::size_t next = f.edges[(k + 1) % f.edges.size()];
        if (f.orientation == FaceOrientation::Anticlockwise) {
          EXPECT_EQ(g.left_successor_index(e), next);
        } else {
          EXPECT_EQ(g.right_successor_index(e), next);
        }
      }
    }
  }
}

TEST(Successors, Examples) {
  EXPECT_EQ(left_successor(c1(), "e0"), "e0");
  EXPECT_EQ(right_successor(c1(), "e0"), "e0");
  const AlternatingDimap omega_loop = from_perms({"a", "b"}, {0, 1}, {1, 0});
  EXPECT_EQ(left_successor(omega_loop, "a"), "a");
  const AlternatingDimap face2 = from_perms({"a", "b"}, {1, 0}, {0, 1});
  EXPECT_EQ(left_successor(face2, "a"), "b");
  EXPECT_EQ(left_successor(face2, "b"), "a");
  try {
    left_successor(c1(), "zz");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownEdge);
  }
}

TEST(Successors, RoundTripThroughPermutations) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 50; ++t) {
    const AlternatingDimap g = suites::random_dimap(rng, 1 + rng() % 6);
    EXPECT_TRUE(validate(g).empty());
    const auto p = g.permutations();
    EXPECT_TRUE(labeled_equal(AlternatingDimap::from_permutations(p), g));
  }
}

TEST(Components, Examples) {
  EXPECT_EQ(components(c1()).size(), 1U);
  EXPECT_EQ(genus(c1(), 0), 0U);
  const AlternatingDimap u4 = ultraloops(4);
  EXPECT_EQ(components(u4).size(), 4U);
  EXPECT_EQ(total_genus(u4), 0U);
  EXPECT_THROW(genus(c1(), 1), Error);
}

TEST(Components, TwoEdgeMapsArePlanar) {
  // V - E + F = 2 - 2g with E = 2 and F >= 2 leaves no room for genus 1.
  for (const auto& g : enumerate_dimaps(2).maps) EXPECT_EQ(total_genus(g), 0U);
  for (auto rot : {std::vector<int>{0, 1, 2, 3}, std::vector<int>{0, 3, 2, 1}}) {
    EXPECT_EQ(total_genus(AlternatingDimap::build({{{"a", 0, 1}, {"b", 2, 3}}, {rot}})), 0U);
  }
}

TEST(Components, ThreeLoopsOnOneVertexCanHaveGenusOne) {
  const AlternatingDimap g = AlternatingDimap::build({{{"a", 0, 1}, {"b", 2, 3}, {"c", 4, 5}}, {{0, 3, 4, 1, 2, 5}}});
  EXPECT_EQ(g.num_vertices(), 1U);
  EXPECT_EQ(faces(g).size(), 2U);
  EXPECT_EQ(total_genus(g), 1U);
}

TEST(Components, EulerFormulaAcrossCatalog) {
  for (std::size_t k = 1; k <= 4; ++k) {
    for (const auto& g : enumerate_dimaps(k).maps) {
      const auto comps = components(g);
      long genus_sum = 0;
      for (const auto& c : comps) genus_sum += static_cast<long>(genus(c));
      const long chi = static_cast<long>(g.num_vertices()) - static_cast<long>(g.num_edges()) +
                       static_cast<long>(faces(g).size());
      EXPECT_EQ(chi, 2 * static_cast<long>(comps.size()) - 2 * genus_sum);
    }
  }
}

TEST(Trial, Ultraloops) {
  const TrialResult t = trial(c1());
  EXPECT_TRUE(labeled_equal(t.map, c1()));
  EXPECT_EQ(t.edge_image.at("e0"), "e0");
  EXPECT_TRUE(labeled_equal(trial(ultraloops(4)).map, ultraloops(4)));
}

TEST(Trial, CubeIsIdentity) {
  for (const auto& g : small_maps()) EXPECT_TRUE(labeled_equal(trial_power(g, 3), g));
  std::mt19937_64 rng(22);
  for (int t = 0; t < 100; ++t) {
    const AlternatingDimap g = suites::random_dimap(rng, 5);
    EXPECT_TRUE(labeled_equal(trial(trial(trial(g).map).map).map, g));
  }
}

TEST(Trial, VerticesAreClockwiseFaces) {
  for (const auto& g : small_maps()) {
    std::size_t clockwise = 0;
    for (const auto& f : faces(g)) clockwise += f.orientation == FaceOrientation::Clockwise ? 1 : 0;
    EXPECT_EQ(trial(g).map.num_vertices(), clockwise);
  }
}

TEST(Trial, ResultValidates) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 50; ++t) {
    const AlternatingDimap g = suites::random_dimap(rng, 1 + rng() % 6);
    EXPECT_TRUE(validate(trial(g).map).empty());
    EXPECT_EQ(total_genus(trial(g).map), total_genus(g));
  }
}

TEST(Isomorphism, Examples) {
  const AlternatingDimap g = from_perms({"a", "b", "c"}, {1, 2, 0}, {2, 0, 1});
  const AlternatingDimap renamed = from_perms({"x", "y", "z"}, {1, 2, 0}, {2, 0, 1});
  EXPECT_TRUE(isomorphic(g, renamed));
  EXPECT_FALSE(labeled_equal(g, renamed));
  EXPECT_FALSE(isomorphic(ultraloops(2), c1()));
  const Catalog two = enumerate_dimaps(2);
  std::set<CanonicalForm> forms(two.forms.begin(), two.forms.end());
  EXPECT_EQ(forms.size(), 4U);
}

TEST(Isomorphism, SameDartsRenamedIsLabeledEqual) {
  const AlternatingDimap a = AlternatingDimap::build({{{"p", 0, 1}, {"q", 2, 3}}, {{0, 3}, {2, 1}}});
  const AlternatingDimap b = AlternatingDimap::build({{{"p", 10, 11}, {"q", 20, 21}}, {{21, 10}, {11, 20}}});
  EXPECT_TRUE(labeled_equal(a, b));
}

TEST(Isomorphism, CanonicalFormIgnoresEdgeOrder) {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng() % 6;
    const AlternatingDimap g = suites::random_dimap(rng, n);
    auto p = g.permutations();
    std::vector<std::size_t> shuffle(n);
    std::iota(shuffle.begin(), shuffle.end(), 0);
    std::shuffle(shuffle.begin(), shuffle.end(), rng);
    EdgePermutations q{std::vector<std::string>(n), std::vector<std::size_t>(n), std::vector<std::size_t>(n)};
    for (std::size_t e = 0; e < n; ++e) {
      q.labels[shuffle[e]] = p.labels[e];
      q.left[shuffle[e]] = shuffle[p.left[e]];
      q.right[shuffle[e]] = shuffle[p.right[e]];
    }
    const AlternatingDimap h = AlternatingDimap::from_permutations(q);
    EXPECT_TRUE(labeled_equal(g, h));
    EXPECT_EQ(canonical_form(g), canonical_form(h));
    EXPECT_FALSE(isomorphisms(g, h).empty());
  }
}

TEST(Isomorphism, CountsAutomorphisms) {
  EXPECT_EQ(isomorphisms(ultraloops(3), ultraloops(3)).size(), 6U);
  EXPECT_EQ(isomorphisms(c1(), c1()).size(), 1U);
  EXPECT_TRUE(isomorphisms(c1(), ultraloops(2)).empty());
}

TEST(Union, Examples) {
  EXPECT_TRUE(k_copies(c1(), 0).empty());
  const AlternatingDimap three = k_copies(c1(), 3);
  EXPECT_EQ(three.num_edges(), 3U);
  EXPECT_EQ(components(three).size(), 3U);
  EXPECT_TRUE(isomorphic(three, ultraloops(3)));
  const AlternatingDimap g = from_perms({"a", "b", "c"}, {1, 2, 0}, {2, 0, 1});
  EXPECT_TRUE(labeled_equal(disjoint_union(g, AlternatingDimap{}), g));
  EXPECT_EQ(disjoint_union(c1(), c1()).labels(), (std::vector<std::string>{"e0", "e0'"}));
  EXPECT_TRUE(validate(disjoint_union(g, g)).empty());
}

}  // namespace
}  // namespace trialab
