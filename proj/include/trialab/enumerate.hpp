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

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "trialab/altmap.hpp"
#include "trialab/error.hpp"

namespace trialab {

inline constexpr std::size_t kDefaultEnumerationCap = 4;
inline constexpr std::size_t kHardEnumerationCap = 5;

enum class GenerationStrategy {
  /// Vertex degree profiles with alternating slots, then every pairing of
  /// tail slots with head slots into edges.
  RotationFirst,
  /// Every pair (left successor, right successor) of permutations.
  SuccessorPairs,
};

struct CatalogEntry {
  std::size_t components = 0;
  std::vector<std::size_t> genus_profile;  // ascending
  bool self_trial = false;

  auto operator<=>(const CatalogEntry&) const = default;
};

/// All alternating dimaps with k edges up to isomorphism, as canonical
/// representatives ordered by canonical form.
struct Catalog {
  std::size_t k = 0;
  std::vector<AlternatingDimap> maps;
  std::vector<CanonicalForm> forms;
  std::vector<CatalogEntry> entries;
  std::map<CatalogEntry, std::size_t> counts;

  std::size_t size() const noexcept { return maps.size(); }

  /// Index of the member isomorphic to g, if any.
  std::optional<std::size_t> find(const AlternatingDimap& g) const {
    const auto it = std::lower_bound(forms.begin(), forms.end(), canonical_form(g));
    if (it == forms.end() || *it != canonical_form(g)) return std::nullopt;
    return static_cast<std::size_t>(it - forms.begin());
  }
};

namespace detail {

inline void partitions(std::size_t remaining, std::size_t largest, std::vector<std::size_t>& current,
                       std::vector<std::vector<std::size_t>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t part = std::min(remaining, largest); part >= 1; --part) {
    current.push_back(part);
    partitions(remaining - part, part, current, out);
    current.pop_back();
  }
}

inline std::vector<std::string> edge_labels(std::size_t k) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back("e" + std::to_string(i));
  return labels;
}

inline std::vector<AlternatingDimap> generate_rotation_first(std::size_t k) {
  std::vector<AlternatingDimap> out;
  std::vector<std::vector<std::size_t>> profiles;
  std::vector<std::size_t> current;
  partitions(k, k, current, profiles);
  for (const auto& profile : profiles) {
    // Tail slot j is dart 2j, head slot q is dart 2q+1.
    std::vector<std::vector<int>> vertices;
    int next_slot = 0;
    for (std::size_t indegree : profile) {
      std::vector<int> rot;
      for (std::size_t s = 0; s < indegree; ++s) {
        rot.push_back(2 * next_slot);
        rot.push_back(2 * next_slot + 1);
        ++next_slot;
      }
      vertices.push_back(std::move(rot));
    }
    std::vector<int> pairing(k);
    std::iota(pairing.begin(), pairing.end(), 0);
    do {
      DimapSpec spec;
      spec.vertices = vertices;
      for (std::size_t j = 0; j < k; ++j) {
        spec.edges.push_back({"e" + std::to_string(j), static_cast<int>(2 * j), 2 * pairing[j] + 1});
      }
      if (validate(spec).empty()) out.push_back(AlternatingDimap::build(spec));
    } while (std::next_permutation(pairing.begin(), pairing.end()));
  }
  return out;
}

inline std::vector<AlternatingDimap> generate_successor_pairs(std::size_t k) {
  std::vector<AlternatingDimap> out;
  std::vector<std::size_t> left(k);
  std::iota(left.begin(), left.end(), 0);
  do {
    std::vector<std::size_t> right(k);
    std::iota(right.begin(), right.end(), 0);
    do {
      out.push_back(AlternatingDimap::from_permutations({edge_labels(k), left, right}));
    } while (std::next_permutation(right.begin(), right.end()));
  } while (std::next_permutation(left.begin(), left.end()));
  return out;
}

}  // namespace detail

inline CatalogEntry describe(const AlternatingDimap& g) {
  CatalogEntry entry;
  const auto comps = components(g);
  entry.components = comps.size();
  for (const auto& c : comps) entry.genus_profile.push_back(genus(c));
  std::sort(entry.genus_profile.begin(), entry.genus_profile.end());
  entry.self_trial = isomorphic(trial(g).map, g);
  return entry;
}

inline Catalog enumerate_dimaps(std::size_t k, std::size_t cap = kDefaultEnumerationCap,
                                GenerationStrategy strategy = GenerationStrategy::RotationFirst) {
  if (k > cap || k > kHardEnumerationCap) {
    throw Error(ErrorKind::CapExceeded, "k = " + std::to_string(k) + " exceeds cap " +
                                            std::to_string(std::min(cap, kHardEnumerationCap)));
  }
  const auto generated = strategy == GenerationStrategy::RotationFirst ? detail::generate_rotation_first(k)
                                                                       : detail::generate_successor_pairs(k);
  std::map<CanonicalForm, AlternatingDimap> unique;
  for (const auto& g : generated) {
    const auto form = canonical_form(g);
    if (!unique.contains(form)) unique.emplace(form, canonical_representative(g));
  }
  Catalog catalog;
  catalog.k = k;
  for (auto& [form, g] : unique) {
    catalog.forms.push_back(form);
    catalog.entries.push_back(describe(g));
    ++catalog.counts[catalog.entries.back()];
    catalog.maps.push_back(std::move(g));
  }
  return catalog;
}

inline std::vector<AlternatingDimap> self_trial_members(const Catalog& catalog) {
  std::vector<AlternatingDimap> out;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (catalog.entries[i].self_trial) out.push_back(catalog.maps[i]);
  }
  return out;
}

}  // namespace trialab
