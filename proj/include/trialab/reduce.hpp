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
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "trialab/altmap.hpp"
#include "trialab/error.hpp"
#include "trialab/scalar.hpp"

namespace trialab {

/// mu in {1, w, w^2}, stored as the exponent of w.
class ReductionKind {
 public:
  constexpr ReductionKind() = default;
  static constexpr ReductionKind from_exponent(int k) { return ReductionKind(((k % 3) + 3) % 3); }
  static constexpr ReductionKind one() { return ReductionKind(0); }
  static constexpr ReductionKind omega() { return ReductionKind(1); }
  static constexpr ReductionKind omega2() { return ReductionKind(2); }
  static constexpr std::array<ReductionKind, 3> all() { return {one(), omega(), omega2()}; }

  constexpr int exponent() const noexcept { return exponent_; }
  constexpr ReductionKind operator*(ReductionKind other) const { return from_exponent(exponent_ + other.exponent_); }
  constexpr ReductionKind inverse() const { return from_exponent(-exponent_); }
  constexpr bool operator==(const ReductionKind&) const = default;

  Complex value() const {
    switch (exponent_) {
      case 1: return kOmega;
      case 2: return kOmega2;
      default: return Complex{1.0, 0.0};
    }
  }

  std::string name() const {
    switch (exponent_) {
      case 1: return "w";
      case 2: return "w2";
      default: return "1";
    }
  }

 private:
  constexpr explicit ReductionKind(int exponent) : exponent_(exponent) {}
  int exponent_ = 0;
};

namespace detail {

inline std::size_t position_of(const std::vector<int>& rot, int dart) {
  return static_cast<std::size_t>(std::find(rot.begin(), rot.end(), dart) - rot.begin());
}

/// rot rotated so that `dart` comes first, with `dart` itself dropped.
inline std::vector<int> after(const std::vector<int>& rot, int dart) {
  const std::size_t p = position_of(rot, dart);
  std::vector<int> out;
  for (std::size_t k = 1; k < rot.size(); ++k) out.push_back(rot[(p + k) % rot.size()]);
  return out;
}

inline void erase_dart(std::vector<int>& rot, int dart) { rot.erase(rot.begin() + static_cast<std::ptrdiff_t>(position_of(rot, dart))); }

}  // namespace detail

/// Reduces edge `e` (by index). Rules:
///  * ultraloop: its component disappears;
///  * 1, non-loop: endpoints merge, the tail's rotation after t(e) followed
///    by the head's rotation after h(e);
///  * 1, loop: the vertex splits into the two arcs between t(e) and h(e);
///    an empty arc (e bounds a face of size 1) contributes no vertex;
///  * w (resp. w^2): s = left (resp. right) successor; if s != e, the tail
///    dart of s takes the slot of t(e) and e is removed; otherwise e is
///    simply removed.
/// Vertices left without darts are discarded.
inline AlternatingDimap reduce(const AlternatingDimap& g, std::size_t e, ReductionKind kind) {
  if (e >= g.num_edges()) throw Error(ErrorKind::UnknownEdge, "edge index " + std::to_string(e));
  auto rotation = g.rotation();
  const int te = AlternatingDimap::tail_dart(e);
  const int he = AlternatingDimap::head_dart(e);
  const std::size_t u = g.tail_vertex(e);
  const std::size_t a = g.head_vertex(e);

  if (kind == ReductionKind::one()) {
    if (u != a) {
      std::vector<int> merged = detail::after(rotation[u], te);
      const std::vector<int> rest = detail::after(rotation[a], he);
      merged.insert(merged.end(), rest.begin(), rest.end());
      rotation[u] = std::move(merged);
      rotation[a].clear();
    } else {
      const std::vector<int> around = detail::after(rotation[u], te);
      const std::size_t split = detail::position_of(around, he);
      std::vector<int> first(around.begin(), around.begin() + static_cast<std::ptrdiff_t>(split));
      std::vector<int> second(around.begin() + static_cast<std::ptrdiff_t>(split) + 1, around.end());
      rotation[u] = std::move(first);
      rotation.push_back(std::move(second));
    }
  } else {
    const std::size_t s = kind == ReductionKind::omega() ? g.left_successor_index(e) : g.right_successor_index(e);
    if (s == e) {
      detail::erase_dart(rotation[u], te);
      detail::erase_dart(rotation[u], he);
    } else {
      const int ts = AlternatingDimap::tail_dart(s);
      detail::erase_dart(rotation[a], he);
      detail::erase_dart(rotation[a], ts);
      rotation[u][detail::position_of(rotation[u], te)] = ts;
    }
  }

  std::vector<std::vector<int>> renumbered;
  for (auto& rot : rotation) {
    if (rot.empty()) continue;
    for (int& d : rot) {
      std::size_t edge = AlternatingDimap::edge_of(d);
      if (edge > e) --edge;
      d = static_cast<int>(2 * edge) + (d & 1);
    }
    renumbered.push_back(std::move(rot));
  }
  std::vector<std::string> labels = g.labels();
  labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(e));
  return AlternatingDimap::from_rotation(std::move(labels), std::move(renumbered));
}

inline AlternatingDimap reduce(const AlternatingDimap& g, const std::string& label, ReductionKind kind) {
  return reduce(g, g.edge_index(label), kind);
}

/// G^mu reduced by e^mu with nu, against (G reduced by e with mu nu)^mu.
inline bool trial_minor_check(const AlternatingDimap& g, const std::string& label, ReductionKind mu,
                              ReductionKind nu) {
  g.edge_index(label);
  const auto times = static_cast<std::size_t>(mu.exponent());
  const AlternatingDimap lhs = reduce(trial_power(g, times), label, nu);
  const AlternatingDimap rhs = trial_power(reduce(g, label, mu * nu), times);
  return labeled_equal(lhs, rhs);
}

/// All three reductions of e agree.
inline bool is_degenerate_edge(const AlternatingDimap& g, const std::string& label) {
  const auto one = reduce(g, label, ReductionKind::one());
  const auto w = reduce(g, label, ReductionKind::omega());
  const auto w2 = reduce(g, label, ReductionKind::omega2());
  return labeled_equal(one, w) && labeled_equal(w, w2) && labeled_equal(one, w2);
}

struct EdgeClassification {
  bool is_ultraloop = false;
  bool is_1loop = false;
  bool is_omega_loop = false;
  bool is_omega2_loop = false;
  bool is_triloop = false;
  bool is_proper_triloop = false;
  /// Indexed by ReductionKind exponent: 1-, w-, w^2-semiloop.
  std::array<bool, 3> is_mu_semiloop{};
  bool is_proper_semiloop = false;

  bool is_semiloop(ReductionKind mu) const { return is_mu_semiloop[static_cast<std::size_t>(mu.exponent())]; }
};

/// True iff reducing splits off a component or lowers the total genus.
inline bool reduction_separates(const AlternatingDimap& g, std::size_t e, ReductionKind kind) {
  const AlternatingDimap h = reduce(g, e, kind);
  return components(h).size() > components(g).size() || total_genus(h) < total_genus(g);
}

inline EdgeClassification classify_edge(const AlternatingDimap& g, const std::string& label) {
  const std::size_t e = g.edge_index(label);
  EdgeClassification c;
  c.is_omega_loop = g.left_successor_index(e) == e;
  c.is_omega2_loop = g.right_successor_index(e) == e;
  c.is_1loop = g.next_in_edge_index(e) == e;
  c.is_ultraloop = c.is_omega_loop && c.is_omega2_loop;
  c.is_triloop = c.is_1loop || c.is_omega_loop || c.is_omega2_loop;
  c.is_proper_triloop = c.is_triloop && !c.is_ultraloop;
  c.is_mu_semiloop[0] = g.is_loop(e);
  c.is_mu_semiloop[1] = c.is_omega2_loop || reduction_separates(g, e, ReductionKind::omega2());
  c.is_mu_semiloop[2] = c.is_omega_loop || reduction_separates(g, e, ReductionKind::omega());
  c.is_proper_semiloop = !c.is_triloop && (c.is_mu_semiloop[0] || c.is_mu_semiloop[1] || c.is_mu_semiloop[2]);
  return c;
}

struct ReductionStep {
  std::string edge;
  ReductionKind kind;
};

inline AlternatingDimap apply_reductions(const AlternatingDimap& g, const std::vector<ReductionStep>& steps) {
  AlternatingDimap out = g;
  for (const auto& step : steps) out = reduce(out, step.edge, step.kind);
  return out;
}

/// A pair of reductions on distinct edges whose two orders disagree.
struct NoncommutingPair {
  std::string first_edge;
  ReductionKind first_kind;
  std::string second_edge;
  ReductionKind second_kind;
};

inline std::optional<NoncommutingPair> find_noncommuting_pair(const AlternatingDimap& g) {
  const auto& labels = g.labels();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      for (auto mi : ReductionKind::all()) {
        for (auto mj : ReductionKind::all()) {
          const auto ab = apply_reductions(g, {{labels[i], mi}, {labels[j], mj}});
          const auto ba = apply_reductions(g, {{labels[j], mj}, {labels[i], mi}});
          if (!labeled_equal(ab, ba)) return NoncommutingPair{labels[i], mi, labels[j], mj};
        }
      }
    }
  }
  return std::nullopt;
}

/// Every set of reductions on distinct edges gives one result under every
/// ordering. All orderings are tried, so keep this to small maps.
inline bool totally_reduction_commutative(const AlternatingDimap& g) {
  const std::size_t n = g.num_edges();
  if (n > 6) throw Error(ErrorKind::CapExceeded, "full ordering check limited to 6 edges");
  for (std::size_t subset = 0; subset < (std::size_t{1} << n); ++subset) {
    std::vector<std::size_t> members;
    for (std::size_t e = 0; e < n; ++e) {
      if (subset >> e & 1U) members.push_back(e);
    }
    if (members.size() < 2) continue;
    std::size_t assignments = 1;
    for (std::size_t k = 0; k < members.size(); ++k) assignments *= 3;
    for (std::size_t code = 0; code < assignments; ++code) {
      std::vector<ReductionStep> steps;
      std::size_t rest = code;
      for (std::size_t e : members) {
        steps.push_back({g.labels()[e], ReductionKind::from_exponent(static_cast<int>(rest % 3))});
        rest /= 3;
      }
      const AlternatingDimap reference = apply_reductions(g, steps);
      std::vector<std::size_t> perm(steps.size());
      std::iota(perm.begin(), perm.end(), 0);
      while (std::next_permutation(perm.begin(), perm.end())) {
        std::vector<ReductionStep> ordered;
        for (std::size_t k : perm) ordered.push_back(steps[k]);
        if (!labeled_equal(apply_reductions(g, ordered), reference)) return false;
      }
    }
  }
  return true;
}

}  // namespace trialab
