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
#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "trialab/error.hpp"

namespace trialab {

/// One directed edge of an unvalidated dimap description.
struct DimapEdge {
  std::string label;
  int tail = 0;
  int head = 0;
};

/// Raw description of an alternating dimap: edges with their two darts, and
/// for each vertex the clockwise cyclic order of its darts. May be invalid.
struct DimapSpec {
  std::vector<DimapEdge> edges;
  std::vector<std::vector<int>> vertices;
};

/// One human-readable line per violated invariant; empty means valid.
using ValidationReport = std::vector<std::string>;

enum class FaceOrientation { Clockwise, Anticlockwise };

/// A face as a cyclic sequence of darts plus its edges in their common
/// direction. Anticlockwise faces are traced along tail darts, clockwise
/// faces along head darts.
struct Face {
  std::vector<int> darts;
  std::vector<std::size_t> edges;
  FaceOrientation orientation = FaceOrientation::Clockwise;
};

/// Labeled edges plus the left- and right-successor permutations. This
/// determines the dimap up to dart renaming.
struct EdgePermutations {
  std::vector<std::string> labels;
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
};

struct Component {
  std::vector<std::size_t> edges;
  std::vector<std::size_t> vertices;
  std::size_t faces = 0;
};

namespace detail {

inline std::vector<std::size_t> inverse(const std::vector<std::size_t>& p) {
  std::vector<std::size_t> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = i;
  return out;
}

inline std::size_t count_cycles(const std::vector<std::size_t>& p) {
  std::vector<bool> seen(p.size(), false);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = p[j]) seen[j] = true;
  }
  return cycles;
}

inline bool is_permutation_of_range(const std::vector<std::size_t>& p) {
  std::vector<bool> seen(p.size(), false);
  for (std::size_t x : p) {
    if (x >= p.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

}  // namespace detail

inline ValidationReport validate(const DimapSpec& spec) {
  ValidationReport report;
  std::set<std::string> labels;
  std::map<int, std::pair<std::size_t, bool>> dart_edge;  // dart -> (edge, is_head)
  for (std::size_t e = 0; e < spec.edges.size(); ++e) {
    const auto& edge = spec.edges[e];
    if (edge.label.empty()) report.push_back("edge " + std::to_string(e) + " has an empty label");
    if (!labels.insert(edge.label).second) report.push_back("duplicate edge label '" + edge.label + "'");
    for (auto [dart, is_head] : {std::pair{edge.tail, false}, std::pair{edge.head, true}}) {
      if (dart < 0) {
        report.push_back("edge '" + edge.label + "' uses negative dart " + std::to_string(dart));
      } else if (!dart_edge.emplace(dart, std::pair{e, is_head}).second) {
        report.push_back("dart " + std::to_string(dart) + " belongs to more than one edge end");
      }
    }
  }
  std::map<int, std::size_t> dart_vertex;
  for (std::size_t v = 0; v < spec.vertices.size(); ++v) {
    const auto& rot = spec.vertices[v];
    if (rot.empty()) report.push_back("vertex " + std::to_string(v) + " is isolated");
    for (int dart : rot) {
      if (!dart_vertex.emplace(dart, v).second) {
        report.push_back("dart " + std::to_string(dart) + " appears in more than one rotation slot");
      }
      if (!dart_edge.contains(dart)) {
        report.push_back("vertex " + std::to_string(v) + " lists dart " + std::to_string(dart) +
                         " which belongs to no edge");
      }
    }
  }
  for (const auto& [dart, owner] : dart_edge) {
    if (!dart_vertex.contains(dart)) {
      report.push_back("dart " + std::to_string(dart) + " of edge '" + spec.edges[owner.first].label +
                       "' is in no vertex rotation");
    }
  }
  if (!report.empty()) return report;

  for (std::size_t v = 0; v < spec.vertices.size(); ++v) {
    const auto& rot = spec.vertices[v];
    for (std::size_t k = 0; k < rot.size(); ++k) {
      const int a = rot[k];
      const int b = rot[(k + 1) % rot.size()];
      if (dart_edge[a].second == dart_edge[b].second) {
        report.push_back("vertex " + std::to_string(v) + " breaks alternation between darts " + std::to_string(a) +
                         " and " + std::to_string(b));
      }
    }
  }
  if (!report.empty()) return report;

  // Face tracing: from a dart, cross its edge, then step clockwise.
  std::map<int, int> next_cw;
  for (const auto& rot : spec.vertices) {
    for (std::size_t k = 0; k < rot.size(); ++k) next_cw[rot[k]] = rot[(k + 1) % rot.size()];
  }
  auto opposite = [&](int dart) {
    const auto& edge = spec.edges[dart_edge[dart].first];
    return dart == edge.tail ? edge.head : edge.tail;
  };
  std::set<int> seen;
  std::size_t face = 0;
  for (const auto& [start, owner] : dart_edge) {
    if (seen.contains(start)) continue;
    const bool kind = owner.second;
    for (int d = start; !seen.contains(d); d = next_cw[opposite(d)]) {
      seen.insert(d);
      if (dart_edge[d].second != kind) {
        report.push_back("face " + std::to_string(face) + " through dart " + std::to_string(start) +
                         " is not uniformly directed");
        break;
      }
    }
    ++face;
  }
  return report;
}

/// A validated alternating dimap. Edge i owns tail dart 2i and head dart 2i+1;
/// vertices hold the clockwise rotation of their darts.
class AlternatingDimap {
 public:
  AlternatingDimap() = default;

  static constexpr int tail_dart(std::size_t edge) { return static_cast<int>(2 * edge); }
  static constexpr int head_dart(std::size_t edge) { return static_cast<int>(2 * edge + 1); }
  static constexpr std::size_t edge_of(int dart) { return static_cast<std::size_t>(dart) / 2; }
  static constexpr bool is_head(int dart) { return (dart & 1) != 0; }
  static constexpr int opposite(int dart) { return dart ^ 1; }

  /// Validates `spec` and renumbers its darts; throws InvalidMap with the
  /// validation report on failure.
  static AlternatingDimap build(const DimapSpec& spec) {
    const ValidationReport report = validate(spec);
    if (!report.empty()) {
      std::string joined;
      for (const auto& line : report) joined += (joined.empty() ? "" : "; ") + line;
      throw Error(ErrorKind::InvalidMap, joined);
    }
    std::map<int, int> renumber;
    std::vector<std::string> labels;
    for (std::size_t e = 0; e < spec.edges.size(); ++e) {
      renumber[spec.edges[e].tail] = tail_dart(e);
      renumber[spec.edges[e].head] = head_dart(e);
      labels.push_back(spec.edges[e].label);
    }
    std::vector<std::vector<int>> rotation;
    for (const auto& rot : spec.vertices) {
      std::vector<int> mapped;
      for (int d : rot) mapped.push_back(renumber.at(d));
      rotation.push_back(std::move(mapped));
    }
    return AlternatingDimap(std::move(labels), std::move(rotation));
  }

  /// Builds the map whose successors are the given permutations. Darts at a
  /// vertex run h(e) -> t(l(e)) and t(e) -> h(r^{-1}(e)) clockwise.
  static AlternatingDimap from_permutations(const EdgePermutations& perms) {
    const std::size_t n = perms.labels.size();
    if (perms.left.size() != n || perms.right.size() != n || !detail::is_permutation_of_range(perms.left) ||
        !detail::is_permutation_of_range(perms.right)) {
      throw Error(ErrorKind::InvalidMap, "successor arrays are not permutations of the edge set");
    }
    const auto right_inv = detail::inverse(perms.right);
    std::vector<int> sigma(2 * n);
    for (std::size_t e = 0; e < n; ++e) {
      sigma[static_cast<std::size_t>(head_dart(e))] = tail_dart(perms.left[e]);
      sigma[static_cast<std::size_t>(tail_dart(e))] = head_dart(right_inv[e]);
    }
    std::vector<bool> seen(2 * n, false);
    std::vector<std::vector<int>> rotation;
    for (std::size_t d = 0; d < 2 * n; ++d) {
      if (seen[d]) continue;
      std::vector<int> cycle;
      for (auto x = static_cast<int>(d); !seen[static_cast<std::size_t>(x)]; x = sigma[static_cast<std::size_t>(x)]) {
        seen[static_cast<std::size_t>(x)] = true;
        cycle.push_back(x);
      }
      rotation.push_back(std::move(cycle));
    }
    return AlternatingDimap(perms.labels, std::move(rotation));
  }

  /// Trusted constructor for internal rewrites; darts must already follow the
  /// 2i / 2i+1 convention. Throws InternalInvariantViolation otherwise.
  static AlternatingDimap from_rotation(std::vector<std::string> labels, std::vector<std::vector<int>> rotation) {
    AlternatingDimap out(std::move(labels), std::move(rotation));
    const ValidationReport report = trialab::validate(out.spec());
    if (!report.empty()) throw Error(ErrorKind::InternalInvariantViolation, report.front());
    return out;
  }

  DimapSpec spec() const {
    DimapSpec out;
    for (std::size_t e = 0; e < labels_.size(); ++e) out.edges.push_back({labels_[e], tail_dart(e), head_dart(e)});
    out.vertices = rotation_;
    return out;
  }

  std::size_t num_edges() const noexcept { return labels_.size(); }
  std::size_t num_vertices() const noexcept { return rotation_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<std::vector<int>>& rotation() const noexcept { return rotation_; }

  std::optional<std::size_t> find_edge(const std::string& label) const {
    const auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
  }

  std::size_t edge_index(const std::string& label) const {
    if (auto e = find_edge(label)) return *e;
    throw Error(ErrorKind::UnknownEdge, "no edge labelled '" + label + "'");
  }

  std::size_t vertex_of(int dart) const { return vertex_of_[static_cast<std::size_t>(dart)]; }
  int next_cw(int dart) const { return next_[static_cast<std::size_t>(dart)]; }
  int prev_cw(int dart) const { return prev_[static_cast<std::size_t>(dart)]; }
  std::size_t tail_vertex(std::size_t e) const { return vertex_of(tail_dart(e)); }
  std::size_t head_vertex(std::size_t e) const { return vertex_of(head_dart(e)); }
  bool is_loop(std::size_t e) const { return tail_vertex(e) == head_vertex(e); }

  /// Next edge around e's anticlockwise face.
  std::size_t left_successor_index(std::size_t e) const { return edge_of(next_cw(head_dart(e))); }
  /// Next edge around e's clockwise face.
  std::size_t right_successor_index(std::size_t e) const { return edge_of(prev_cw(head_dart(e))); }
  /// Next in-edge clockwise around e's head: r^{-1}(l(e)).
  std::size_t next_in_edge_index(std::size_t e) const { return edge_of(next_cw(next_cw(head_dart(e)))); }

  EdgePermutations permutations() const {
    EdgePermutations out{labels_, {}, {}};
    for (std::size_t e = 0; e < num_edges(); ++e) {
      out.left.push_back(left_successor_index(e));
      out.right.push_back(right_successor_index(e));
    }
    return out;
  }

 private:
  AlternatingDimap(std::vector<std::string> labels, std::vector<std::vector<int>> rotation)
      : labels_(std::move(labels)), rotation_(std::move(rotation)) {
    const std::size_t darts = 2 * labels_.size();
    vertex_of_.assign(darts, 0);
    next_.assign(darts, -1);
    prev_.assign(darts, -1);
    std::size_t placed = 0;
    for (std::size_t v = 0; v < rotation_.size(); ++v) {
      const auto& rot = rotation_[v];
      if (rot.empty()) throw Error(ErrorKind::InternalInvariantViolation, "empty vertex rotation");
      for (std::size_t k = 0; k < rot.size(); ++k) {
        const auto d = static_cast<std::size_t>(rot[k]);
        if (rot[k] < 0 || d >= darts || next_[d] != -1) {
          throw Error(ErrorKind::InternalInvariantViolation, "dart " + std::to_string(rot[k]) + " misplaced");
        }
        vertex_of_[d] = v;
        next_[d] = rot[(k + 1) % rot.size()];
        prev_[d] = rot[(k + rot.size() - 1) % rot.size()];
        ++placed;
      }
    }
    if (placed != darts) throw Error(ErrorKind::InternalInvariantViolation, "some dart is in no rotation");
  }

  std::vector<std::string> labels_;
  std::vector<std::vector<int>> rotation_;
  std::vector<std::size_t> vertex_of_;
  std::vector<int> next_;
  std::vector<int> prev_;
};

/// Re-checks every invariant of an already-built map.
inline ValidationReport validate(const AlternatingDimap& g) { return validate(g.spec()); }

/// Orbits of the face-tracing permutation d -> next_cw(opposite(d)).
inline std::vector<Face> faces(const AlternatingDimap& g) {
  std::vector<Face> out;
  const std::size_t darts = 2 * g.num_edges();
  std::vector<bool> seen(darts, false);
  for (std::size_t start = 0; start < darts; ++start) {
    if (seen[start]) continue;
    Face face;
    for (auto d = static_cast<int>(start); !seen[static_cast<std::size_t>(d)];
         d = g.next_cw(AlternatingDimap::opposite(d))) {
      seen[static_cast<std::size_t>(d)] = true;
      face.darts.push_back(d);
      face.edges.push_back(AlternatingDimap::edge_of(d));
    }
    if (AlternatingDimap::is_head(static_cast<int>(start))) {
      // Head-dart orbits walk their face backwards.
      face.orientation = FaceOrientation::Clockwise;
      std::reverse(face.edges.begin() + 1, face.edges.end());
    } else {
      face.orientation = FaceOrientation::Anticlockwise;
    }
    out.push_back(std::move(face));
  }
  return out;
}

inline std::string left_successor(const AlternatingDimap& g, const std::string& label) {
  return g.labels()[g.left_successor_index(g.edge_index(label))];
}

inline std::string right_successor(const AlternatingDimap& g, const std::string& label) {
  return g.labels()[g.right_successor_index(g.edge_index(label))];
}

/// Connected components, ordered by smallest edge index.
inline std::vector<Component> components(const AlternatingDimap& g) {
  const std::size_t n = g.num_edges();
  std::vector<std::size_t> comp(n, n);
  std::vector<Component> out;
  for (std::size_t start = 0; start < n; ++start) {
    if (comp[start] != n) continue;
    const std::size_t id = out.size();
    Component c;
    std::vector<std::size_t> stack{start};
    comp[start] = id;
    while (!stack.empty()) {
      const std::size_t e = stack.back();
      stack.pop_back();
      c.edges.push_back(e);
      for (std::size_t next : {g.left_successor_index(e), g.right_successor_index(e)}) {
        if (comp[next] == n) {
          comp[next] = id;
          stack.push_back(next);
        }
      }
    }
    std::sort(c.edges.begin(), c.edges.end());
    std::set<std::size_t> vertices;
    for (std::size_t e : c.edges) vertices.insert(g.head_vertex(e));
    c.vertices.assign(vertices.begin(), vertices.end());
    out.push_back(std::move(c));
  }
  const auto perms = g.permutations();
  for (auto& c : out) {
    std::set<std::size_t> left_cycles;
    std::set<std::size_t> right_cycles;
    for (std::size_t e : c.edges) {
      std::size_t lmin = e;
      for (std::size_t x = perms.left[e]; x != e; x = perms.left[x]) lmin = std::min(lmin, x);
      std::size_t rmin = e;
      for (std::size_t x = perms.right[e]; x != e; x = perms.right[x]) rmin = std::min(rmin, x);
      left_cycles.insert(lmin);
      right_cycles.insert(rmin);
    }
    c.faces = left_cycles.size() + right_cycles.size();
  }
  return out;
}

/// Genus from V - E + F = 2 - 2g.
inline std::size_t genus(const Component& c) {
  const auto chi = static_cast<long>(c.vertices.size()) - static_cast<long>(c.edges.size()) +
                   static_cast<long>(c.faces);
  if (chi > 2 || (2 - chi) % 2 != 0) {
    throw Error(ErrorKind::NonIntegerGenus, "Euler characteristic " + std::to_string(chi));
  }
  return static_cast<std::size_t>((2 - chi) / 2);
}

inline std::size_t genus(const AlternatingDimap& g, std::size_t component) {
  const auto comps = components(g);
  if (component >= comps.size()) throw Error(ErrorKind::IndexOutOfRange, "no such component");
  return genus(comps[component]);
}

inline std::size_t total_genus(const AlternatingDimap& g) {
  std::size_t out = 0;
  for (const auto& c : components(g)) out += genus(c);
  return out;
}

/// G^w together with the edge correspondence e -> e^w (label to label).
struct TrialResult {
  AlternatingDimap map;
  std::map<std::string, std::string> edge_image;
};

/// Trial: vertices of G^w are the clockwise faces of G. With v = r^{-1} l the
/// in-edge rotation, the triple (l^{-1}, r, v) becomes (v, l^{-1}, r), so
/// e^w runs from the clockwise face of l(e) to the clockwise face of e.
inline TrialResult trial(const AlternatingDimap& g) {
  const auto perms = g.permutations();
  const std::size_t n = g.num_edges();
  EdgePermutations out{perms.labels, std::vector<std::size_t>(n), detail::inverse(perms.left)};
  const auto right_inv = detail::inverse(perms.right);
  std::vector<std::size_t> in_rotation(n);
  for (std::size_t e = 0; e < n; ++e) in_rotation[e] = right_inv[perms.left[e]];
  out.left = detail::inverse(in_rotation);
  TrialResult result{AlternatingDimap::from_permutations(out), {}};
  for (const auto& label : perms.labels) result.edge_image.emplace(label, label);
  return result;
}

/// Applies trial `times` (mod 3) times.
inline AlternatingDimap trial_power(const AlternatingDimap& g, std::size_t times) {
  AlternatingDimap out = g;
  for (std::size_t k = 0; k < times % 3; ++k) out = trial(out).map;
  return out;
}

/// Same labels, same successors: a dart bijection preserving rotations,
/// edge pairs and labels exists iff this holds.
inline bool labeled_equal(const AlternatingDimap& g, const AlternatingDimap& h) {
  if (g.num_edges() != h.num_edges()) return false;
  const auto pg = g.permutations();
  std::vector<std::size_t> to_h(g.num_edges());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const auto image = h.find_edge(pg.labels[e]);
    if (!image) return false;
    to_h[e] = *image;
  }
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (h.left_successor_index(to_h[e]) != to_h[pg.left[e]]) return false;
    if (h.right_successor_index(to_h[e]) != to_h[pg.right[e]]) return false;
  }
  return true;
}

/// Lexicographically minimal relabelling code; equal codes iff isomorphic.
struct CanonicalForm {
  std::vector<std::size_t> code;

  auto operator<=>(const CanonicalForm&) const = default;
  bool operator==(const CanonicalForm&) const = default;

  std::string str() const {
    std::string out;
    for (std::size_t x : code) out += (out.empty() ? "" : ".") + std::to_string(x);
    return out;
  }
};

struct CanonicalLabeling {
  CanonicalForm form;
  /// order[k] is the edge of G that receives canonical index k.
  std::vector<std::size_t> order;
};

namespace detail {

/// Breadth-first relabelling of the component containing `start`, following
/// left then right successors. Returns the visit order.
inline std::vector<std::size_t> bfs_order(const EdgePermutations& p, std::size_t start) {
  std::vector<std::size_t> order{start};
  std::map<std::size_t, std::size_t> index{{start, 0}};
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (std::size_t next : {p.left[order[k]], p.right[order[k]]}) {
      if (index.emplace(next, order.size()).second) order.push_back(next);
    }
  }
  return order;
}

inline std::vector<std::size_t> component_code(const EdgePermutations& p, const std::vector<std::size_t>& order) {
  std::map<std::size_t, std::size_t> index;
  for (std::size_t k = 0; k < order.size(); ++k) index[order[k]] = k;
  std::vector<std::size_t> code{order.size()};
  for (std::size_t e : order) {
    code.push_back(index.at(p.left[e]));
    code.push_back(index.at(p.right[e]));
  }
  return code;
}

}  // namespace detail

/// Per component, the minimum code over all start edges; components are
/// then sorted by code.
inline CanonicalLabeling canonical_labeling(const AlternatingDimap& g) {
  const auto perms = g.permutations();
  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> parts;
  for (const auto& comp : components(g)) {
    std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> best;
    for (std::size_t start : comp.edges) {
      auto order = detail::bfs_order(perms, start);
      auto code = detail::component_code(perms, order);
      if (!best || code < best->first) best.emplace(std::move(code), std::move(order));
    }
    parts.push_back(std::move(*best));
  }
  std::sort(parts.begin(), parts.end());
  CanonicalLabeling out;
  out.form.code = {g.num_edges(), parts.size()};
  for (auto& [code, order] : parts) {
    out.form.code.insert(out.form.code.end(), code.begin(), code.end());
    out.order.insert(out.order.end(), order.begin(), order.end());
  }
  return out;
}

inline CanonicalForm canonical_form(const AlternatingDimap& g) { return canonical_labeling(g).form; }

inline bool isomorphic(const AlternatingDimap& g, const AlternatingDimap& h) {
  return g.num_edges() == h.num_edges() && canonical_form(g) == canonical_form(h);
}

/// The map relabelled into canonical order with labels e0, e1, ...
inline AlternatingDimap canonical_representative(const AlternatingDimap& g) {
  const auto labeling = canonical_labeling(g);
  const auto perms = g.permutations();
  const std::size_t n = g.num_edges();
  std::vector<std::size_t> index(n);
  for (std::size_t k = 0; k < n; ++k) index[labeling.order[k]] = k;
  EdgePermutations out{{}, std::vector<std::size_t>(n), std::vector<std::size_t>(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.labels.push_back("e" + std::to_string(k));
    out.left[k] = index[perms.left[labeling.order[k]]];
    out.right[k] = index[perms.right[labeling.order[k]]];
  }
  return AlternatingDimap::from_permutations(out);
}

/// All edge bijections phi: E(G) -> E(H) with phi l_G = l_H phi and
/// phi r_G = r_H phi, up to `limit` of them.
inline std::vector<std::vector<std::size_t>> isomorphisms(const AlternatingDimap& g, const AlternatingDimap& h,
                                                          std::size_t limit = 5040) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t n = g.num_edges();
  if (n != h.num_edges()) return out;
  const auto pg = g.permutations();
  const auto ph = h.permutations();
  const auto comps = components(g);
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> phi(n, kUnset);
  std::vector<bool> used(n, false);

  auto extend = [&](auto&& self, std::size_t comp_index) -> void {
    if (out.size() >= limit) return;
    if (comp_index == comps.size()) {
      out.push_back(phi);
      return;
    }
    const auto order = detail::bfs_order(pg, comps[comp_index].edges.front());
    for (std::size_t target = 0; target < n; ++target) {
      if (used[target]) continue;
      std::vector<std::size_t> assigned;
      bool ok = true;
      phi[order.front()] = target;
      used[target] = true;
      assigned.push_back(order.front());
      for (std::size_t k = 0; k < order.size() && ok; ++k) {
        const std::size_t e = order[k];
        for (auto [ge, he] : {std::pair{pg.left[e], ph.left[phi[e]]}, std::pair{pg.right[e], ph.right[phi[e]]}}) {
          if (phi[ge] == kUnset) {
            if (used[he]) {
              ok = false;
              break;
            }
            phi[ge] = he;
            used[he] = true;
            assigned.push_back(ge);
          } else if (phi[ge] != he) {
            ok = false;
            break;
          }
        }
      }
      if (ok) self(self, comp_index + 1);
      for (std::size_t e : assigned) {
        used[phi[e]] = false;
        phi[e] = kUnset;
      }
    }
  };
  extend(extend, 0);
  return out;
}

/// Disjoint union; clashing labels of `h` get primes appended.
inline AlternatingDimap disjoint_union(const AlternatingDimap& g, const AlternatingDimap& h) {
  std::vector<std::string> labels = g.labels();
  std::set<std::string> taken(labels.begin(), labels.end());
  for (std::string label : h.labels()) {
    while (taken.contains(label)) label += "'";
    taken.insert(label);
    labels.push_back(label);
  }
  std::vector<std::vector<int>> rotation = g.rotation();
  const int offset = 2 * static_cast<int>(g.num_edges());
  for (auto rot : h.rotation()) {
    for (int& d : rot) d += offset;
    rotation.push_back(std::move(rot));
  }
  return AlternatingDimap::from_rotation(std::move(labels), std::move(rotation));
}

inline AlternatingDimap k_copies(const AlternatingDimap& g, std::size_t k) {
  AlternatingDimap out;
  for (std::size_t i = 0; i < k; ++i) out = disjoint_union(out, g);
  return out;
}

/// kC_1 with edges e0 .. e{k-1}.
inline AlternatingDimap ultraloops(std::size_t k) {
  EdgePermutations perms;
  for (std::size_t i = 0; i < k; ++i) {
    perms.labels.push_back("e" + std::to_string(i));
    perms.left.push_back(i);
    perms.right.push_back(i);
  }
  return AlternatingDimap::from_permutations(perms);
}

}  // namespace trialab
