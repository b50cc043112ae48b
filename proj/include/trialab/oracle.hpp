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

// Brute-force reference computations. Nothing here shares a code path with
// the fast routines it is used to check.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "trialab/altmap.hpp"
#include "trialab/binfun.hpp"
#include "trialab/reduce.hpp"
#include "trialab/transform.hpp"

namespace trialab::oracle {

/// Explicit M(mu)^{(x) m} times v, entry by entry.
inline RawVector dense_transform(const RawVector& v, Complex mu) {
  const MuMatrix m = m_matrix(mu);
  const std::size_t n = v.size();
  std::vector<Complex> out(n, Complex{});
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      Complex entry{1.0, 0.0};
      for (std::size_t i = 0; i < v.m(); ++i) {
        const std::size_t bit = element_bit(v.m(), i);
        entry *= m.entries[(x & bit) ? 1 : 0][(y & bit) ? 1 : 0];
      }
      out[x] += entry * v[y];
    }
  }
  return RawVector(v.m(), std::move(out));
}

/// Every XOR of a subset of rows.
inline std::set<std::uint64_t> brute_rowspace(const std::vector<std::uint64_t>& rows) {
  std::set<std::uint64_t> out;
  for (std::size_t pick = 0; pick < (std::size_t{1} << rows.size()); ++pick) {
    std::uint64_t v = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (pick >> r & 1U) v ^= rows[r];
    }
    out.insert(v);
  }
  return out;
}

inline std::set<std::uint64_t> orthogonal_complement(const std::set<std::uint64_t>& space, std::size_t cols) {
  std::set<std::uint64_t> out;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << cols); ++x) {
    bool orthogonal = true;
    for (std::uint64_t y : space) {
      if (std::popcount(x & y) % 2 != 0) {
        orthogonal = false;
        break;
      }
    }
    if (orthogonal) out.insert(x);
  }
  return out;
}

inline RawVector indicator(const std::set<std::uint64_t>& space, std::size_t cols) {
  std::vector<Complex> values(std::size_t{1} << cols, Complex{});
  for (std::uint64_t v : space) values[v] = Complex{1.0, 0.0};
  return RawVector(cols, std::move(values));
}

inline std::size_t brute_rank(const std::vector<std::uint64_t>& rows) {
  return static_cast<std::size_t>(std::bit_width(brute_rowspace(rows).size()) - 1);
}

/// Rows with column `col` (of `cols`) removed.
inline std::vector<std::uint64_t> delete_column(const std::vector<std::uint64_t>& rows, std::size_t cols,
                                                std::size_t col) {
  const std::size_t low_width = cols - 1 - col;
  std::vector<std::uint64_t> out;
  for (std::uint64_t r : rows) {
    const std::uint64_t low = r & ((std::uint64_t{1} << low_width) - 1);
    const std::uint64_t high = r >> (low_width + 1);
    out.push_back((high << low_width) | low);
  }
  return out;
}

/// Column matroid loop: the column is zero.
inline bool is_loop(const std::vector<std::uint64_t>& rows, std::size_t cols, std::size_t col) {
  const std::uint64_t bit = std::uint64_t{1} << (cols - 1 - col);
  for (std::uint64_t r : rows) {
    if (r & bit) return false;
  }
  return true;
}

/// Column matroid coloop: deleting the column drops the rank.
inline bool is_coloop(const std::vector<std::uint64_t>& rows, std::size_t cols, std::size_t col) {
  return brute_rank(delete_column(rows, cols, col)) < brute_rank(rows);
}

struct Graph {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  /// Vertex-edge incidence rows over GF(2); loops give zero columns.
  std::vector<std::uint64_t> incidence_rows() const {
    const std::size_t m = edges.size();
    std::vector<std::uint64_t> rows(vertices, 0);
    for (std::size_t j = 0; j < m; ++j) {
      const auto [a, b] = edges[j];
      if (a == b) continue;
      rows[a] ^= std::uint64_t{1} << (m - 1 - j);
      rows[b] ^= std::uint64_t{1} << (m - 1 - j);
    }
    return rows;
  }

  /// Edge sets meeting every cycle evenly: the complement of the cutset space.
  std::set<std::uint64_t> circuit_space() const {
    return orthogonal_complement(brute_rowspace(incidence_rows()), edges.size());
  }
};

/// Every multigraph (loops allowed) on `vertices` vertices with `edges`
/// edges, edges listed in non-decreasing order.
inline std::vector<Graph> small_graphs(std::size_t vertices, std::size_t edges) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t a = 0; a < vertices; ++a) {
    for (std::size_t b = a; b < vertices; ++b) slots.emplace_back(a, b);
  }
  std::vector<Graph> out;
  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (pick.size() == edges) {
      Graph g{vertices, {}};
      for (std::size_t s : pick) g.edges.push_back(slots[s]);
      out.push_back(std::move(g));
      return;
    }
    for (std::size_t s = from; s < slots.size(); ++s) {
      pick.push_back(s);
      self(self, s);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// Reduction through the successor-permutation algebra. With A = l^{-1},
/// B = r and C = r^{-1} l (so A B C = id), the 1-, w- and w^2-reductions
/// splice e out of {A, B}, {A, C} and {B, C} respectively.
inline EdgePermutations splice_reduce(const EdgePermutations& p, std::size_t e, ReductionKind kind) {
  const std::size_t n = p.labels.size();
  std::vector<std::size_t> right_inv(n);
  for (std::size_t x = 0; x < n; ++x) right_inv[p.right[x]] = x;
  std::vector<std::size_t> c(n);
  for (std::size_t x = 0; x < n; ++x) c[x] = right_inv[p.left[x]];

  auto splice = [&](const std::vector<std::size_t>& perm) {
    std::vector<std::size_t> out(n);
    for (std::size_t x = 0; x < n; ++x) out[x] = perm[x] == e ? perm[e] : perm[x];
    return out;
  };
  auto drop = [&](const std::vector<std::size_t>& perm) {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < n; ++x) {
      if (x == e) continue;
      out.push_back(perm[x] > e ? perm[x] - 1 : perm[x]);
    }
    return out;
  };
  auto invert = [](const std::vector<std::size_t>& perm) {
    std::vector<std::size_t> out(perm.size());
    for (std::size_t x = 0; x < perm.size(); ++x) out[perm[x]] = x;
    return out;
  };
  auto compose = [](const std::vector<std::size_t>& outer, const std::vector<std::size_t>& inner) {
    std::vector<std::size_t> out(inner.size());
    for (std::size_t x = 0; x < inner.size(); ++x) out[x] = outer[inner[x]];
    return out;
  };

  EdgePermutations out;
  for (std::size_t x = 0; x < n; ++x) {
    if (x != e) out.labels.push_back(p.labels[x]);
  }
  const auto left = drop(splice(p.left));
  const auto right = drop(splice(p.right));
  const auto in_rot = drop(splice(c));
  switch (kind.exponent()) {
    case 0:  // splice l and r
      out.left = left;
      out.right = right;
      break;
    case 1:  // splice l and C; r = l C^{-1}
      out.left = left;
      out.right = compose(left, invert(in_rot));
      break;
    default:  // splice r and C; l = r C
      out.right = right;
      out.left = compose(right, in_rot);
      break;
  }
  return out;
}

}  // namespace trialab::oracle
