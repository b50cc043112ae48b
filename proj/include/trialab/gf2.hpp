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
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "trialab/error.hpp"

namespace trialab::gf2 {

/// Dense GF(2) matrix with at most 64 columns. Column j of a row is stored at
/// bit weight 2^(cols-1-j), so a row read as an integer is the subset index of
/// its support.
struct Matrix {
  std::size_t cols = 0;
  std::vector<std::uint64_t> rows;

  static Matrix from_bits(std::size_t cols, const std::vector<std::vector<int>>& bits) {
    if (cols > 64) throw Error(ErrorKind::DimensionMismatch, "GF(2) matrix wider than 64 columns");
    Matrix out{cols, {}};
    for (const auto& row : bits) {
      if (row.size() != cols) throw Error(ErrorKind::WrongLength, "GF(2) row has wrong width");
      std::uint64_t mask = 0;
      for (std::size_t j = 0; j < cols; ++j) {
        if (row[j] & 1) mask |= std::uint64_t{1} << (cols - 1 - j);
      }
      out.rows.push_back(mask);
    }
    return out;
  }

  bool column_bit(std::size_t row, std::size_t col) const {
    return (rows[row] >> (cols - 1 - col)) & 1U;
  }
};

/// Reduced row-echelon basis of the rowspace; each basis row has a distinct
/// leading bit and no other basis row has that bit set.
inline std::vector<std::uint64_t> rowspace_basis(std::span<const std::uint64_t> rows) {
  std::vector<std::uint64_t> basis;
  for (std::uint64_t row : rows) {
    for (std::uint64_t b : basis) {
      if (row & std::bit_floor(b)) row ^= b;
    }
    if (row == 0) continue;
    const std::uint64_t lead = std::bit_floor(row);
    for (auto& b : basis) {
      if (b & lead) b ^= row;
    }
    basis.push_back(row);
  }
  std::sort(basis.begin(), basis.end(), std::greater<>());
  return basis;
}

inline std::size_t rank(std::span<const std::uint64_t> rows) { return rowspace_basis(rows).size(); }

/// All 2^rank vectors of the rowspace, ascending.
inline std::vector<std::uint64_t> span_of(std::span<const std::uint64_t> rows) {
  const auto basis = rowspace_basis(rows);
  std::vector<std::uint64_t> out{0};
  out.reserve(std::size_t{1} << basis.size());
  for (std::uint64_t b : basis) {
    const std::size_t n = out.size();
    for (std::size_t k = 0; k < n; ++k) out.push_back(out[k] ^ b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace trialab::gf2
