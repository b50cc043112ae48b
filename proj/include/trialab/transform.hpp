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

#include <array>
#include <cmath>
#include <cstddef>
#include <utility>

#include "trialab/binfun.hpp"
#include "trialab/error.hpp"
#include "trialab/scalar.hpp"

namespace trialab {

/// The 2x2 generator M(mu) of the mu-transform family.
///
///   M(mu) = 1/(2 sqrt 2) [ sqrt2+1 + (sqrt2-1) mu    1 - mu                 ]
///                        [ 1 - mu                    sqrt2-1 + (sqrt2+1) mu ]
///
/// M(a) M(b) = M(ab) and det M(mu) = mu, so M(1) is the identity and M(-1) is
/// the normalised Hadamard matrix.
struct MuMatrix {
  Complex mu;
  std::array<std::array<Complex, 2>, 2> entries;

  Complex det() const { return entries[0][0] * entries[1][1] - entries[0][1] * entries[1][0]; }

  std::array<Complex, 2> apply(Complex a, Complex b) const {
    return {entries[0][0] * a + entries[0][1] * b, entries[1][0] * a + entries[1][1] * b};
  }
};

inline MuMatrix m_matrix(Complex mu) {
  const double scale = 1.0 / (2.0 * kSqrt2);
  const Complex one{1.0, 0.0};
  const Complex off = scale * (one - mu);
  return MuMatrix{mu,
                  {{{scale * (kSqrt2 + 1.0 + (kSqrt2 - 1.0) * mu), off},
                    {off, scale * (kSqrt2 - 1.0 + (kSqrt2 + 1.0) * mu)}}}};
}

/// Both eigenvalues of M(mu); they are always 1 and mu.
inline std::array<Complex, 2> m_matrix_eigenvalues(Complex mu) {
  const MuMatrix m = m_matrix(mu);
  const Complex trace = m.entries[0][0] + m.entries[1][1];
  const Complex disc = std::sqrt(trace * trace - 4.0 * m.det());
  return {(trace + disc) / 2.0, (trace - disc) / 2.0};
}

/// Applies M(mu) along one element axis of `values` in place.
inline void apply_axis(std::span<Complex> values, std::size_t m, std::size_t element, const MuMatrix& matrix) {
  const std::size_t stride = element_bit(m, element);
  for (std::size_t block = 0; block < values.size(); block += 2 * stride) {
    for (std::size_t j = block; j < block + stride; ++j) {
      const auto [lo, hi] = matrix.apply(values[j], values[j + stride]);
      values[j] = lo;
      values[j + stride] = hi;
    }
  }
}

/// L^[mu] v = M(mu)^{(x) m} v in O(m 2^m), one axis at a time, e_0 first.
inline RawVector transform(const RawVector& v, Complex mu) {
  RawVector out = v;
  if (mu == Complex{1.0, 0.0}) return out;
  const MuMatrix matrix = m_matrix(mu);
  for (std::size_t i = 0; i < v.m(); ++i) apply_axis(out.mutable_values(), v.m(), i, matrix);
  return out;
}

inline RawVector inverse_transform(const RawVector& v, Complex mu) {
  if (mu == Complex{0.0, 0.0}) throw Error(ErrorKind::SingularTransform, "M(0) is singular");
  return transform(v, Complex{1.0, 0.0} / mu);
}

/// L^[w] f ~ f.
inline bool self_trial(const BinaryFunction& f, double tol = kDefaultTol) {
  return proportional(transform(f, kOmega), f, tol);
}

}  // namespace trialab
