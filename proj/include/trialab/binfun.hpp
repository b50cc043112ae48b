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
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "trialab/error.hpp"
#include "trialab/gf2.hpp"
#include "trialab/scalar.hpp"

namespace trialab {

inline constexpr std::size_t kMaxDimension = 24;

inline std::size_t checked_length(std::size_t m) {
  if (m > kMaxDimension) {
    throw Error(ErrorKind::DimensionMismatch,
                "ground set of size " + std::to_string(m) + " exceeds " + std::to_string(kMaxDimension));
  }
  return std::size_t{1} << m;
}

/// Bit weight of element i in a subset index over an m-element ground set.
/// Element e_0 is the most significant bit.
constexpr std::size_t element_bit(std::size_t m, std::size_t i) { return std::size_t{1} << (m - 1 - i); }

inline std::vector<std::string> default_labels(std::size_t m) {
  std::vector<std::string> labels;
  labels.reserve(m);
  for (std::size_t i = 0; i < m; ++i) labels.push_back("e" + std::to_string(i));
  return labels;
}

/// A 2^m complex vector indexed by subsets, with no constraint on its
/// empty-set entry. Transform and raw minor outputs live here.
class RawVector {
 public:
  RawVector() : m_(0), values_{Complex{1.0, 0.0}} {}

  RawVector(std::size_t m, std::vector<Complex> values) : m_(m), values_(std::move(values)) {
    if (values_.size() != checked_length(m)) {
      throw Error(ErrorKind::WrongLength, "expected " + std::to_string(checked_length(m)) + " values, got " +
                                              std::to_string(values_.size()));
    }
  }

  std::size_t m() const noexcept { return m_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const Complex> values() const noexcept { return values_; }
  std::vector<Complex>& mutable_values() noexcept { return values_; }
  const Complex& operator[](std::size_t index) const { return values_[index]; }

  double max_abs() const {
    double out = 0.0;
    for (const auto& v : values_) out = std::max(out, std::abs(v));
    return out;
  }

 private:
  std::size_t m_;
  std::vector<Complex> values_;
};

/// A function on the subsets of an m-element ground set whose empty-set
/// value is exactly 1. Immutable once built.
class BinaryFunction {
 public:
  /// The dimension-0 unit function.
  BinaryFunction() : raw_(), labels_() {}

  /// Strict constructor: the empty-set entry must already be 1 within tol.
  static BinaryFunction make(std::size_t m, std::vector<Complex> values, double tol = kDefaultTol) {
    RawVector raw(m, std::move(values));
    if (std::abs(raw[0] - Complex{1.0, 0.0}) > tol) {
      throw Error(ErrorKind::EmptySetNotOne, "empty-set entry is not 1");
    }
    raw.mutable_values()[0] = Complex{1.0, 0.0};
    return BinaryFunction(std::move(raw), default_labels(m));
  }

  /// Divides through by the empty-set entry.
  static BinaryFunction normalize(const RawVector& raw, double tol = kDefaultTol) {
    const Complex c = raw[0];
    if (std::abs(c) < tol) throw Error(ErrorKind::NormalizationError, "empty-set entry vanishes");
    std::vector<Complex> values(raw.values().begin(), raw.values().end());
    for (auto& v : values) v /= c;
    values[0] = Complex{1.0, 0.0};
    return BinaryFunction(RawVector(raw.m(), std::move(values)), default_labels(raw.m()));
  }

  BinaryFunction with_labels(std::vector<std::string> labels) const {
    if (labels.size() != m()) throw Error(ErrorKind::WrongLength, "label count differs from ground-set size");
    return BinaryFunction(raw_, std::move(labels));
  }

  std::size_t m() const noexcept { return raw_.m(); }
  std::size_t size() const noexcept { return raw_.size(); }
  std::span<const Complex> values() const noexcept { return raw_.values(); }
  const Complex& operator[](std::size_t index) const { return raw_[index]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const RawVector& raw() const noexcept { return raw_; }
  operator const RawVector&() const noexcept { return raw_; }  // NOLINT(google-explicit-constructor)

 private:
  BinaryFunction(RawVector raw, std::vector<std::string> labels) : raw_(std::move(raw)), labels_(std::move(labels)) {}

  RawVector raw_;
  std::vector<std::string> labels_;
};

struct BitSequence {
  std::vector<std::uint8_t> bits;

  std::size_t size() const noexcept { return bits.size(); }
  bool operator==(const BitSequence&) const = default;

  /// Sequence of k bits whose index is `index`.
  static BitSequence from_index(std::size_t index, std::size_t k) {
    BitSequence out;
    out.bits.resize(k);
    for (std::size_t i = 0; i < k; ++i) out.bits[i] = (index >> (k - 1 - i)) & 1U;
    return out;
  }
};

/// Sum of g_i * 2^(k-1-i).
inline std::size_t subset_index(const BitSequence& g) {
  std::size_t out = 0;
  for (auto b : g.bits) out = (out << 1) | (b & 1U);
  return out;
}

/// G:i<-b, the sequence with b inserted before position i.
inline BitSequence insert_bit(const BitSequence& g, std::size_t i, std::uint8_t b) {
  if (i > g.size()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "insert position " + std::to_string(i) + " beyond length " + std::to_string(g.size()));
  }
  BitSequence out = g;
  out.bits.insert(out.bits.begin() + static_cast<std::ptrdiff_t>(i), static_cast<std::uint8_t>(b & 1U));
  return out;
}

/// Index form of insert_bit: the (k+1)-bit index of G:i<-b where G has k bits.
constexpr std::size_t insert_bit_index(std::size_t g, std::size_t k, std::size_t i, std::size_t b) {
  const std::size_t low_width = k - i;
  const std::size_t low = g & ((std::size_t{1} << low_width) - 1);
  const std::size_t high = g >> low_width;
  return (((high << 1) | b) << low_width) | low;
}

/// max_k |a_k - c b_k| for the best c fixed on the largest entry of b, or
/// +inf when exactly one of the two vectors is zero.
inline double proportionality_residual(const RawVector& a, const RawVector& b) {
  if (a.m() != b.m()) throw Error(ErrorKind::DimensionMismatch, "vectors of different dimension");
  std::size_t pivot = 0;
  for (std::size_t k = 1; k < b.size(); ++k) {
    if (std::abs(b[k]) > std::abs(b[pivot])) pivot = k;
  }
  const double b_max = std::abs(b[pivot]);
  const double a_max = a.max_abs();
  if (b_max == 0.0) return a_max == 0.0 ? 0.0 : HUGE_VAL;
  if (a_max == 0.0) return HUGE_VAL;
  const Complex c = a[pivot] / b[pivot];
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - c * b[k]));
  return worst;
}

/// a ~ b: a = c b for some nonzero c, within tol scaled by the larger of 1
/// and |a|_inf.
inline bool proportional(const RawVector& a, const RawVector& b, double tol = kDefaultTol) {
  const double residual = proportionality_residual(a, b);
  return residual <= tol * std::max(1.0, a.max_abs());
}

inline bool approx_equal(const RawVector& a, const RawVector& b, double tol = kDefaultTol) {
  if (a.m() != b.m()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (std::abs(a[k] - b[k]) > tol) return false;
  }
  return true;
}

/// (f (x) g)(X u Y) = f(X) g(Y); f's elements come first.
inline BinaryFunction tensor(const BinaryFunction& f, const BinaryFunction& g) {
  const std::size_t m = f.m() + g.m();
  std::vector<Complex> values(checked_length(m));
  for (std::size_t x = 0; x < f.size(); ++x) {
    for (std::size_t y = 0; y < g.size(); ++y) values[(x << g.m()) | y] = f[x] * g[y];
  }
  std::vector<std::string> labels = f.labels();
  labels.insert(labels.end(), g.labels().begin(), g.labels().end());
  return BinaryFunction::make(m, std::move(values)).with_labels(std::move(labels));
}

inline BinaryFunction tensor_power(const BinaryFunction& f, std::size_t k) {
  BinaryFunction out;
  for (std::size_t i = 0; i < k; ++i) out = tensor(out, f);
  return out.with_labels(default_labels(out.m()));
}

/// Indicator of the GF(2) rowspace of `matrix` over its columns.
inline BinaryFunction rowspace_indicator(const gf2::Matrix& matrix) {
  std::vector<Complex> values(checked_length(matrix.cols), Complex{0.0, 0.0});
  for (std::uint64_t v : gf2::span_of(matrix.rows)) values[v] = Complex{1.0, 0.0};
  return BinaryFunction::make(matrix.cols, std::move(values));
}

/// The ultraloop's function (1, sqrt(2)-1).
inline BinaryFunction ultraloop_function() {
  return BinaryFunction::make(1, {Complex{1.0, 0.0}, Complex{kUltraloopValue, 0.0}});
}

}  // namespace trialab
