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
#include <string>
#include <vector>

#include "trialab/binfun.hpp"
#include "trialab/error.hpp"
#include "trialab/scalar.hpp"
#include "trialab/transform.hpp"

namespace trialab {

inline bool is_minor_pole(Complex mu) { return std::abs(mu - Complex{kMinorPole, 0.0}) <= 1e-12; }

/// lambda(mu) = (1 + mu) / (sqrt2 + 1 - (sqrt2 - 1) mu). The denominator is
/// written as 2 + (sqrt2 - 1)(1 - mu) so that lambda(1) = 1 exactly.
inline Complex lambda(Complex mu) {
  if (is_minor_pole(mu)) throw Error(ErrorKind::PoleError, "lambda has a pole at mu = 3 + 2 sqrt 2");
  return (1.0 + mu) / (2.0 + (kSqrt2 - 1.0) * (1.0 - mu));
}

/// Minor by element `element` with parameter `mu`.
struct MinorSpec {
  std::size_t element = 0;
  Complex mu{1.0, 0.0};
};

/// (I^{(x)i} (x) (1 lambda) (x) I^{(x)(m-i-1)}) v, before normalisation.
inline RawVector raw_minor(const RawVector& v, std::size_t element, Complex mu) {
  if (v.m() == 0 || element >= v.m()) {
    throw Error(ErrorKind::IndexOutOfRange, "element " + std::to_string(element) + " not in ground set of size " +
                                                std::to_string(v.m()));
  }
  const Complex weight = lambda(mu);
  const std::size_t k = v.m() - 1;
  std::vector<Complex> out(std::size_t{1} << k);
  for (std::size_t g = 0; g < out.size(); ++g) {
    out[g] = v[insert_bit_index(g, k, element, 0)] + weight * v[insert_bit_index(g, k, element, 1)];
  }
  return RawVector(k, std::move(out));
}

/// f minor[mu] e_i, normalised so its empty-set entry is 1.
inline BinaryFunction take_minor(const BinaryFunction& f, const MinorSpec& spec, double tol = kDefaultTol) {
  const RawVector raw = raw_minor(f, spec.element, spec.mu);
  if (std::abs(raw[0]) < tol) {
    throw Error(ErrorKind::NormalizationError,
                "minor by element " + std::to_string(spec.element) + " exists only projectively");
  }
  std::vector<std::string> labels = f.labels();
  labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(spec.element));
  return BinaryFunction::normalize(raw, tol).with_labels(std::move(labels));
}

/// Takes the two minors in both orders and compares the results entrywise.
inline bool minors_commute_check(const BinaryFunction& f, const MinorSpec& first, const MinorSpec& second,
                                 double tol = kDefaultTol) {
  if (first.element == second.element) {
    throw Error(ErrorKind::InvalidArgument, "commutation needs two distinct elements");
  }
  auto shifted = [](MinorSpec spec, std::size_t removed) {
    if (spec.element > removed) --spec.element;
    return spec;
  };
  const BinaryFunction a = take_minor(take_minor(f, first, tol), shifted(second, first.element), tol);
  const BinaryFunction b = take_minor(take_minor(f, second, tol), shifted(first, second.element), tol);
  return approx_equal(a, b, tol);
}

/// (L^[mu] f) minor[nu] e_i ~ L^[mu] (f minor[mu nu] e_i).
inline bool transform_minor_check(const BinaryFunction& f, Complex mu, Complex nu, std::size_t element,
                                  double tol = kDefaultTol) {
  const RawVector transformed = transform(f, mu);
  const double scale = std::max(1.0, transformed.max_abs());
  if (std::abs(transformed[0]) < tol * scale) {
    throw Error(ErrorKind::NormalizationError, "transformed function has a vanishing empty-set entry");
  }
  const RawVector lhs = raw_minor(transformed, element, nu);
  const RawVector inner = raw_minor(f, element, mu * nu);
  if (std::abs(lhs[0]) < tol * scale || std::abs(inner[0]) < tol * std::max(1.0, inner.max_abs())) {
    throw Error(ErrorKind::NormalizationError, "a minor in the interchange exists only projectively");
  }
  const RawVector rhs = transform(inner, mu);
  return proportional(lhs, rhs, tol);
}

namespace detail {

inline bool is_zero_one_valued(const RawVector& v) {
  return std::all_of(v.values().begin(), v.values().end(), [](const Complex& z) {
    return z.imag() == 0.0 && (z.real() == 0.0 || z.real() == 1.0);
  });
}

}  // namespace detail

/// e_i is degenerate iff f_{G:i<-1} f_{0:i<-0} = f_{G:i<-0} f_{0:i<-1} for every G.
/// Exact for {0,1}-valued inputs, otherwise relative to max|f|^2.
inline bool is_degenerate(const BinaryFunction& f, std::size_t element, double tol = 1e-8) {
  if (f.m() == 0 || element >= f.m()) {
    throw Error(ErrorKind::IndexOutOfRange, "element " + std::to_string(element) + " not in ground set");
  }
  const std::size_t k = f.m() - 1;
  const Complex base0 = f[insert_bit_index(0, k, element, 0)];
  const Complex base1 = f[insert_bit_index(0, k, element, 1)];
  const bool exact = detail::is_zero_one_valued(f);
  const double scale = f.raw().max_abs();
  const double bound = tol * scale * scale;
  for (std::size_t g = 0; g < (std::size_t{1} << k); ++g) {
    const Complex lhs = f[insert_bit_index(g, k, element, 1)] * base0;
    const Complex rhs = f[insert_bit_index(g, k, element, 0)] * base1;
    if (exact ? lhs != rhs : std::abs(lhs - rhs) > bound) return false;
  }
  return true;
}

/// Checks both sides of the reduction biconditional:
///   f minor[mu1] e_i = f minor[mu2] e_i = u
///     <=>  f_{G:i<-b} = f_{0:i<-b} u_G for all G, b.
/// Returns true iff the two sides agree.
inline bool degenerate_reduction_check(const BinaryFunction& f, const BinaryFunction& u, std::size_t element,
                                       Complex mu1, Complex mu2, double tol = kDefaultTol) {
  if (mu1 == mu2) throw Error(ErrorKind::InvalidArgument, "minor parameters must be distinct");
  if (f.m() == 0 || u.m() + 1 != f.m()) throw Error(ErrorKind::DimensionMismatch, "u must have dimension m-1");
  const bool minors_equal = approx_equal(take_minor(f, {element, mu1}, tol), u, tol) &&
                            approx_equal(take_minor(f, {element, mu2}, tol), u, tol);
  const std::size_t k = u.m();
  bool product_form = true;
  for (std::size_t g = 0; g < u.size() && product_form; ++g) {
    for (std::size_t b = 0; b < 2; ++b) {
      const Complex lhs = f[insert_bit_index(g, k, element, b)];
      const Complex rhs = f[insert_bit_index(0, k, element, b)] * u[g];
      if (std::abs(lhs - rhs) > tol * std::max(1.0, f.raw().max_abs())) {
        product_form = false;
        break;
      }
    }
  }
  return minors_equal == product_form;
}

}  // namespace trialab
