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

#include "trialab/minor.hpp"
#include "trialab/oracle.hpp"
#include "trialab/suites.hpp"
#include "trialab/transform.hpp"

namespace trialab {
namespace {

using suites::random_function;
using suites::random_mu;

const double u = kUltraloopValue;

BinaryFunction bf(std::size_t m, std::vector<Complex> v) { return BinaryFunction::make(m, std::move(v)); }

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no exception";
  return ErrorKind::InternalInvariantViolation;
}

TEST(Lambda, Values) {
  EXPECT_EQ(lambda(1.0), Complex(1.0));
  EXPECT_EQ(lambda(-1.0), Complex(0.0));
  EXPECT_EQ(kind_of([] { lambda(kMinorPole); }), ErrorKind::PoleError);
  EXPECT_EQ(kind_of([] { lambda(5.828427124746190); }), ErrorKind::PoleError);
  EXPECT_NO_THROW(lambda(5.8284));
}

TEST(TakeMinor, ContractColoop) {
  const BinaryFunction g = take_minor(bf(1, {1.0, 1.0}), {0, -1.0});
  EXPECT_EQ(g.m(), 0U);
  EXPECT_EQ(g[0], Complex(1.0));
}

TEST(TakeMinor, DeleteDigonEdge) {
  EXPECT_TRUE(approx_equal(take_minor(bf(2, {1.0, 0.0, 0.0, 1.0}), {1, 1.0}), bf(1, {1.0, 1.0})));
}

TEST(TakeMinor, UltraloopSquare) {
  const BinaryFunction f = tensor_power(ultraloop_function(), 2);
  for (Complex mu : {Complex(1.0), kOmega, kOmega2}) {
    for (std::size_t i = 0; i < 2; ++i) EXPECT_TRUE(approx_equal(take_minor(f, {i, mu}), ultraloop_function(), 1e-12));
  }
}

TEST(TakeMinor, Errors) {
  const BinaryFunction f = bf(1, {1.0, 0.5});
  EXPECT_EQ(kind_of([&] { take_minor(f, {1, 1.0}); }), ErrorKind::IndexOutOfRange);
  EXPECT_EQ(kind_of([&] { take_minor(f, {0, kMinorPole}); }), ErrorKind::PoleError);
  EXPECT_EQ(kind_of([&] { take_minor(bf(1, {1.0, -1.0}), {0, 1.0}); }), ErrorKind::NormalizationError);
}

TEST(TakeMinor, MatchesSliceFormula) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    const std::size_t m = 1 + rng() % 5;
    const BinaryFunction f = random_function(rng, m);
    const std::size_t i = rng() % m;
    const Complex mu = random_mu(rng);
    const Complex w = lambda(mu);
    const RawVector raw = raw_minor(f, i, mu);
    for (std::size_t g = 0; g < raw.size(); ++g) {
      const Complex expected = f[insert_bit_index(g, m - 1, i, 0)] + w * f[insert_bit_index(g, m - 1, i, 1)];
      EXPECT_LE(std::abs(raw[g] - expected), 1e-14);
    }
  }
}

TEST(MinorsCommute, Examples) {
  std::mt19937_64 rng(12);
  const BinaryFunction f = random_function(rng, 4);
  EXPECT_TRUE(minors_commute_check(f, {0, -1.0}, {2, -1.0}));
  EXPECT_TRUE(minors_commute_check(f, {1, kOmega}, {3, kOmega2}));
  const BinaryFunction digon = bf(2, {1.0, 0.0, 0.0, 1.0});
  EXPECT_TRUE(minors_commute_check(digon, {0, 1.0}, {1, -1.0}));
  EXPECT_EQ(kind_of([&] { minors_commute_check(f, {1, 1.0}, {1, -1.0}); }), ErrorKind::InvalidArgument);
}

TEST(TransformMinor, Examples) {
  std::mt19937_64 rng(13);
  const BinaryFunction f = random_function(rng, 5);
  EXPECT_TRUE(transform_minor_check(f, 1.0, random_mu(rng), 2));
  EXPECT_TRUE(transform_minor_check(f, kOmega, 1.0, 0));
  for (int t = 0; t < 20; ++t) EXPECT_TRUE(transform_minor_check(f, random_mu(rng), random_mu(rng), rng() % 5, 1e-8));
}

TEST(TransformMinor, CatchesAWrongMinor) {
  // The raw identity fails if the minor on the transformed side used nu
  // instead of mu * nu.
  std::mt19937_64 rng(14);
  const BinaryFunction f = random_function(rng, 3);
  const Complex mu = kOmega;
  const Complex nu = 0.7;
  const RawVector lhs = raw_minor(transform(f, mu), 1, nu);
  const RawVector wrong = transform(raw_minor(f, 1, nu), mu);
  EXPECT_FALSE(proportional(lhs, wrong, 1e-6));
}

TEST(Degenerate, Examples) {
  EXPECT_TRUE(is_degenerate(bf(1, {1.0, 1.0}), 0));
  EXPECT_TRUE(is_degenerate(bf(1, {1.0, 0.0}), 0));
  EXPECT_FALSE(is_degenerate(bf(2, {1.0, 0.0, 0.0, 1.0}), 0));
  EXPECT_TRUE(is_degenerate(tensor_power(ultraloop_function(), 3), 1));
}

TEST(Degenerate, AgreesWithMatroidOracle) {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 300; ++t) {
    const std::size_t cols = 1 + rng() % 5;
    std::vector<std::uint64_t> rows(rng() % 4);
    for (auto& r : rows) r = rng() & ((std::uint64_t{1} << cols) - 1);
    const BinaryFunction f = rowspace_indicator(gf2::Matrix{cols, rows});
    for (std::size_t i = 0; i < cols; ++i) {
      EXPECT_EQ(is_degenerate(f, i), oracle::is_loop(rows, cols, i) || oracle::is_coloop(rows, cols, i));
    }
  }
}

TEST(DegenerateReduction, Examples) {
  const BinaryFunction f = tensor_power(ultraloop_function(), 2);
  EXPECT_TRUE(degenerate_reduction_check(f, ultraloop_function(), 0, 1.0, -1.0));
  EXPECT_TRUE(degenerate_reduction_check(f, ultraloop_function(), 1, 1.0, -1.0));
  // Both sides fail here, so they still agree.
  EXPECT_TRUE(degenerate_reduction_check(bf(2, {1.0, 0.0, 0.0, 1.0}), bf(1, {1.0, 1.0}), 0, 1.0, -1.0));
  EXPECT_TRUE(degenerate_reduction_check(bf(1, {1.0, Complex(0.3, 0.2)}), BinaryFunction{}, 0, 1.0, -1.0));
  EXPECT_EQ(kind_of([&] { degenerate_reduction_check(f, ultraloop_function(), 0, 1.0, 1.0); }),
            ErrorKind::InvalidArgument);
}

TEST(DegenerateReduction, AnyTwoMinorsDecide) {
  std::mt19937_64 rng(16);
  for (int t = 0; t < 40; ++t) {
    std::vector<bool> planted{bool(rng() & 1), bool(rng() & 1), bool(rng() & 1)};
    const BinaryFunction f = suites::planted_function(rng, planted);
    for (std::size_t i = 0; i < 3; ++i) {
      const bool a = approx_equal(take_minor(f, {i, 1.0}), take_minor(f, {i, -1.0}), 1e-9);
      const bool b = approx_equal(take_minor(f, {i, kOmega}), take_minor(f, {i, 0.4}), 1e-9);
      EXPECT_EQ(a, b);
      EXPECT_EQ(a, is_degenerate(f, i));
      if (planted[i]) EXPECT_TRUE(a);
    }
  }
}

}  // namespace
}  // namespace trialab
