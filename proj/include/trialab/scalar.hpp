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

#include <cmath>
#include <complex>
#include <cstdlib>
#include <string>

namespace trialab {

using Complex = std::complex<double>;

inline constexpr double kSqrt2 = 1.41421356237309504880168872420969808;
inline constexpr double kSqrt3 = 1.73205080756887729352744634150587237;

/// Primitive cube root of unity, built from literals so that w*w*w rounds to 1.
inline const Complex kOmega{-0.5, kSqrt3 / 2.0};
inline const Complex kOmega2{-0.5, -kSqrt3 / 2.0};

/// The single value of mu at which the minor weight lambda(mu) has a pole.
inline constexpr double kMinorPole = 3.0 + 2.0 * kSqrt2;

/// sqrt(2) - 1, the nontrivial entry of the ultraloop's binary function.
inline constexpr double kUltraloopValue = kSqrt2 - 1.0;

inline constexpr double kDefaultTol = 1e-9;

/// Default comparison tolerance, overridable through TRIALAB_TOL.
inline double default_tolerance() {
  if (const char* env = std::getenv("TRIALAB_TOL")) {
    char* end = nullptr;
    const double value = std::strtod(env, &end);
    if (end != env && value > 0.0 && std::isfinite(value)) return value;
  }
  return kDefaultTol;
}

}  // namespace trialab
