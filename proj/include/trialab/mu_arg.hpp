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

#include <cstdio>
#include <cstdlib>
#include <string>
#include <string_view>

#include "trialab/error.hpp"
#include "trialab/scalar.hpp"

namespace trialab {

namespace detail {

inline double parse_decimal(std::string_view text, std::string_view whole) {
  const std::string s(text);
  char* end = nullptr;
  const double value = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw Error(ErrorKind::ParseError, "cannot parse mu '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace detail

/// Accepts 1, -1, w, w2, a real decimal, or RE+IMi / RE-IMi.
inline Complex parse_mu(std::string_view text) {
  if (text == "w") return kOmega;
  if (text == "w2") return kOmega2;
  if (text.empty() || text.back() != 'i') return {detail::parse_decimal(text, text), 0.0};
  // Split at the last sign that does not start the string or an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = text.size() - 1; k > 0; --k) {
    if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) {
    throw Error(ErrorKind::ParseError, "expected RE(+|-)IMi, got '" + std::string(text) + "'");
  }
  const double re = detail::parse_decimal(text.substr(0, split), text);
  const double im = detail::parse_decimal(text.substr(split, text.size() - split - 1), text);
  return {re, im};
}

/// Inverse of parse_mu on canonical forms.
inline std::string format_mu(Complex mu) {
  if (mu == Complex{1.0, 0.0}) return "1";
  if (mu == Complex{-1.0, 0.0}) return "-1";
  if (mu == kOmega) return "w";
  if (mu == kOmega2) return "w2";
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", mu.real(), mu.imag());
  return buf;
}

}  // namespace trialab
