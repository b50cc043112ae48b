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

#include <stdexcept>
#include <string>
#include <string_view>

namespace trialab {

enum class ErrorKind {
  WrongLength,
  EmptySetNotOne,
  IndexOutOfRange,
  DimensionMismatch,
  SingularTransform,
  PoleError,
  NormalizationError,
  InvalidMap,
  UnknownEdge,
  NonIntegerGenus,
  InternalInvariantViolation,
  CapExceeded,
  NotMinorClosed,
  ParseError,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::WrongLength: return "WrongLength";
    case ErrorKind::EmptySetNotOne: return "EmptySetNotOne";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SingularTransform: return "SingularTransform";
    case ErrorKind::PoleError: return "PoleError";
    case ErrorKind::NormalizationError: return "NormalizationError";
    case ErrorKind::InvalidMap: return "InvalidMap";
    case ErrorKind::UnknownEdge: return "UnknownEdge";
    case ErrorKind::NonIntegerGenus: return "NonIntegerGenus";
    case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotMinorClosed: return "NotMinorClosed";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace trialab
