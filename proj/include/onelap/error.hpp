// Copyright The onelap Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace onelap {

enum class ErrorCode {
  EmptyInput,
  DuplicateVertexInFace,
  DimensionOutOfRange,
  FaceNotInComplex,
  MalformedSystem,
  LengthMismatch,
  DegenerateNorm,
  NegativeMu,
  ZeroVector,
  EmptyDimension,
  BudgetExceeded,
  DomainMismatch,
  MissingInput,
  DimensionMismatch,
  NotSubcomplex,
  NotAMotif,
  ConditionViolated,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above; the C
/// API translates them into status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace onelap
