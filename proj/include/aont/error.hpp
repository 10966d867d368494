// Copyright 2026 The aont-toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace aont {

enum class ErrorCode {
  kInvalidAlphabet,
  kUnknownSymbol,
  kSizeBoundExceeded,
  kNotABijection,
  kInvalidArray,
  kInvalidMarginal,
  kInvalidDistribution,
  kInvalidColumnSet,
  kSubsetTooLarge,
  kInvalidT,
  kArityMismatch,
  kDimensionMismatch,
  kZeroConditioningEvent,
  kNotADistribution,
  kInvalidDesignation,
  kNotAnAont,
  kInvalidModulus,
  kSingularMatrix,
  kParseError,
  kIoError,
  kUsage,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidAlphabet: return "InvalidAlphabet";
    case ErrorCode::kUnknownSymbol: return "UnknownSymbol";
    case ErrorCode::kSizeBoundExceeded: return "SizeBoundExceeded";
    case ErrorCode::kNotABijection: return "NotABijection";
    case ErrorCode::kInvalidArray: return "InvalidArray";
    case ErrorCode::kInvalidMarginal: return "InvalidMarginal";
    case ErrorCode::kInvalidDistribution: return "InvalidDistribution";
    case ErrorCode::kInvalidColumnSet: return "InvalidColumnSet";
    case ErrorCode::kSubsetTooLarge: return "SubsetTooLarge";
    case ErrorCode::kInvalidT: return "InvalidT";
    case ErrorCode::kArityMismatch: return "ArityMismatch";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kZeroConditioningEvent: return "ZeroConditioningEvent";
    case ErrorCode::kNotADistribution: return "NotADistribution";
    case ErrorCode::kInvalidDesignation: return "InvalidDesignation";
    case ErrorCode::kNotAnAont: return "NotAnAont";
    case ErrorCode::kInvalidModulus: return "InvalidModulus";
    case ErrorCode::kSingularMatrix: return "SingularMatrix";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kUsage: return "UsageError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Malformed text input. `line()` is 1-based; 0 means the whole document.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorCode::kParseError,
              line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace aont
