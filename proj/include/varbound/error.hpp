// Copyright 2026 The varbound Authors
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

#include <stdexcept>
#include <string>
#include <string_view>

namespace varbound {

enum class ErrorKind {
  kNotHermitian,
  kNotUnitTrace,
  kNotPSD,
  kConvergenceFailure,
  kNotNormalized,
  kNotSquare,
  kDimensionMismatch,
  kTooFewObservables,
  kIndexOutOfRange,
  kLengthMismatch,
  kNegativeAlpha,
  kNonPositiveParameter,
  kTooManyObservables,
  kInvalidGrid,
  kBlochVectorTooLong,
  kInvalidTheta,
  kUnknownExample,
  kOutOfSupportedRange,
  kIoError,
  kInternalConsistency,
  kInvalidArgument,
};

std::string_view error_kind_name(ErrorKind kind);

/// Every failure raised by the library. `value()` carries the offending
/// quantity when there is one (max deviation, trace, min eigenvalue, N, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, double value = 0.0);

  ErrorKind kind() const noexcept { return kind_; }
  double value() const noexcept { return value_; }

 private:
  ErrorKind kind_;
  double value_;
};

}  // namespace varbound
