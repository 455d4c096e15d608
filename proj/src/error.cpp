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

#include "varbound/error.hpp"

namespace varbound {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotHermitian: return "NotHermitian";
    case ErrorKind::kNotUnitTrace: return "NotUnitTrace";
    case ErrorKind::kNotPSD: return "NotPSD";
    case ErrorKind::kConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::kNotNormalized: return "NotNormalized";
    case ErrorKind::kNotSquare: return "NotSquare";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kTooFewObservables: return "TooFewObservables";
    case ErrorKind::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::kLengthMismatch: return "LengthMismatch";
    case ErrorKind::kNegativeAlpha: return "NegativeAlpha";
    case ErrorKind::kNonPositiveParameter: return "NonPositiveParameter";
    case ErrorKind::kTooManyObservables: return "TooManyObservables";
    case ErrorKind::kInvalidGrid: return "InvalidGrid";
    case ErrorKind::kBlochVectorTooLong: return "BlochVectorTooLong";
    case ErrorKind::kInvalidTheta: return "InvalidTheta";
    case ErrorKind::kUnknownExample: return "UnknownExample";
    case ErrorKind::kOutOfSupportedRange: return "OutOfSupportedRange";
    case ErrorKind::kIoError: return "IoError";
    case ErrorKind::kInternalConsistency: return "InternalConsistency";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, double value)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
      kind_(kind),
      value_(value) {}

}  // namespace varbound
