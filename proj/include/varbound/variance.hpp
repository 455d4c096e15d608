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

#include <cstddef>
#include <span>

#include "varbound/linalg.hpp"

namespace varbound {

/// Re Tr(rho A).
double mean_value(const DensityMatrix& rho, const Observable& a);

/// Tr(rho A^2) - Tr(rho A)^2, clamped at zero. Rounding residue below zero
/// is tolerated up to 1e-12 * max(1, |A|_F^2); anything more negative throws
/// kInternalConsistency.
double variance(const DensityMatrix& rho, const Observable& a);

double stddev(const DensityMatrix& rho, const Observable& a);

/// sum_k coeffs[k] * set[subset[k]].
Observable linear_combo(std::span<const double> coeffs, const ObservableSet& set,
                        std::span<const std::size_t> subset);

/// | (I (x) dA) vec(sqrt(rho)) |^2 with dA = A - Tr(rho A) I. Shares nothing
/// with variance() beyond the mean; used to cross-check it.
double variance_via_vectorization(const DensityMatrix& rho, const Observable& a);

}  // namespace varbound
