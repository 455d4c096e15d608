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

#include "varbound/variance.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace varbound {
namespace {

constexpr double kNegativeResidue = 1e-12;
constexpr double kImagTraceTol = 1e-10;

void require_same_dim(const DensityMatrix& rho, const Observable& a) {
  if (rho.dim() != a.dim()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "state has dimension " + std::to_string(rho.dim()) +
                    ", observable '" + a.label() + "' has dimension " +
                    std::to_string(a.dim()));
  }
}

double clamp_residue(double v, const Observable& a) {
  if (v >= 0.0) return v;
  const double scale = std::max(1.0, a.matrix().squaredNorm());
  if (v >= -kNegativeResidue * scale) return 0.0;
  throw Error(ErrorKind::kInternalConsistency,
              "variance evaluated to " + std::to_string(v), v);
}

ComplexMatrix centered(const DensityMatrix& rho, const Observable& a) {
  ComplexMatrix d = a.matrix();
  d.diagonal().array() -= Complex(mean_value(rho, a), 0.0);
  return d;
}

}  // namespace

double mean_value(const DensityMatrix& rho, const Observable& a) {
  require_same_dim(rho, a);
  // Tr(rho A) without forming the product
  const Complex tr = (rho.matrix().transpose().array() * a.matrix().array()).sum();
  if (std::abs(tr.imag()) > kImagTraceTol * std::max(1.0, std::abs(tr.real()))) {
    throw Error(ErrorKind::kInternalConsistency,
                "Tr(rho A) has imaginary part " + std::to_string(tr.imag()),
                tr.imag());
  }
  return tr.real();
}

double variance(const DensityMatrix& rho, const Observable& a) {
  require_same_dim(rho, a);
  const ComplexMatrix d = centered(rho, a);
  const ComplexMatrix d2 = d * d;
  const double v =
      (rho.matrix().transpose().array() * d2.array()).sum().real();
  return clamp_residue(v, a);
}

double stddev(const DensityMatrix& rho, const Observable& a) {
  return std::sqrt(variance(rho, a));
}

Observable linear_combo(std::span<const double> coeffs, const ObservableSet& set,
                        std::span<const std::size_t> subset) {
  if (coeffs.size() != subset.size()) {
    throw Error(ErrorKind::kLengthMismatch,
                std::to_string(coeffs.size()) + " coefficients for " +
                    std::to_string(subset.size()) + " indices");
  }
  ComplexMatrix sum = ComplexMatrix::Zero(set.dim(), set.dim());
  for (std::size_t k = 0; k < subset.size(); ++k) {
    if (subset[k] >= set.size()) {
      throw Error(ErrorKind::kIndexOutOfRange,
                  "index " + std::to_string(subset[k]) + " into a set of " +
                      std::to_string(set.size()),
                  static_cast<double>(subset[k]));
    }
    sum += coeffs[k] * set[subset[k]].matrix();
  }
  return validate_observable(sum, "combo");
}

double variance_via_vectorization(const DensityMatrix& rho, const Observable& a) {
  require_same_dim(rho, a);
  const ComplexMatrix d = centered(rho, a);
  const ComplexMatrix s = matrix_sqrt_psd(rho);
  const ComplexMatrix id = ComplexMatrix::Identity(rho.dim(), rho.dim());
  const ComplexVector w = kron(id, d) * vectorize(s);
  return clamp_residue(w.squaredNorm(), a);
}

}  // namespace varbound
