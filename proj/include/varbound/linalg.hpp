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

// Dense complex matrix primitives: validated observables and states,
// Hermitian eigendecomposition, PSD square root, Kronecker product and
// column-stacking vectorization.

#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "varbound/error.hpp"

namespace varbound {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

namespace tol {
inline constexpr double kHermitian = 1e-10;  // relative to max(1, max|M_ij|)
inline constexpr double kTrace = 1e-10;
inline constexpr double kPsd = 1e-10;
inline constexpr double kEig = 1e-9;
inline constexpr double kSqrt = 1e-9;
inline constexpr double kEigvec = 1e-9;
inline constexpr double kNormalization = 1e-10;
}  // namespace tol

/// Largest |M - M^H| entry.
double hermitian_deviation(const ComplexMatrix& m);

/// Hermitian matrix with a label. Only produced by validate_observable.
class Observable {
 public:
  Index dim() const noexcept { return matrix_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const std::string& label() const noexcept { return label_; }

 private:
  friend Observable validate_observable(const ComplexMatrix&, std::string);
  Observable(ComplexMatrix m, std::string label)
      : matrix_(std::move(m)), label_(std::move(label)) {}

  ComplexMatrix matrix_;
  std::string label_;
};

/// Hermitian, positive semidefinite, unit-trace state.
class DensityMatrix {
 public:
  Index dim() const noexcept { return matrix_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

 private:
  friend DensityMatrix validate_density(const ComplexMatrix&);
  explicit DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {}

  ComplexMatrix matrix_;
};

/// Ordered tuple (A_1, ..., A_N), N >= 2, all of one dimension.
class ObservableSet {
 public:
  explicit ObservableSet(std::vector<Observable> members);

  Index dim() const noexcept { return members_.front().dim(); }
  std::size_t size() const noexcept { return members_.size(); }
  const Observable& operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Observable>& members() const noexcept { return members_; }

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

 private:
  std::vector<Observable> members_;
};

/// Accepts M iff it is Hermitian within tol::kHermitian; stores (M + M^H)/2.
Observable validate_observable(const ComplexMatrix& m, std::string label = {});

/// Accepts M iff Hermitian, unit trace and PSD within tolerance. Eigenvalues
/// in [-tol::kPsd, 0) are clipped to zero and the matrix rebuilt.
DensityMatrix validate_density(const ComplexMatrix& m);

/// |psi><psi| for a normalized psi.
DensityMatrix pure_state(const ComplexVector& psi);

struct EigenSystem {
  RealVector values;      // ascending
  ComplexMatrix vectors;  // column k belongs to values[k]
};

EigenSystem eig_hermitian(const ComplexMatrix& m);

/// Hermitian PSD S with S * S = rho.
ComplexMatrix matrix_sqrt_psd(const DensityMatrix& rho);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Column stacking: (g_11, ..., g_l1, g_12, ..., g_lp). Satisfies
/// vectorize(G * T) == kron(I, G) * vectorize(T).
ComplexVector vectorize(const ComplexMatrix& g);

/// True iff every member satisfies |A psi - <psi|A|psi> psi| <= tol::kEigvec.
bool is_common_eigenvector(const ObservableSet& set, const ComplexVector& psi);

}  // namespace varbound
