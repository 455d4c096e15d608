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

#include "varbound/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace varbound {
namespace {

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw Error(ErrorKind::kNotSquare,
                std::string(what) + " must be a non-empty square matrix, got " +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

void require_hermitian(const ComplexMatrix& m) {
  const double dev = hermitian_deviation(m);
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if (!(dev <= tol::kHermitian * scale)) {
    throw Error(ErrorKind::kNotHermitian,
                "max |M - M^H| = " + std::to_string(dev), dev);
  }
}

}  // namespace

double hermitian_deviation(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

ObservableSet::ObservableSet(std::vector<Observable> members)
    : members_(std::move(members)) {
  if (members_.size() < 2) {
    throw Error(ErrorKind::kTooFewObservables,
                "an observable set needs at least two members",
                static_cast<double>(members_.size()));
  }
  const Index d = members_.front().dim();
  for (const auto& a : members_) {
    if (a.dim() != d) {
      throw Error(ErrorKind::kDimensionMismatch,
                  "observable '" + a.label() + "' has dimension " +
                      std::to_string(a.dim()) + ", expected " +
                      std::to_string(d));
    }
  }
}

Observable validate_observable(const ComplexMatrix& m, std::string label) {
  require_square(m, "observable");
  require_hermitian(m);
  ComplexMatrix sym = 0.5 * (m + m.adjoint());
  return Observable(std::move(sym), std::move(label));
}

DensityMatrix validate_density(const ComplexMatrix& m) {
  require_square(m, "density matrix");
  require_hermitian(m);
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());

  const double trace = sym.trace().real();
  if (!(std::abs(trace - 1.0) <= tol::kTrace)) {
    throw Error(ErrorKind::kNotUnitTrace,
                "trace = " + std::to_string(trace), trace);
  }

  EigenSystem es = eig_hermitian(sym);
  const double min_eig = es.values.minCoeff();
  if (min_eig < -tol::kPsd) {
    throw Error(ErrorKind::kNotPSD,
                "min eigenvalue = " + std::to_string(min_eig), min_eig);
  }
  if (min_eig >= 0.0) return DensityMatrix(sym);

  // clip the rounding-level negative part
  RealVector clipped = es.values.cwiseMax(0.0);
  ComplexMatrix rebuilt =
      es.vectors * clipped.cast<Complex>().asDiagonal() * es.vectors.adjoint();
  rebuilt = 0.5 * (rebuilt + rebuilt.adjoint()).eval();
  return DensityMatrix(std::move(rebuilt));
}

DensityMatrix pure_state(const ComplexVector& psi) {
  if (psi.size() < 1 || std::abs(psi.norm() - 1.0) > tol::kNormalization) {
    throw Error(ErrorKind::kNotNormalized,
                "state vector norm = " + std::to_string(psi.norm()),
                psi.norm());
  }
  return validate_density(psi * psi.adjoint());
}

EigenSystem eig_hermitian(const ComplexMatrix& m) {
  require_square(m, "eigenproblem input");
  require_hermitian(m);
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::kConvergenceFailure,
                "Hermitian eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix matrix_sqrt_psd(const DensityMatrix& rho) {
  const EigenSystem es = eig_hermitian(rho.matrix());
  const RealVector roots = es.values.cwiseMax(0.0).cwiseSqrt();
  ComplexMatrix s =
      es.vectors * roots.cast<Complex>().asDiagonal() * es.vectors.adjoint();
  return 0.5 * (s + s.adjoint());
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector vectorize(const ComplexMatrix& g) {
  ComplexVector v(g.size());
  Index k = 0;
  for (Index col = 0; col < g.cols(); ++col) {
    for (Index row = 0; row < g.rows(); ++row) v(k++) = g(row, col);
  }
  return v;
}

bool is_common_eigenvector(const ObservableSet& set, const ComplexVector& psi) {
  if (psi.size() != set.dim()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "state vector has length " + std::to_string(psi.size()) +
                    ", observables have dimension " + std::to_string(set.dim()));
  }
  if (std::abs(psi.norm() - 1.0) > tol::kNormalization) {
    throw Error(ErrorKind::kNotNormalized,
                "state vector norm = " + std::to_string(psi.norm()),
                psi.norm());
  }
  for (const auto& a : set) {
    const ComplexVector a_psi = a.matrix() * psi;
    const Complex mean = psi.dot(a_psi);  // psi^H A psi
    if ((a_psi - mean * psi).norm() > tol::kEigvec) return false;
  }
  return true;
}

}  // namespace varbound
