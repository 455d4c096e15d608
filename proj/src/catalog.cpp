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

#include "varbound/catalog.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace varbound {
namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kRangeSlack = 1e-12;

ComplexMatrix pauli_matrix(Axis axis) {
  ComplexMatrix m(2, 2);
  switch (axis) {
    case Axis::kX: m << 0.0, 1.0, 1.0, 0.0; break;
    case Axis::kY: m << 0.0, -kI, kI, 0.0; break;
    case Axis::kZ: m << 1.0, 0.0, 0.0, -1.0; break;
  }
  return m;
}

ComplexMatrix spin1_matrix(Axis axis) {
  const double s = 1.0 / std::numbers::sqrt2;
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  switch (axis) {
    case Axis::kX:
      m(0, 1) = m(1, 0) = m(1, 2) = m(2, 1) = s;
      break;
    case Axis::kY:
      m(0, 1) = -kI * s;
      m(1, 0) = kI * s;
      m(1, 2) = -kI * s;
      m(2, 1) = kI * s;
      break;
    case Axis::kZ:
      m(0, 0) = 1.0;
      m(2, 2) = -1.0;
      break;
  }
  return m;
}

const char* axis_name(Axis axis) {
  switch (axis) {
    case Axis::kX: return "x";
    case Axis::kY: return "y";
    case Axis::kZ: return "z";
  }
  return "?";
}

void require_range(double v, double lo, double hi, const char* what) {
  if (!(v >= lo - kRangeSlack && v <= hi + kRangeSlack)) {
    throw Error(ErrorKind::kInvalidTheta,
                std::string(what) + " = " + std::to_string(v) + " outside [" +
                    std::to_string(lo) + ", " + std::to_string(hi) + "]",
                v);
  }
}

ComplexMatrix gaussian_matrix(int dim, std::uint64_t stream_seed) {
  std::mt19937_64 engine(stream_seed);
  std::normal_distribution<double> normal(0.0, std::numbers::sqrt2 / 2.0);
  ComplexMatrix g(dim, dim);
  // fill in column-major order, real part before imaginary
  for (Index c = 0; c < dim; ++c) {
    for (Index r = 0; r < dim; ++r) {
      const double re = normal(engine);
      const double im = normal(engine);
      g(r, c) = Complex(re, im);
    }
  }
  return g;
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t object) {
  return splitmix64(seed ^ (object * 0x9E3779B97F4A7C15ULL));
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Observable pauli(Axis axis) {
  return validate_observable(pauli_matrix(axis), std::string("sigma_") + axis_name(axis));
}

Observable angular_momentum(Axis axis) {
  return validate_observable(spin1_matrix(axis), std::string("L_") + axis_name(axis));
}

DensityMatrix bloch_state(const std::array<double, 3>& r) {
  const double len = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
  if (!(len <= 1.0 + kRangeSlack)) {
    throw Error(ErrorKind::kBlochVectorTooLong,
                "Bloch vector length " + std::to_string(len), len);
  }
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  m += r[0] * pauli_matrix(Axis::kX) + r[1] * pauli_matrix(Axis::kY) +
       r[2] * pauli_matrix(Axis::kZ);
  return validate_density(0.5 * m);
}

DensityMatrix isotropic_state(int d, double theta) {
  if (d < 2) {
    throw Error(ErrorKind::kOutOfSupportedRange,
                "isotropic state needs d >= 2, got " + std::to_string(d), d);
  }
  require_range(theta, 0.0, 1.0, "theta");
  const Index n = static_cast<Index>(d) * d;
  ComplexVector psi = ComplexVector::Zero(n);
  for (Index i = 0; i < d; ++i) psi(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
  const ComplexMatrix p = psi * psi.adjoint();
  const double mixed = (1.0 - theta) / static_cast<double>(n - 1);
  const ComplexMatrix rho =
      mixed * (ComplexMatrix::Identity(n, n) - p) + theta * p;
  return validate_density(rho);
}

DensityMatrix spin1_pure(double theta, double phi) {
  ComplexVector psi(3);
  psi << std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
      std::cos(theta);
  return pure_state(psi);
}

ObservableSet example_set(int id) {
  switch (id) {
    case 1: {
      const ComplexMatrix sx = pauli_matrix(Axis::kX);
      const ComplexMatrix sy = pauli_matrix(Axis::kY);
      const ComplexMatrix sz = pauli_matrix(Axis::kZ);
      return ObservableSet({validate_observable(sx - sz, "sigma_x - sigma_z"),
                            validate_observable(sy + sz, "sigma_y + sigma_z"),
                            validate_observable(sz, "sigma_z")});
    }
    case 2: {
      const ComplexMatrix s1 = pauli_matrix(Axis::kX);
      const ComplexMatrix s2 = pauli_matrix(Axis::kY);
      const ComplexMatrix s3 = pauli_matrix(Axis::kZ);
      return ObservableSet(
          {validate_observable(kron(s3, s1) + kron(s3, s2), "s3 s1 + s3 s2"),
           validate_observable(kron(s3, s2), "s3 s2"),
           validate_observable(kron(s3, s3) - kron(s3, s2), "s3 s3 - s3 s2")});
    }
    case 3: {
      const ComplexMatrix lx = spin1_matrix(Axis::kX);
      const ComplexMatrix ly = spin1_matrix(Axis::kY);
      const ComplexMatrix lz = spin1_matrix(Axis::kZ);
      return ObservableSet({validate_observable(lx - ly, "L_x - L_y"),
                            validate_observable(ly, "L_y"),
                            validate_observable(lz + ly, "L_z + L_y")});
    }
    default:
      throw Error(ErrorKind::kUnknownExample,
                  "example id must be 1, 2 or 3, got " + std::to_string(id), id);
  }
}

DensityMatrix example_state(const ExampleSpec& spec) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  switch (spec.id) {
    case 1: {
      require_range(spec.theta, 0.0, kTwoPi, "theta");
      const double r = std::sqrt(3.0) / 2.0;
      return bloch_state({r * std::cos(spec.theta), r * std::sin(spec.theta), 0.0});
    }
    case 2:
      return isotropic_state(2, spec.theta);
    case 3:
      require_range(spec.theta, 0.0, std::numbers::pi, "theta");
      require_range(spec.phi, 0.0, kTwoPi, "phi");
      return spin1_pure(spec.theta, spec.phi);
    default:
      throw Error(ErrorKind::kUnknownExample,
                  "example id must be 1, 2 or 3, got " + std::to_string(spec.id),
                  spec.id);
  }
}

RandomInstance random_instance(int dim, int n_obs, std::uint64_t seed) {
  if (dim < 2 || dim > 8 || n_obs < 2 || n_obs > 6) {
    throw Error(ErrorKind::kOutOfSupportedRange,
                "random instances support dim in [2, 8] and n_obs in [2, 6], got dim=" +
                    std::to_string(dim) + " n_obs=" + std::to_string(n_obs));
  }
  const ComplexMatrix g = gaussian_matrix(dim, stream_seed(seed, 0));
  const ComplexMatrix w = g * g.adjoint();
  DensityMatrix rho = validate_density(w / w.trace().real());

  std::vector<Observable> obs;
  obs.reserve(static_cast<std::size_t>(n_obs));
  for (int k = 1; k <= n_obs; ++k) {
    const ComplexMatrix h = gaussian_matrix(dim, stream_seed(seed, static_cast<std::uint64_t>(k)));
    obs.push_back(validate_observable(0.5 * (h + h.adjoint()), "A_" + std::to_string(k)));
  }
  return {std::move(rho), ObservableSet(std::move(obs))};
}

}  // namespace varbound
