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

// States and observables of the three worked examples, plus seeded random
// instances for validity audits.

#pragma once

#include <array>
#include <cstdint>

#include "varbound/linalg.hpp"

namespace varbound {

enum class Axis { kX, kY, kZ };

Observable pauli(Axis axis);

/// Spin-1 angular momentum (hbar = 1) in the basis (|1>, |0>, |-1>).
Observable angular_momentum(Axis axis);

/// (I + r . sigma) / 2, |r| <= 1 + 1e-12.
DensityMatrix bloch_state(const std::array<double, 3>& r);

/// (1-theta)/(d^2-1) (I - P) + theta P with P the projector on
/// (1/sqrt d) sum_i |ii>. d >= 2, theta in [0, 1].
DensityMatrix isotropic_state(int d, double theta);

/// sin(theta)cos(phi)|1> + sin(theta)sin(phi)|0> + cos(theta)|-1>.
DensityMatrix spin1_pure(double theta, double phi);

/// id 1: (sx - sz, sy + sz, sz)
/// id 2: (s3 s1 + s3 s2, s3 s2, s3 s3 - s3 s2), products are Kronecker
/// id 3: (Lx - Ly, Ly, Lz + Ly)
ObservableSet example_set(int id);

/// One point of an example's state family. phi is only read by example 3.
struct ExampleSpec {
  int id = 1;
  double theta = 0.0;
  double phi = 0.0;
};

/// Example 1: Bloch vector (sqrt3/2 cos t, sqrt3/2 sin t, 0), t in [0, 2pi].
/// Example 2: two-qubit isotropic state, t in [0, 1].
/// Example 3: spin-1 pure state, t in [0, pi], phi in [0, 2pi].
DensityMatrix example_state(const ExampleSpec& spec);

struct RandomInstance {
  DensityMatrix rho;
  ObservableSet set;
};

/// rho = G G^H / Tr(G G^H) and A_k = (H + H^H)/2 with standard complex
/// Gaussian G, H. Each object draws from its own engine seeded from
/// (seed, k), k = 0 for rho and k = 1..N for A_1..A_N.
/// dim in [2, 8], n_obs in [2, 6].
RandomInstance random_instance(int dim, int n_obs, std::uint64_t seed);

/// SplitMix64 finalizer, used to derive independent stream seeds.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace varbound
