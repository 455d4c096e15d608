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

// Variance-based lower bounds on sum_i Var_rho(A_i) for N observables.
//
//   SONG    (1/N) Var(sum A) + 2/(N^2 (N-1)) [sum_{i<j} Dev(A_i - A_j)]^2
//   ZHANG   max_x 1/(2N-2) { 2/(N(N-1)) [sum Dev(A_i + (-1)^x A_j)]^2
//                            + sum Var(A_i + (-1)^(x+1) A_j) }
//   LB1     max_{x,y} 1/((1+a^2)(N-1)) {
//               2/(N(N-1)) [sum Dev(a^(1-x) A_i + (-1)^y a^x A_j)]^2
//             + sum Var(a^x A_i + (-1)^(1-y) a^(1-x) A_j) }
//   LB1_PI  LB1 maximized over all orderings of the tuple
//   X, Y, Z weighted parallelogram bounds with weights (a, b) > 0; Z only
//           for b > a. LB2 = max(X, Y, Z).
//
// Dev = standard deviation, Var = variance in rho; sums run over i < j.
// Every combined observable is materialized and its variance evaluated
// directly.

#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "varbound/linalg.hpp"

namespace varbound {

enum class BoundFamily {
  kSum,  // reference entry: the sum of variances itself
  kSong,
  kZhang,
  kLb1,
  kLb1Pi,
  kThm2X,
  kThm2Y,
  kThm2Z,
  kLb2,
};

std::string_view family_name(BoundFamily family);

struct BranchChoice {
  int x = 0;
  int y = 0;

  friend bool operator==(const BranchChoice&, const BranchChoice&) = default;
};

struct BoundEvaluation {
  BoundFamily family = BoundFamily::kSum;
  double value = 0.0;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<BranchChoice> branch;  // ZHANG uses x only (y stays 0)
  std::optional<std::vector<std::size_t>> permutation;
  std::optional<BoundFamily> lb2_member;  // which of X/Y/Z won
};

/// Orderings are enumerated exhaustively up to this many observables.
inline constexpr std::size_t kPermutationMax = 7;

double sum_variances(const DensityMatrix& rho, const ObservableSet& set);

BoundEvaluation song_bound(const DensityMatrix& rho, const ObservableSet& set);

BoundEvaluation zhang_bound(const DensityMatrix& rho, const ObservableSet& set);

/// alpha >= 0; 0^0 is taken as 1. Ties between branches go to the
/// lexicographically smallest (x, y).
BoundEvaluation lb1(const DensityMatrix& rho, const ObservableSet& set,
                    double alpha);

/// LB1 maximized over S(N), N <= kPermutationMax. Orderings are visited in
/// lexicographic order starting from the identity; ties keep the earlier one.
BoundEvaluation lb1_permuted(const DensityMatrix& rho, const ObservableSet& set,
                             double alpha);

struct Thm2Bounds {
  BoundEvaluation x;
  BoundEvaluation y;
  std::optional<BoundEvaluation> z;  // present only when beta > alpha
};

Thm2Bounds thm2_bounds(const DensityMatrix& rho, const ObservableSet& set,
                       double alpha, double beta);

BoundEvaluation lb2(const DensityMatrix& rho, const ObservableSet& set,
                    double alpha, double beta);

}  // namespace varbound
