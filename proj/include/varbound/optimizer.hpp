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
#include <vector>

#include "varbound/bounds.hpp"

namespace varbound {

/// Log-uniform grid over 2^min_exponent .. 2^max_exponent with
/// points_per_octave samples per factor of two. Always contains 1, even
/// when the exponent range does not cover 0.
struct GridSpec {
  int min_exponent = -6;
  int max_exponent = 6;
  int points_per_octave = 20;
  bool refine = false;

  void validate() const;
  std::vector<double> points() const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

struct OptimizationResult {
  BoundEvaluation best;
  std::size_t evaluations = 0;
  GridSpec grid;
};

/// Best LB1 over alpha on the grid, plus optional golden-section refinement
/// in log2(alpha) around the best grid point. The refinement assumes local
/// unimodality, so it is a heuristic; it never lowers the grid result.
OptimizationResult optimize_lb1(const DensityMatrix& rho, const ObservableSet& set,
                                const GridSpec& grid);

/// LB1_PI over alpha, same search as optimize_lb1.
OptimizationResult optimize_lb1_permuted(const DensityMatrix& rho,
                                         const ObservableSet& set,
                                         const GridSpec& grid);

/// LB2 is invariant under (alpha, beta) -> (c alpha, c beta), so beta is
/// pinned to 1 and t = alpha / beta is searched on the grid.
OptimizationResult optimize_lb2(const DensityMatrix& rho, const ObservableSet& set,
                                const GridSpec& grid);

/// Rows in fixed order: SUM, SONG, ZHANG, LB1, LB2 and, when requested, LB1_PI.
std::vector<BoundEvaluation> compare_report(const DensityMatrix& rho,
                                            const ObservableSet& set,
                                            const GridSpec& grid,
                                            bool include_permutations);

}  // namespace varbound
