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

#include "varbound/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace varbound {
namespace {

constexpr double kRefineWidth = 1e-4;  // bracket width in log2 units
const double kInvPhi = (std::sqrt(5.0) - 1.0) / 2.0;

using Objective = std::function<BoundEvaluation(double)>;

OptimizationResult maximize(const GridSpec& grid, const Objective& f) {
  grid.validate();
  OptimizationResult result{.grid = grid};
  const std::vector<double> pts = grid.points();

  // Ascending parameter order with strict improvement: ties keep the
  // smaller parameter.
  std::size_t best_idx = 0;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    BoundEvaluation e = f(pts[k]);
    ++result.evaluations;
    if (k == 0 || e.value > result.best.value) {
      result.best = std::move(e);
      best_idx = k;
    }
  }
  if (!grid.refine) return result;

  const double step = 1.0 / grid.points_per_octave;
  const double center = std::log2(pts[best_idx]);
  double lo = std::max<double>(grid.min_exponent, center - step);
  double hi = std::min<double>(grid.max_exponent, center + step);
  if (hi - lo < kRefineWidth) return result;

  auto eval = [&](double log_t) {
    BoundEvaluation e = f(std::exp2(log_t));
    ++result.evaluations;
    if (e.value > result.best.value) result.best = e;
    return e.value;
  };

  double c = hi - kInvPhi * (hi - lo);
  double d = lo + kInvPhi * (hi - lo);
  double fc = eval(c);
  double fd = eval(d);
  while (hi - lo >= kRefineWidth) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kInvPhi * (hi - lo);
      fc = eval(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kInvPhi * (hi - lo);
      fd = eval(d);
    }
  }
  return result;
}

}  // namespace

void GridSpec::validate() const {
  if (min_exponent >= max_exponent) {
    throw Error(ErrorKind::kInvalidGrid,
                "min_exponent (" + std::to_string(min_exponent) +
                    ") must be below max_exponent (" +
                    std::to_string(max_exponent) + ")");
  }
  if (points_per_octave < 1) {
    throw Error(ErrorKind::kInvalidGrid,
                "points_per_octave must be positive, got " +
                    std::to_string(points_per_octave),
                points_per_octave);
  }
  if (max_exponent > 60 || min_exponent < -60) {
    throw Error(ErrorKind::kInvalidGrid, "exponents limited to [-60, 60]");
  }
}

std::vector<double> GridSpec::points() const {
  validate();
  std::vector<double> pts;
  const long lo = static_cast<long>(min_exponent) * points_per_octave;
  const long hi = static_cast<long>(max_exponent) * points_per_octave;
  pts.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (long m = lo; m <= hi; ++m) {
    pts.push_back(std::exp2(static_cast<double>(m) / points_per_octave));
  }
  // the parameter 1 is always sampled, even when the range excludes it
  if (lo > 0 || hi < 0) pts.insert(std::lower_bound(pts.begin(), pts.end(), 1.0), 1.0);
  return pts;
}

OptimizationResult optimize_lb1(const DensityMatrix& rho, const ObservableSet& set,
                                const GridSpec& grid) {
  return maximize(grid, [&](double alpha) { return lb1(rho, set, alpha); });
}

OptimizationResult optimize_lb1_permuted(const DensityMatrix& rho,
                                         const ObservableSet& set,
                                         const GridSpec& grid) {
  return maximize(grid, [&](double alpha) { return lb1_permuted(rho, set, alpha); });
}

OptimizationResult optimize_lb2(const DensityMatrix& rho, const ObservableSet& set,
                                const GridSpec& grid) {
  return maximize(grid, [&](double t) { return lb2(rho, set, t, 1.0); });
}

std::vector<BoundEvaluation> compare_report(const DensityMatrix& rho,
                                            const ObservableSet& set,
                                            const GridSpec& grid,
                                            bool include_permutations) {
  grid.validate();
  if (include_permutations && set.size() > kPermutationMax) {
    throw Error(ErrorKind::kTooManyObservables,
                std::to_string(set.size()) + " observables exceed the exhaustive limit",
                static_cast<double>(set.size()));
  }
  std::vector<BoundEvaluation> rows;
  rows.push_back({.family = BoundFamily::kSum, .value = sum_variances(rho, set)});
  rows.push_back(song_bound(rho, set));
  rows.push_back(zhang_bound(rho, set));
  rows.push_back(optimize_lb1(rho, set, grid).best);
  rows.push_back(optimize_lb2(rho, set, grid).best);
  if (include_permutations) rows.push_back(optimize_lb1_permuted(rho, set, grid).best);
  return rows;
}

}  // namespace varbound
