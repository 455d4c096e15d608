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

#include "varbound/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "varbound/variance.hpp"

namespace varbound {
namespace {

struct PairTerms {
  double dev_first = 0.0;   // Dev of the first-term combination
  double var_second = 0.0;  // Var of the second-term combination
};

constexpr std::array<BranchChoice, 4> kBranches{
    BranchChoice{0, 0}, BranchChoice{0, 1}, BranchChoice{1, 0}, BranchChoice{1, 1}};

void require_compatible(const DensityMatrix& rho, const ObservableSet& set) {
  if (rho.dim() != set.dim()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "state has dimension " + std::to_string(rho.dim()) +
                    ", observables have dimension " + std::to_string(set.dim()));
  }
}

void require_alpha(double alpha) {
  if (!std::isfinite(alpha) || alpha < 0.0) {
    throw Error(ErrorKind::kNegativeAlpha,
                "alpha must be finite and non-negative, got " +
                    std::to_string(alpha),
                alpha);
  }
}

void require_positive(double v, const char* name) {
  if (!std::isfinite(v) || v <= 0.0) {
    throw Error(ErrorKind::kNonPositiveParameter,
                std::string(name) + " must be finite and positive, got " +
                    std::to_string(v),
                v);
  }
}

double sign(int k) { return k % 2 == 0 ? 1.0 : -1.0; }

// alpha^e for e in {0, 1}, with 0^0 = 1.
double weight(double alpha, int e) { return e == 0 ? 1.0 : alpha; }

double combo_variance(const DensityMatrix& rho, const ObservableSet& set,
                      double ci, std::size_t i, double cj, std::size_t j) {
  const std::array<double, 2> coeffs{ci, cj};
  const std::array<std::size_t, 2> idx{i, j};
  return variance(rho, linear_combo(coeffs, set, idx));
}

PairTerms branch_terms(const DensityMatrix& rho, const ObservableSet& set,
                       double alpha, BranchChoice b, std::size_t p,
                       std::size_t q) {
  const int x = b.x;
  const int y = b.y;
  PairTerms t;
  t.dev_first = std::sqrt(combo_variance(rho, set, weight(alpha, 1 - x), p,
                                         sign(y) * weight(alpha, x), q));
  t.var_second = combo_variance(rho, set, weight(alpha, x), p,
                                sign(1 - y) * weight(alpha, 1 - x), q);
  return t;
}

double lb1_value(std::size_t n, double alpha, double dev_sum, double var_sum) {
  const double nn = static_cast<double>(n);
  const double inner = 2.0 / (nn * (nn - 1.0)) * dev_sum * dev_sum + var_sum;
  return inner / ((1.0 + alpha * alpha) * (nn - 1.0));
}

// Sums of Dev(A_i + s A_j) and Var(A_i + s A_j) over i < j.
struct SignedPairSums {
  double dev_sum = 0.0;
  double var_sum = 0.0;
};

SignedPairSums signed_pair_sums(const DensityMatrix& rho, const ObservableSet& set,
                                double s) {
  SignedPairSums out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      const double v = combo_variance(rho, set, 1.0, i, s, j);
      out.dev_sum += std::sqrt(v);
      out.var_sum += v;
    }
  }
  return out;
}

double variance_of_total(const DensityMatrix& rho, const ObservableSet& set) {
  std::vector<double> ones(set.size(), 1.0);
  std::vector<std::size_t> idx(set.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return variance(rho, linear_combo(ones, set, idx));
}

}  // namespace

std::string_view family_name(BoundFamily family) {
  switch (family) {
    case BoundFamily::kSum: return "SUM";
    case BoundFamily::kSong: return "SONG";
    case BoundFamily::kZhang: return "ZHANG";
    case BoundFamily::kLb1: return "LB1";
    case BoundFamily::kLb1Pi: return "LB1_PI";
    case BoundFamily::kThm2X: return "THM2_X";
    case BoundFamily::kThm2Y: return "THM2_Y";
    case BoundFamily::kThm2Z: return "THM2_Z";
    case BoundFamily::kLb2: return "LB2";
  }
  return "UNKNOWN";
}

double sum_variances(const DensityMatrix& rho, const ObservableSet& set) {
  require_compatible(rho, set);
  double total = 0.0;
  for (const auto& a : set) total += variance(rho, a);
  return total;
}

BoundEvaluation song_bound(const DensityMatrix& rho, const ObservableSet& set) {
  require_compatible(rho, set);
  const double n = static_cast<double>(set.size());
  const SignedPairSums minus = signed_pair_sums(rho, set, -1.0);
  const double value = variance_of_total(rho, set) / n +
                       2.0 / (n * n * (n - 1.0)) * minus.dev_sum * minus.dev_sum;
  return {.family = BoundFamily::kSong, .value = value};
}

BoundEvaluation zhang_bound(const DensityMatrix& rho, const ObservableSet& set) {
  require_compatible(rho, set);
  const double n = static_cast<double>(set.size());
  BoundEvaluation best{.family = BoundFamily::kZhang, .value = -1.0};
  for (int x = 0; x <= 1; ++x) {
    double dev_sum = 0.0;
    double var_sum = 0.0;
    for (std::size_t i = 0; i < set.size(); ++i) {
      for (std::size_t j = i + 1; j < set.size(); ++j) {
        dev_sum += std::sqrt(combo_variance(rho, set, 1.0, i, sign(x), j));
        var_sum += combo_variance(rho, set, 1.0, i, sign(x + 1), j);
      }
    }
    const double inner = 2.0 / (n * (n - 1.0)) * dev_sum * dev_sum + var_sum;
    const double value = inner / (2.0 * (n - 1.0));
    if (value > best.value) {
      best.value = value;
      best.branch = BranchChoice{x, 0};
    }
  }
  return best;
}

BoundEvaluation lb1(const DensityMatrix& rho, const ObservableSet& set,
                    double alpha) {
  require_compatible(rho, set);
  require_alpha(alpha);
  BoundEvaluation best{.family = BoundFamily::kLb1, .value = -1.0, .alpha = alpha};
  for (const BranchChoice b : kBranches) {
    double dev_sum = 0.0;
    double var_sum = 0.0;
    for (std::size_t i = 0; i < set.size(); ++i) {
      for (std::size_t j = i + 1; j < set.size(); ++j) {
        const PairTerms t = branch_terms(rho, set, alpha, b, i, j);
        dev_sum += t.dev_first;
        var_sum += t.var_second;
      }
    }
    const double value = lb1_value(set.size(), alpha, dev_sum, var_sum);
    if (value > best.value) {
      best.value = value;
      best.branch = b;
    }
  }
  return best;
}

BoundEvaluation lb1_permuted(const DensityMatrix& rho, const ObservableSet& set,
                             double alpha) {
  require_compatible(rho, set);
  require_alpha(alpha);
  const std::size_t n = set.size();
  if (n > kPermutationMax) {
    throw Error(ErrorKind::kTooManyObservables,
                std::to_string(n) + " observables exceed the exhaustive limit of " +
                    std::to_string(kPermutationMax),
                static_cast<double>(n));
  }

  // Terms for every ordered pair, so each ordering only costs additions.
  std::array<std::vector<PairTerms>, kBranches.size()> table;
  for (std::size_t b = 0; b < kBranches.size(); ++b) {
    table[b].resize(n * n);
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        if (p != q) table[b][p * n + q] = branch_terms(rho, set, alpha, kBranches[b], p, q);
      }
    }
  }

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  BoundEvaluation best{.family = BoundFamily::kLb1Pi, .value = -1.0, .alpha = alpha};
  do {
    for (std::size_t b = 0; b < kBranches.size(); ++b) {
      double dev_sum = 0.0;
      double var_sum = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          const PairTerms& t = table[b][perm[i] * n + perm[j]];
          dev_sum += t.dev_first;
          var_sum += t.var_second;
        }
      }
      const double value = lb1_value(n, alpha, dev_sum, var_sum);
      if (value > best.value) {
        best.value = value;
        best.branch = kBranches[b];
        best.permutation = perm;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Thm2Bounds thm2_bounds(const DensityMatrix& rho, const ObservableSet& set,
                       double alpha, double beta) {
  require_compatible(rho, set);
  require_positive(alpha, "alpha");
  require_positive(beta, "beta");

  const double n = static_cast<double>(set.size());
  const SignedPairSums plus = signed_pair_sums(rho, set, 1.0);
  const SignedPairSums minus = signed_pair_sums(rho, set, -1.0);
  const double var_total = variance_of_total(rho, set);
  const double denom = alpha * n + (n - 2.0) * beta;
  const double cs = 2.0 / (n * (n - 1.0));

  auto make = [&](BoundFamily f, double v) {
    return BoundEvaluation{.family = f, .value = v, .alpha = alpha, .beta = beta};
  };

  Thm2Bounds out{
      .x = make(BoundFamily::kThm2X,
                (beta * cs * plus.dev_sum * plus.dev_sum + alpha * minus.var_sum +
                 (alpha - beta) * var_total) /
                    denom),
      .y = make(BoundFamily::kThm2Y,
                (alpha * cs * minus.dev_sum * minus.dev_sum + beta * plus.var_sum +
                 (alpha - beta) * var_total) /
                    denom),
      .z = std::nullopt,
  };
  if (beta > alpha) {
    out.z = make(BoundFamily::kThm2Z,
                 (beta * plus.var_sum + alpha * minus.var_sum +
                  (alpha - beta) / ((n - 1.0) * (n - 1.0)) * plus.dev_sum *
                      plus.dev_sum) /
                     denom);
  }
  return out;
}

BoundEvaluation lb2(const DensityMatrix& rho, const ObservableSet& set,
                    double alpha, double beta) {
  const Thm2Bounds t = thm2_bounds(rho, set, alpha, beta);
  const BoundEvaluation* best = &t.x;
  if (t.y.value > best->value) best = &t.y;
  if (t.z && t.z->value > best->value) best = &*t.z;
  return {.family = BoundFamily::kLb2,
          .value = best->value,
          .alpha = alpha,
          .beta = beta,
          .lb2_member = best->family};
}

}  // namespace varbound
