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

// Both sides of the vector-norm identities the bound families are built on.
// Each function returns {lhs, rhs}; for exact arithmetic lhs == rhs.

#pragma once

#include <cstddef>
#include <span>
#include <utility>

#include <Eigen/Dense>

#include "varbound/bounds.hpp"

namespace varbound::identities {

using Sides = std::pair<double, double>;

namespace detail {

template <typename Vec>
double sum_sq(std::span<const Vec> a) {
  double s = 0.0;
  for (const auto& v : a) s += v.squaredNorm();
  return s;
}

template <typename Vec>
double pair_sq(std::span<const Vec> a, double ci, double cj) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      s += (ci * a[i] + cj * a[j]).squaredNorm();
    }
  }
  return s;
}

}  // namespace detail

/// (2N-2) sum |a_i|^2  ==  sum_{i<j} |a_i + a_j|^2 + sum_{i<j} |a_i - a_j|^2
template <typename Vec>
Sides parallelogram(std::span<const Vec> a) {
  const double n = static_cast<double>(a.size());
  return {(2.0 * n - 2.0) * detail::sum_sq(a),
          detail::pair_sq(a, 1.0, 1.0) + detail::pair_sq(a, 1.0, -1.0)};
}

/// sum |a_i|^2 == 1/((1+alpha^2)(N-1)) [ sum |alpha^(1-x) a_i + (-1)^y alpha^x a_j|^2
///                                      + sum |alpha^x a_i + (-1)^(1-y) alpha^(1-x) a_j|^2 ]
template <typename Vec>
Sides parameterized_parallelogram(std::span<const Vec> a, double alpha,
                                  BranchChoice b) {
  auto w = [alpha](int e) { return e == 0 ? 1.0 : alpha; };
  auto s = [](int k) { return k % 2 == 0 ? 1.0 : -1.0; };
  const double n = static_cast<double>(a.size());
  const double first = detail::pair_sq(a, w(1 - b.x), s(b.y) * w(b.x));
  const double second = detail::pair_sq(a, w(b.x), s(1 - b.y) * w(1 - b.x));
  return {detail::sum_sq(a), (first + second) / ((1.0 + alpha * alpha) * (n - 1.0))};
}

/// sum_{i<j} |a_i + a_j|^2 == |sum a_i|^2 + (N-2) sum |a_i|^2
template <typename Vec>
Sides pair_sum_identity(std::span<const Vec> a) {
  Vec total = a.front();
  for (std::size_t i = 1; i < a.size(); ++i) total += a[i];
  const double n = static_cast<double>(a.size());
  return {detail::pair_sq(a, 1.0, 1.0),
          total.squaredNorm() + (n - 2.0) * detail::sum_sq(a)};
}

/// sum_{i<j} |a_i - a_j|^2 == N sum |a_i|^2 - |sum a_i|^2
template <typename Vec>
Sides pair_difference_identity(std::span<const Vec> a) {
  Vec total = a.front();
  for (std::size_t i = 1; i < a.size(); ++i) total += a[i];
  const double n = static_cast<double>(a.size());
  return {detail::pair_sq(a, 1.0, -1.0),
          n * detail::sum_sq(a) - total.squaredNorm()};
}

/// [alpha N + (N-2) beta] sum |a_i|^2 == beta sum |a_i + a_j|^2
///     + alpha sum |a_i - a_j|^2 + (alpha - beta) |sum a_i|^2, any real alpha, beta.
template <typename Vec>
Sides weighted_parallelogram(std::span<const Vec> a, double alpha, double beta) {
  Vec total = a.front();
  for (std::size_t i = 1; i < a.size(); ++i) total += a[i];
  const double n = static_cast<double>(a.size());
  return {(alpha * n + (n - 2.0) * beta) * detail::sum_sq(a),
          beta * detail::pair_sq(a, 1.0, 1.0) + alpha * detail::pair_sq(a, 1.0, -1.0) +
              (alpha - beta) * total.squaredNorm()};
}

}  // namespace varbound::identities
