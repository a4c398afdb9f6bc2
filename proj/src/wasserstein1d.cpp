// src/wasserstein1d.cpp
//
// Copyright 2026 swkernel authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "swkernel/wasserstein1d.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace swk {
namespace detail {

double wasserstein_1d_sorted(const std::vector<double>& a,
                             const std::vector<double>& b, OrderParameter p) {
  const std::int64_t n = static_cast<std::int64_t>(a.size());
  const std::int64_t m = static_cast<std::int64_t>(b.size());
  require(n >= 1 && m >= 1, "1d transport needs non-empty inputs");

  const double exponent = p.value();
  // Both quantile functions are step functions; over the common grid with
  // denominator n*m each is constant on every cell, so the integral is a
  // finite sum. Cell boundaries are tracked as integers to avoid drift.
  double total = 0.0;
  std::int64_t i = 0, j = 0;
  std::int64_t pos = 0;  // current grid position, in units of 1/(n*m)
  while (i < n && j < m) {
    const std::int64_t next_a = (i + 1) * m;  // where a's i-th step ends
    const std::int64_t next_b = (j + 1) * n;
    const std::int64_t next = std::min(next_a, next_b);
    const double gap = std::abs(a[static_cast<std::size_t>(i)] -
                                b[static_cast<std::size_t>(j)]);
    double cost;
    if (exponent == 2.0) {
      cost = gap * gap;
    } else if (exponent == 1.0) {
      cost = gap;
    } else {
      cost = std::pow(gap, exponent);
    }
    total += static_cast<double>(next - pos) * cost;
    pos = next;
    if (next == next_a) ++i;
    if (next == next_b) ++j;
  }
  return total / static_cast<double>(n * m);
}

}  // namespace detail

double wasserstein_1d(std::vector<double> a, std::vector<double> b,
                      OrderParameter p) {
  detail::require(!a.empty() && !b.empty(),
                  "1d transport needs non-empty inputs");
  for (const double v : a)
    detail::require(std::isfinite(v), "1d transport input is not finite");
  for (const double v : b)
    detail::require(std::isfinite(v), "1d transport input is not finite");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return detail::wasserstein_1d_sorted(a, b, p);
}

}  // namespace swk
