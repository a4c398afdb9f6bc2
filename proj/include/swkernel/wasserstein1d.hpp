// include/swkernel/wasserstein1d.hpp
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

#ifndef SWKERNEL_WASSERSTEIN1D_HPP_
#define SWKERNEL_WASSERSTEIN1D_HPP_

#include <vector>

#include "swkernel/sequence.hpp"

namespace swk {

// W_p^p between the uniform empirical distributions of a and b: the integral
// of |Fa^{-1}(z) - Fb^{-1}(z)|^p over z in (0,1), evaluated exactly by
// sweeping the merged quantile breakpoints (no sampling). Handles unequal
// sizes; equal sizes reduce to the mean p-th power gap of the sorted values.
double wasserstein_1d(std::vector<double> a, std::vector<double> b,
                      OrderParameter p = OrderParameter());

namespace detail {

// Same, assuming both inputs are already sorted ascending.
double wasserstein_1d_sorted(const std::vector<double>& a,
                             const std::vector<double>& b, OrderParameter p);

}  // namespace detail
}  // namespace swk

#endif  // SWKERNEL_WASSERSTEIN1D_HPP_
