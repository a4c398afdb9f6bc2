// include/swkernel/baselines.hpp
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

#ifndef SWKERNEL_BASELINES_HPP_
#define SWKERNEL_BASELINES_HPP_

#include <Eigen/Core>

#include "swkernel/sequence.hpp"

namespace swk {

// Pairwise alignment costs c_ij = 0.5 * ||x_i - y_j||^2 (the convention the
// alignment distances below use).
Eigen::MatrixXd alignment_cost_matrix(const EmbeddingSequence& x,
                                      const EmbeddingSequence& y);

// Pairwise transport costs ||x_i - y_j||^2 (no half).
Eigen::MatrixXd transport_cost_matrix(const EmbeddingSequence& x,
                                      const EmbeddingSequence& y);

// Dynamic time warping over alignment_cost_matrix with steps
// (i-1,j), (i,j-1), (i-1,j-1).
double dtw(const EmbeddingSequence& x, const EmbeddingSequence& y);

// Same recurrence with min replaced by the smoothed
// -smoothing * log(sum exp(-v / smoothing)). Converges to dtw as
// smoothing -> 0 and lies within smoothing * log(3) * (N + M) below it.
double soft_dtw(const EmbeddingSequence& x, const EmbeddingSequence& y,
                double smoothing);

// Exact optimal transport cost between the uniform empirical distributions
// with ground cost ||x_i - y_j||^2. Equal lengths solve an assignment
// problem; unequal lengths a small min-cost flow on the rational marginals.
double exact_wasserstein(const EmbeddingSequence& x,
                         const EmbeddingSequence& y);

// Cosine similarity of the mean-pooled sequences. Throws DegenerateInput
// when either mean is the zero vector.
double cosine_meanpool(const EmbeddingSequence& x, const EmbeddingSequence& y);

namespace detail {

// Minimum-cost perfect matching value of a square cost matrix.
double min_cost_assignment(const Eigen::MatrixXd& cost);

// Optimal transport value between uniform marginals (1/rows, 1/cols) for an
// arbitrary rectangular cost matrix.
double min_cost_transport(const Eigen::MatrixXd& cost);

}  // namespace detail
}  // namespace swk

#endif  // SWKERNEL_BASELINES_HPP_
