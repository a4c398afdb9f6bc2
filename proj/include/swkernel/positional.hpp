// include/swkernel/positional.hpp
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

#ifndef SWKERNEL_POSITIONAL_HPP_
#define SWKERNEL_POSITIONAL_HPP_

#include <Eigen/Core>

#include "swkernel/kernels.hpp"
#include "swkernel/sequence.hpp"

namespace swk {

enum class PositionalMode { kNone, kAbsolute, kRotary };

// Positions are rescaled so the last element of any sequence lands at
// kPositionRange - 1, making sequences of different lengths comparable.
inline constexpr double kPositionRange = 100.0;

struct PositionalConfig {
  PositionalMode mode = PositionalMode::kRotary;
  int encoding_dim = 0;   // even and >= 2; 0 picks a default from the
                          // embedding dimension
  double beta = 1.0;      // weight of the appended encoding block
  double base = 10000.0;  // frequency base
  bool normalize_positions = true;

  void validate() const;
};

// Default encoding width for embeddings of dimension `dim`: min(dim, 64)
// rounded down to even, never below 2.
int default_encoding_dim(int dim);
int resolved_encoding_dim(const PositionalConfig& config, int dim);

// Sinusoidal encoding of one scalar position. Entry 2i is
// sin(position / base^(2i/k)), entry 2i+1 the matching cosine.
Eigen::VectorXd absolute_encoding(double position, int k, double base);

// Rotation-style encoding laid out as (cos, sin) pairs at the same
// frequencies, so the vector norm is a position-independent sqrt(k/2).
Eigen::VectorXd rotary_encoding(double position, int k, double base);

// Appends beta-weighted positional columns to every vector of the
// sequence. The result has dimension dim + k.
EmbeddingSequence augment(const EmbeddingSequence& sequence,
                          const PositionalConfig& config);

// Order-aware similarity: the unbiased kernel with squared ground cost over
// positionally augmented sequences (or the raw ones when mode is kNone).
// The overload without a projection set draws directions of the augmented
// dimension from config.seed.
double temporal_score(const EmbeddingSequence& x, const EmbeddingSequence& y,
                      const KernelConfig& kernel,
                      const PositionalConfig& positional,
                      const ProjectionSet& projections);
double temporal_score(const EmbeddingSequence& x, const EmbeddingSequence& y,
                      const KernelConfig& kernel,
                      const PositionalConfig& positional);

}  // namespace swk

#endif  // SWKERNEL_POSITIONAL_HPP_
