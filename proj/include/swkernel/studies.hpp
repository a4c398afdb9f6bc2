// include/swkernel/studies.hpp
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

#ifndef SWKERNEL_STUDIES_HPP_
#define SWKERNEL_STUDIES_HPP_

#include <cstdint>
#include <vector>

#include "swkernel/kernels.hpp"
#include "swkernel/sequence.hpp"

namespace swk {

// Named sub-streams of a base seed, so data, references and replicates
// never share random draws.
enum class SeedStream : std::uint64_t {
  kData = 1,
  kReference = 2,
  kReplicate = 3,
  kRateReplicate = 4,
  kGram = 5,
};

// Deterministic seed for (base seed, stream, index), dispersed through a
// 64-bit mixing chain.
std::int64_t derive_seed(std::int64_t seed, SeedStream stream,
                         std::uint64_t index);

// Gaussian random walks: `count` sequences of dimension `dim` whose lengths
// are drawn uniformly from [len_lo, len_hi], each the cumulative sum of
// standard normal steps.
std::vector<EmbeddingSequence> random_walk_sequences(std::int64_t seed,
                                                     int count, int dim,
                                                     int len_lo, int len_hi);

struct StudyConfig {
  int replicates = 200;
  std::vector<int> projection_grid{10, 50, 100};
  std::vector<double> gamma_grid{0.5, 1.0, 1.5, 2.0, 2.5, 3.0};
  std::int64_t seed = 0;
  int dim = 8;
  int len_x = 10;  // anchor pair lengths (also the length range of the
  int len_y = 12;  // kernel matrix study)
  int count = 8;   // sequences in the kernel matrix study
  OrderParameter p{};

  void validate() const;
};

struct UnbiasednessCell {
  double gamma = 0.0;
  double reference = 0.0;  // high-accuracy kernel value
  double mean = 0.0;       // mean of single-projection estimates
  double stddev = 0.0;     // sample standard deviation of the estimates
  double standardized_deviation = 0.0;  // (mean - reference) / std error
};

struct UnbiasednessResult {
  int replicates = 0;
  std::vector<UnbiasednessCell> cells;  // one per gamma
};

struct RateCell {
  int projections = 0;
  double rmse = 0.0;
};

struct RateResult {
  double gamma = 0.0;
  double reference = 0.0;
  int replicates = 0;
  std::vector<RateCell> cells;  // one per grid point
  double slope = 0.0;           // log rmse vs log L least-squares slope
  bool degenerate = false;      // an rmse hit numerical zero; slope unusable
};

struct PsdCell {
  double gamma = 0.0;
  double min_eigenvalue = 0.0;
};

struct PsdResult {
  int count = 0;
  int projections = 0;
  std::vector<PsdCell> cells;  // one per gamma
};

// High-accuracy value of the unbiased kernel. Dimension 1 is the closed
// form (a single direction up to sign); dimension 2 integrates over the
// angle with adaptive quadrature; higher dimensions fall back to a large
// Monte Carlo draw from the given seed.
double reference_kernel_value(const EmbeddingSequence& x,
                              const EmbeddingSequence& y, double gamma,
                              OrderParameter p, std::int64_t seed);

// Replicates single-projection kernel estimates against the reference for
// every gamma in the grid. An unbiased estimator keeps the standardized
// deviation within a few standard errors.
UnbiasednessResult unbiasedness_study(const StudyConfig& config);

// Root-mean-square error of the L-projection estimate across the projection
// grid, plus the fitted log-log slope (near -1/2 for Monte Carlo
// averaging). Uses the first gamma of the grid. Requires a grid of at
// least four sizes spanning two decades.
RateResult rate_study(const StudyConfig& config);

// Minimum eigenvalue of the kernel matrix over random-walk sequences for
// every gamma, using the largest grid entry as the projection count.
PsdResult psd_study(const StudyConfig& config);

}  // namespace swk

#endif  // SWKERNEL_STUDIES_HPP_
