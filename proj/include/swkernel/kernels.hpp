// include/swkernel/kernels.hpp
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

#ifndef SWKERNEL_KERNELS_HPP_
#define SWKERNEL_KERNELS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "swkernel/projection.hpp"
#include "swkernel/sequence.hpp"
#include "swkernel/wasserstein1d.hpp"

namespace swk {

struct KernelConfig {
  double gamma = 2.5;    // bandwidth of exp(-gamma * transport cost)
  OrderParameter p{};    // ground cost exponent, default 2
  int projections = 50;  // Monte Carlo directions L
  std::int64_t seed = 0;

  void validate() const;
};

// Symmetric kernel matrix over a set of sequences plus the labels that
// generated it. Entries (i,j) and (j,i) are assigned from one evaluation,
// so the matrix is exactly symmetric.
class GramMatrix {
 public:
  GramMatrix(Eigen::MatrixXd entries, std::vector<std::string> labels);

  const Eigen::MatrixXd& entries() const { return entries_; }
  const std::vector<std::string>& labels() const { return labels_; }
  int size() const { return static_cast<int>(entries_.rows()); }
  double min_eigenvalue() const;

 private:
  Eigen::MatrixXd entries_;
  std::vector<std::string> labels_;
};

// Monte Carlo estimate of the sliced transport cost SW_p^p: the mean over
// the given directions of the exact 1d cost between the projected
// sequences.
double sliced_wasserstein(const EmbeddingSequence& x,
                          const EmbeddingSequence& y, OrderParameter p,
                          const ProjectionSet& projections);

// Plug-in kernel exp(-gamma * sliced_wasserstein): the estimate of the
// transport cost is computed first and exponentiated once.
double sw_rbf(const EmbeddingSequence& x, const EmbeddingSequence& y,
              const KernelConfig& config, const ProjectionSet& projections);

// Unbiased kernel: exponentiates per direction and averages,
// (1/L) * sum_l exp(-gamma * W_p^p(proj_l x, proj_l y)).
double usw_rbf(const EmbeddingSequence& x, const EmbeddingSequence& y,
               const KernelConfig& config, const ProjectionSet& projections);

// Convenience overloads that draw the directions from config.seed.
double sliced_wasserstein(const EmbeddingSequence& x,
                          const EmbeddingSequence& y,
                          const KernelConfig& config);
double sw_rbf(const EmbeddingSequence& x, const EmbeddingSequence& y,
              const KernelConfig& config);
double usw_rbf(const EmbeddingSequence& x, const EmbeddingSequence& y,
               const KernelConfig& config);

// Unbiased kernel matrix over the set, all entries sharing one direction
// draw from config.seed. Projections of each sequence are sorted once and
// reused across pairs.
GramMatrix build_gram(const std::vector<EmbeddingSequence>& sequences,
                      std::vector<std::string> labels,
                      const KernelConfig& config);
GramMatrix build_gram(const std::vector<EmbeddingSequence>& sequences,
                      const KernelConfig& config);

}  // namespace swk

#endif  // SWKERNEL_KERNELS_HPP_
