// src/projection.cpp
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

#include "swkernel/projection.hpp"

#include <random>
#include <utility>

namespace swk {

ProjectionSet::ProjectionSet(Eigen::MatrixXd directions, std::int64_t seed)
    : directions_(std::move(directions)), seed_(seed) {
  detail::require(directions_.rows() >= 1 && directions_.cols() >= 1,
                  "projection set must hold at least one direction");
}

Eigen::VectorXd ProjectionSet::direction(int l) const {
  detail::require(l >= 0 && l < count(), "projection index out of range");
  return directions_.row(l).transpose();
}

ProjectionSet sample_projections(int dim, int count, std::int64_t seed) {
  detail::require(dim >= 1, "projection dimension must be >= 1");
  detail::require(count >= 1, "projection count must be >= 1");

  std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
  std::normal_distribution<double> gauss(0.0, 1.0);

  Eigen::MatrixXd dirs(count, dim);
  for (int l = 0; l < count; ++l) {
    double norm = 0.0;
    do {
      for (int j = 0; j < dim; ++j) dirs(l, j) = gauss(rng);
      norm = dirs.row(l).norm();
    } while (norm == 0.0);
    if (dim == 1) {
      dirs(l, 0) = dirs(l, 0) > 0.0 ? 1.0 : -1.0;
    } else {
      dirs.row(l) /= norm;
    }
  }
  return ProjectionSet(std::move(dirs), seed);
}

std::vector<double> project_sequence(const EmbeddingSequence& sequence,
                                     const Eigen::VectorXd& direction) {
  detail::require(direction.size() == sequence.dim(),
                  "projection direction does not match sequence dimension");
  const Eigen::VectorXd values = sequence.matrix() * direction;
  return std::vector<double>(values.data(), values.data() + values.size());
}

}  // namespace swk
