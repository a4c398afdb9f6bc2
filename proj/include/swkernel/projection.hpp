// include/swkernel/projection.hpp
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

#ifndef SWKERNEL_PROJECTION_HPP_
#define SWKERNEL_PROJECTION_HPP_

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "swkernel/sequence.hpp"

namespace swk {

// A batch of unit-norm projection directions drawn uniformly from the
// sphere. Row l of directions() is the l-th direction. Draws are a pure
// function of (dim, count, seed).
class ProjectionSet {
 public:
  ProjectionSet(Eigen::MatrixXd directions, std::int64_t seed);

  int dim() const { return static_cast<int>(directions_.cols()); }
  int count() const { return static_cast<int>(directions_.rows()); }
  const Eigen::MatrixXd& directions() const { return directions_; }
  Eigen::VectorXd direction(int l) const;
  std::int64_t seed() const { return seed_; }

 private:
  Eigen::MatrixXd directions_;
  std::int64_t seed_;
};

// Samples `count` directions uniformly from the unit sphere in R^dim by
// normalizing standard gaussian draws. dim == 1 yields exactly +1 or -1.
ProjectionSet sample_projections(int dim, int count, std::int64_t seed);

// Projects every vector of the sequence onto one direction, preserving
// order. The direction length must equal the sequence dimension.
std::vector<double> project_sequence(const EmbeddingSequence& sequence,
                                     const Eigen::VectorXd& direction);

}  // namespace swk

#endif  // SWKERNEL_PROJECTION_HPP_
