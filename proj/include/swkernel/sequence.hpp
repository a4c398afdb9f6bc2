// include/swkernel/sequence.hpp
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

#ifndef SWKERNEL_SEQUENCE_HPP_
#define SWKERNEL_SEQUENCE_HPP_

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "swkernel/error.hpp"

namespace swk {

// Exponent of the ground cost |a - b|^p. Must be finite and >= 1.
class OrderParameter {
 public:
  OrderParameter() = default;  // p = 2
  explicit OrderParameter(double value);

  double value() const { return value_; }

 private:
  double value_ = 2.0;
};

// An ordered, non-empty sequence of embedding vectors sharing one dimension.
// Row n of matrix() is the n-th vector. All entries must be finite.
class EmbeddingSequence {
 public:
  explicit EmbeddingSequence(Eigen::MatrixXd vectors);

  static EmbeddingSequence from_rows(
      const std::vector<std::vector<double>>& rows);

  int length() const { return static_cast<int>(vectors_.rows()); }
  int dim() const { return static_cast<int>(vectors_.cols()); }
  const Eigen::MatrixXd& matrix() const { return vectors_; }

 private:
  Eigen::MatrixXd vectors_;
};

}  // namespace swk

#endif  // SWKERNEL_SEQUENCE_HPP_
