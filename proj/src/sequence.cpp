// src/sequence.cpp
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

#include "swkernel/sequence.hpp"

#include <cmath>

namespace swk {

OrderParameter::OrderParameter(double value) : value_(value) {
  detail::require(std::isfinite(value) && value >= 1.0,
                  "order parameter p must be finite and >= 1");
}

EmbeddingSequence::EmbeddingSequence(Eigen::MatrixXd vectors)
    : vectors_(std::move(vectors)) {
  detail::require(vectors_.rows() >= 1,
                  "embedding sequence must contain at least one vector");
  detail::require(vectors_.cols() >= 1,
                  "embedding vectors must have dimension >= 1");
  detail::require(vectors_.allFinite(),
                  "embedding sequence contains a non-finite entry");
}

EmbeddingSequence EmbeddingSequence::from_rows(
    const std::vector<std::vector<double>>& rows) {
  detail::require(!rows.empty(),
                  "embedding sequence must contain at least one vector");
  const std::size_t dim = rows.front().size();
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    detail::require(rows[i].size() == dim,
                    "embedding sequence rows have inconsistent dimensions");
    for (std::size_t j = 0; j < dim; ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          rows[i][j];
    }
  }
  return EmbeddingSequence(std::move(m));
}

}  // namespace swk
