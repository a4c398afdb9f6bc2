// src/positional.cpp
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

#include "swkernel/positional.hpp"

#include <cmath>
#include <utility>

namespace swk {
namespace {

void check_encoding_args(double position, int k, double base) {
  detail::require(std::isfinite(position) && position >= 0.0,
                  "position must be finite and >= 0");
  detail::require(k >= 2 && k % 2 == 0,
                  "encoding dimension must be even and >= 2");
  detail::require(std::isfinite(base) && base > 0.0,
                  "encoding base must be finite and > 0");
}

}  // namespace

void PositionalConfig::validate() const {
  detail::require(encoding_dim == 0 ||
                      (encoding_dim >= 2 && encoding_dim % 2 == 0),
                  "encoding dimension must be even and >= 2 (or 0 for auto)");
  detail::require(std::isfinite(beta) && beta >= 0.0,
                  "encoding weight beta must be finite and >= 0");
  detail::require(std::isfinite(base) && base > 0.0,
                  "encoding base must be finite and > 0");
}

int default_encoding_dim(int dim) {
  detail::require(dim >= 1, "embedding dimension must be >= 1");
  int k = dim < 64 ? dim : 64;
  k -= k % 2;
  return k < 2 ? 2 : k;
}

int resolved_encoding_dim(const PositionalConfig& config, int dim) {
  config.validate();
  return config.encoding_dim == 0 ? default_encoding_dim(dim)
                                  : config.encoding_dim;
}

Eigen::VectorXd absolute_encoding(double position, int k, double base) {
  check_encoding_args(position, k, base);
  Eigen::VectorXd out(k);
  for (int i = 0; i < k / 2; ++i) {
    const double freq = std::pow(base, -2.0 * i / k);
    out[2 * i] = std::sin(position * freq);
    out[2 * i + 1] = std::cos(position * freq);
  }
  return out;
}

Eigen::VectorXd rotary_encoding(double position, int k, double base) {
  check_encoding_args(position, k, base);
  Eigen::VectorXd out(k);
  for (int i = 0; i < k / 2; ++i) {
    const double angle = position * std::pow(base, -2.0 * i / k);
    out[2 * i] = std::cos(angle);
    out[2 * i + 1] = std::sin(angle);
  }
  return out;
}

EmbeddingSequence augment(const EmbeddingSequence& sequence,
                          const PositionalConfig& config) {
  config.validate();
  detail::require(config.mode != PositionalMode::kNone,
                  "augment needs a positional mode");
  const int n = sequence.length();
  const int d = sequence.dim();
  const int k = resolved_encoding_dim(config, d);

  Eigen::MatrixXd out(n, d + k);
  out.leftCols(d) = sequence.matrix();
  for (int i = 0; i < n; ++i) {
    double position = static_cast<double>(i);
    if (config.normalize_positions) {
      position = n == 1 ? 0.0
                        : position * (kPositionRange - 1.0) /
                              static_cast<double>(n - 1);
    }
    const Eigen::VectorXd enc =
        config.mode == PositionalMode::kAbsolute
            ? absolute_encoding(position, k, config.base)
            : rotary_encoding(position, k, config.base);
    out.row(i).tail(k) = config.beta * enc.transpose();
  }
  return EmbeddingSequence(std::move(out));
}

double temporal_score(const EmbeddingSequence& x, const EmbeddingSequence& y,
                      const KernelConfig& kernel,
                      const PositionalConfig& positional,
                      const ProjectionSet& projections) {
  kernel.validate();
  positional.validate();
  detail::require(x.dim() == y.dim(),
                  "sequences must share one embedding dimension");
  KernelConfig cfg = kernel;
  cfg.p = OrderParameter(2.0);  // squared ground cost splits over blocks
  if (positional.mode == PositionalMode::kNone)
    return usw_rbf(x, y, cfg, projections);
  return usw_rbf(augment(x, positional), augment(y, positional), cfg,
                 projections);
}

double temporal_score(const EmbeddingSequence& x, const EmbeddingSequence& y,
                      const KernelConfig& kernel,
                      const PositionalConfig& positional) {
  kernel.validate();
  positional.validate();
  detail::require(x.dim() == y.dim(),
                  "sequences must share one embedding dimension");
  const int dim = positional.mode == PositionalMode::kNone
                      ? x.dim()
                      : x.dim() + resolved_encoding_dim(positional, x.dim());
  return temporal_score(
      x, y, kernel, positional,
      sample_projections(dim, kernel.projections, kernel.seed));
}

}  // namespace swk
