// src/kernels.cpp
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

#include "swkernel/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include <Eigen/Eigenvalues>

namespace swk {
namespace {

void check_pair(const EmbeddingSequence& x, const EmbeddingSequence& y,
                const ProjectionSet& projections) {
  detail::require(x.dim() == y.dim(),
                  "sequences must share one embedding dimension");
  detail::require(projections.dim() == x.dim(),
                  "projection dimension does not match the sequences");
}

}  // namespace

void KernelConfig::validate() const {
  detail::require(std::isfinite(gamma) && gamma > 0.0,
                  "kernel bandwidth gamma must be finite and > 0");
  detail::require(projections >= 1, "projection count must be >= 1");
}

GramMatrix::GramMatrix(Eigen::MatrixXd entries,
                       std::vector<std::string> labels)
    : entries_(std::move(entries)), labels_(std::move(labels)) {
  detail::require(entries_.rows() == entries_.cols(),
                  "kernel matrix must be square");
  detail::require(entries_.rows() >= 1, "kernel matrix must be non-empty");
  detail::require(
      static_cast<std::size_t>(entries_.rows()) == labels_.size(),
      "kernel matrix labels do not match its size");
}

double GramMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      entries_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double sliced_wasserstein(const EmbeddingSequence& x,
                          const EmbeddingSequence& y, OrderParameter p,
                          const ProjectionSet& projections) {
  check_pair(x, y, projections);
  double total = 0.0;
  for (int l = 0; l < projections.count(); ++l) {
    const Eigen::VectorXd dir = projections.direction(l);
    total += wasserstein_1d(project_sequence(x, dir), project_sequence(y, dir),
                            p);
  }
  return total / projections.count();
}

double sw_rbf(const EmbeddingSequence& x, const EmbeddingSequence& y,
              const KernelConfig& config, const ProjectionSet& projections) {
  config.validate();
  return std::exp(-config.gamma *
                  sliced_wasserstein(x, y, config.p, projections));
}

double usw_rbf(const EmbeddingSequence& x, const EmbeddingSequence& y,
               const KernelConfig& config, const ProjectionSet& projections) {
  config.validate();
  check_pair(x, y, projections);
  double total = 0.0;
  for (int l = 0; l < projections.count(); ++l) {
    const Eigen::VectorXd dir = projections.direction(l);
    const double cost = wasserstein_1d(project_sequence(x, dir),
                                       project_sequence(y, dir), config.p);
    total += std::exp(-config.gamma * cost);
  }
  return total / projections.count();
}

double sliced_wasserstein(const EmbeddingSequence& x,
                          const EmbeddingSequence& y,
                          const KernelConfig& config) {
  config.validate();
  return sliced_wasserstein(
      x, y, config.p,
      sample_projections(x.dim(), config.projections, config.seed));
}

double sw_rbf(const EmbeddingSequence& x, const EmbeddingSequence& y,
              const KernelConfig& config) {
  config.validate();
  return sw_rbf(x, y, config,
                sample_projections(x.dim(), config.projections, config.seed));
}

double usw_rbf(const EmbeddingSequence& x, const EmbeddingSequence& y,
               const KernelConfig& config) {
  config.validate();
  return usw_rbf(x, y, config,
                 sample_projections(x.dim(), config.projections, config.seed));
}

GramMatrix build_gram(const std::vector<EmbeddingSequence>& sequences,
                      std::vector<std::string> labels,
                      const KernelConfig& config) {
  config.validate();
  detail::require(!sequences.empty(), "kernel matrix needs >= 1 sequence");
  detail::require(sequences.size() == labels.size(),
                  "kernel matrix labels do not match the sequence count");
  const int dim = sequences.front().dim();
  for (const auto& s : sequences)
    detail::require(s.dim() == dim,
                    "sequences must share one embedding dimension");

  const ProjectionSet projections =
      sample_projections(dim, config.projections, config.seed);
  const int n = static_cast<int>(sequences.size());
  const int count = projections.count();

  // Sort each sequence's projections once; pairs then reuse them.
  std::vector<std::vector<std::vector<double>>> sorted(
      static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    sorted[static_cast<std::size_t>(i)].reserve(
        static_cast<std::size_t>(count));
    for (int l = 0; l < count; ++l) {
      std::vector<double> values =
          project_sequence(sequences[static_cast<std::size_t>(i)],
                           projections.direction(l));
      std::sort(values.begin(), values.end());
      sorted[static_cast<std::size_t>(i)].push_back(std::move(values));
    }
  }

  Eigen::MatrixXd entries(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double total = 0.0;
      for (int l = 0; l < count; ++l) {
        const double cost = detail::wasserstein_1d_sorted(
            sorted[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)],
            sorted[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)],
            config.p);
        total += std::exp(-config.gamma * cost);
      }
      const double value = total / count;
      entries(i, j) = value;
      entries(j, i) = value;
    }
  }
  return GramMatrix(std::move(entries), std::move(labels));
}

GramMatrix build_gram(const std::vector<EmbeddingSequence>& sequences,
                      const KernelConfig& config) {
  std::vector<std::string> labels;
  labels.reserve(sequences.size());
  for (std::size_t i = 0; i < sequences.size(); ++i)
    labels.push_back("seq" + std::to_string(i));
  return build_gram(sequences, std::move(labels), config);
}

}  // namespace swk
