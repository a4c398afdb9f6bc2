// src/rerank.cpp
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

#include "swkernel/rerank.hpp"

#include <cmath>
#include <functional>
#include <unordered_set>
#include <utility>

#include "swkernel/baselines.hpp"

namespace swk {
namespace {

void check_candidate_set(const CandidateSet& set) {
  detail::require(!set.candidates.empty(),
                  "candidate set must contain at least one candidate");
  detail::require(std::isfinite(set.alpha) && set.alpha >= 0.0 &&
                      set.alpha <= 1.0,
                  "mixing weight alpha must lie in [0, 1]");
  std::unordered_set<std::string> seen;
  for (const Candidate& c : set.candidates) {
    detail::require(seen.insert(c.id).second,
                    "duplicate candidate id: " + c.id);
    detail::require(c.sequence.dim() == set.anchor.dim(),
                    "candidate '" + c.id +
                        "' does not match the anchor dimension");
    detail::require(std::isfinite(c.likelihood),
                    "candidate '" + c.id + "' has a non-finite likelihood");
  }
}

RerankReport score_all(const CandidateSet& set, const std::string& rule,
                       double alpha,
                       const std::function<double(const Candidate&)>& similarity,
                       const std::function<double(double, double)>& combine) {
  RerankReport report;
  report.rule = rule;
  report.alpha = alpha;
  report.candidates.reserve(set.candidates.size());
  for (const Candidate& c : set.candidates) {
    ScoredCandidate scored;
    scored.id = c.id;
    scored.likelihood = c.likelihood;
    scored.similarity = similarity(c);
    scored.combined = combine(c.likelihood, scored.similarity);
    if (!report.candidates.empty() &&
        scored.combined > report.candidates[report.winner_index].combined) {
      report.winner_index = report.candidates.size();
    }
    report.candidates.push_back(std::move(scored));
  }
  return report;
}

}  // namespace

RerankReport rerank_usw(const CandidateSet& set, const KernelConfig& kernel,
                        const PositionalConfig& positional) {
  check_candidate_set(set);
  kernel.validate();
  positional.validate();

  const int dim = set.anchor.dim();
  const int proj_dim =
      positional.mode == PositionalMode::kNone
          ? dim
          : dim + resolved_encoding_dim(positional, dim);
  const ProjectionSet projections =
      sample_projections(proj_dim, kernel.projections, kernel.seed);

  const double alpha = set.alpha;
  return score_all(
      set, "usw", alpha,
      [&](const Candidate& c) {
        return temporal_score(set.anchor, c.sequence, kernel, positional,
                              projections);
      },
      [alpha](double likelihood, double similarity) {
        return (1.0 - alpha) * likelihood + alpha * similarity;
      });
}

RerankReport rerank_cosine(const CandidateSet& set) {
  check_candidate_set(set);
  return score_all(
      set, "cosine", set.alpha,
      [&](const Candidate& c) {
        return cosine_meanpool(set.anchor, c.sequence);
      },
      [](double likelihood, double similarity) {
        return likelihood + similarity;
      });
}

}  // namespace swk
