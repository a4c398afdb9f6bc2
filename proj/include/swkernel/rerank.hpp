// include/swkernel/rerank.hpp
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

#ifndef SWKERNEL_RERANK_HPP_
#define SWKERNEL_RERANK_HPP_

#include <optional>
#include <string>
#include <vector>

#include "swkernel/positional.hpp"
#include "swkernel/sequence.hpp"

namespace swk {

struct Candidate {
  std::string id;
  EmbeddingSequence sequence;
  double likelihood = 0.0;  // model score, higher is better
};

// An anchor sequence, candidates to rank against it, and the mixing weight
// between likelihood and similarity.
struct CandidateSet {
  EmbeddingSequence anchor;
  std::vector<Candidate> candidates;
  double alpha = 0.5;
};

struct ScoredCandidate {
  std::string id;
  double likelihood = 0.0;
  double similarity = 0.0;
  double combined = 0.0;
};

// Candidates in input order with their scores; winner_index points at the
// highest combined score (first one on ties).
struct RerankReport {
  std::string rule;
  double alpha = 0.5;
  std::vector<ScoredCandidate> candidates;
  std::size_t winner_index = 0;

  const ScoredCandidate& winner() const { return candidates[winner_index]; }
};

// Blends likelihood with the order-aware kernel:
// (1 - alpha) * likelihood + alpha * temporal_score(anchor, candidate).
// All candidates share one direction draw from kernel.seed.
RerankReport rerank_usw(const CandidateSet& set, const KernelConfig& kernel,
                        const PositionalConfig& positional);

// Additive cosine rule: likelihood + cosine of the mean-pooled vectors.
// alpha is ignored.
RerankReport rerank_cosine(const CandidateSet& set);

}  // namespace swk

#endif  // SWKERNEL_RERANK_HPP_
