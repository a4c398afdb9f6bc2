// include/swkernel/io.hpp
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

#ifndef SWKERNEL_IO_HPP_
#define SWKERNEL_IO_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "swkernel/kernels.hpp"
#include "swkernel/rerank.hpp"
#include "swkernel/sequence.hpp"
#include "swkernel/studies.hpp"

namespace swk {

// A named collection of sequences sharing one embedding dimension, the
// on-disk unit the command line works with.
struct SequenceDocument {
  int dim = 0;
  std::vector<std::string> ids;
  std::vector<EmbeddingSequence> sequences;

  const EmbeddingSequence& find(const std::string& id) const;
};

// Document schema:
//   {"dim": d, "sequences": [{"id": "...", "vectors": [[...], ...]}, ...]}
// Ids must be unique and every vector must have length d.
SequenceDocument parse_sequence_document(const nlohmann::json& doc);
SequenceDocument load_sequence_document(const std::string& path);
nlohmann::ordered_json sequence_document_to_json(const SequenceDocument& doc);

// Candidate-set schema:
//   {"dim": d,
//    "anchor": [[...], ...],
//    "alpha": 0.5,                       (optional, defaults to 0.5)
//    "candidates": [{"id": "...", "likelihood": v,
//                    "vectors": [[...], ...]}, ...]}
CandidateSet parse_candidate_set(const nlohmann::json& doc);
CandidateSet load_candidate_set(const std::string& path);

nlohmann::ordered_json rerank_report_to_json(const RerankReport& report);
nlohmann::ordered_json gram_to_json(const GramMatrix& gram);
nlohmann::ordered_json study_to_json(const UnbiasednessResult& result);
nlohmann::ordered_json study_to_json(const RateResult& result);
nlohmann::ordered_json study_to_json(const PsdResult& result);

// Writes text to the path through a temporary file plus rename, so readers
// never observe a partial file.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace swk

#endif  // SWKERNEL_IO_HPP_
