// src/io.cpp
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

#include "swkernel/io.hpp"

#include <cstdio>
#include <fstream>
#include <unordered_set>
#include <utility>

namespace swk {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open file: " + path);
  return json::parse(in);  // parse errors propagate as json exceptions
}

EmbeddingSequence sequence_from_json(const json& vectors, int dim,
                                     const std::string& what) {
  detail::require(vectors.is_array() && !vectors.empty(),
                  what + ": 'vectors' must be a non-empty array");
  std::vector<std::vector<double>> rows;
  rows.reserve(vectors.size());
  for (const json& row : vectors) {
    detail::require(row.is_array() && static_cast<int>(row.size()) == dim,
                    what + ": every vector must have length 'dim'");
    rows.push_back(row.get<std::vector<double>>());
  }
  return EmbeddingSequence::from_rows(rows);
}

json vectors_to_json(const EmbeddingSequence& sequence) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < sequence.length(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < sequence.dim(); ++j)
      row.push_back(sequence.matrix()(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

int read_dim(const json& doc, const std::string& what) {
  detail::require(doc.is_object() && doc.contains("dim") &&
                      doc["dim"].is_number_integer(),
                  what + ": missing integer field 'dim'");
  const int dim = doc["dim"].get<int>();
  detail::require(dim >= 1, what + ": 'dim' must be >= 1");
  return dim;
}

}  // namespace

const EmbeddingSequence& SequenceDocument::find(const std::string& id) const {
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (ids[i] == id) return sequences[i];
  throw InvalidArgument("unknown sequence id: " + id);
}

SequenceDocument parse_sequence_document(const json& doc) {
  const std::string what = "sequence document";
  SequenceDocument out;
  out.dim = read_dim(doc, what);
  detail::require(doc.contains("sequences") && doc["sequences"].is_array() &&
                      !doc["sequences"].empty(),
                  what + ": missing non-empty array 'sequences'");
  std::unordered_set<std::string> seen;
  for (const json& entry : doc["sequences"]) {
    detail::require(entry.is_object() && entry.contains("id") &&
                        entry["id"].is_string(),
                    what + ": every sequence needs a string 'id'");
    const std::string id = entry["id"].get<std::string>();
    detail::require(seen.insert(id).second,
                    what + ": duplicate sequence id: " + id);
    detail::require(entry.contains("vectors"),
                    what + ": sequence '" + id + "' has no 'vectors'");
    out.ids.push_back(id);
    out.sequences.push_back(
        sequence_from_json(entry["vectors"], out.dim, what));
  }
  return out;
}

SequenceDocument load_sequence_document(const std::string& path) {
  return parse_sequence_document(load_json_file(path));
}

ordered_json sequence_document_to_json(const SequenceDocument& doc) {
  ordered_json out;
  out["dim"] = doc.dim;
  out["sequences"] = ordered_json::array();
  for (std::size_t i = 0; i < doc.ids.size(); ++i) {
    ordered_json entry;
    entry["id"] = doc.ids[i];
    entry["vectors"] = vectors_to_json(doc.sequences[i]);
    out["sequences"].push_back(std::move(entry));
  }
  return out;
}

CandidateSet parse_candidate_set(const json& doc) {
  const std::string what = "candidate document";
  const int dim = read_dim(doc, what);
  detail::require(doc.contains("anchor"), what + ": missing field 'anchor'");

  double alpha = 0.5;
  if (doc.contains("alpha")) {
    detail::require(doc["alpha"].is_number(),
                    what + ": 'alpha' must be a number");
    alpha = doc["alpha"].get<double>();
  }

  detail::require(doc.contains("candidates") && doc["candidates"].is_array() &&
                      !doc["candidates"].empty(),
                  what + ": missing non-empty array 'candidates'");

  CandidateSet set{sequence_from_json(doc["anchor"], dim, what), {}, alpha};
  for (const json& entry : doc["candidates"]) {
    detail::require(entry.is_object() && entry.contains("id") &&
                        entry["id"].is_string(),
                    what + ": every candidate needs a string 'id'");
    const std::string id = entry["id"].get<std::string>();
    detail::require(entry.contains("likelihood") &&
                        entry["likelihood"].is_number(),
                    what + ": candidate '" + id +
                        "' needs a numeric 'likelihood'");
    detail::require(entry.contains("vectors"),
                    what + ": candidate '" + id + "' has no 'vectors'");
    set.candidates.push_back({id, sequence_from_json(entry["vectors"], dim,
                                                     what),
                              entry["likelihood"].get<double>()});
  }
  return set;
}

CandidateSet load_candidate_set(const std::string& path) {
  return parse_candidate_set(load_json_file(path));
}

ordered_json rerank_report_to_json(const RerankReport& report) {
  ordered_json out;
  out["rule"] = report.rule;
  out["alpha"] = report.alpha;
  out["winner_id"] = report.winner().id;
  out["candidates"] = ordered_json::array();
  for (const ScoredCandidate& c : report.candidates) {
    ordered_json entry;
    entry["id"] = c.id;
    entry["likelihood"] = c.likelihood;
    entry["similarity"] = c.similarity;
    entry["combined"] = c.combined;
    out["candidates"].push_back(std::move(entry));
  }
  return out;
}

ordered_json gram_to_json(const GramMatrix& gram) {
  ordered_json out;
  out["labels"] = gram.labels();
  out["matrix"] = ordered_json::array();
  for (int i = 0; i < gram.size(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < gram.size(); ++j) row.push_back(gram.entries()(i, j));
    out["matrix"].push_back(std::move(row));
  }
  out["min_eigenvalue"] = gram.min_eigenvalue();
  return out;
}

ordered_json study_to_json(const UnbiasednessResult& result) {
  ordered_json out;
  out["study"] = "unbiasedness";
  out["replicates"] = result.replicates;
  out["cells"] = ordered_json::array();
  for (const UnbiasednessCell& cell : result.cells) {
    ordered_json entry;
    entry["gamma"] = cell.gamma;
    entry["reference"] = cell.reference;
    entry["mean"] = cell.mean;
    entry["stddev"] = cell.stddev;
    entry["standardized_deviation"] = cell.standardized_deviation;
    out["cells"].push_back(std::move(entry));
  }
  return out;
}

ordered_json study_to_json(const RateResult& result) {
  ordered_json out;
  out["study"] = "rate";
  out["gamma"] = result.gamma;
  out["reference"] = result.reference;
  out["replicates"] = result.replicates;
  out["cells"] = ordered_json::array();
  for (const RateCell& cell : result.cells) {
    ordered_json entry;
    entry["projections"] = cell.projections;
    entry["rmse"] = cell.rmse;
    out["cells"].push_back(std::move(entry));
  }
  if (result.degenerate) {
    out["slope"] = nullptr;  // rmse hit numerical zero
  } else {
    out["slope"] = result.slope;
  }
  out["degenerate"] = result.degenerate;
  return out;
}

ordered_json study_to_json(const PsdResult& result) {
  ordered_json out;
  out["study"] = "psd";
  out["count"] = result.count;
  out["projections"] = result.projections;
  out["cells"] = ordered_json::array();
  for (const PsdCell& cell : result.cells) {
    ordered_json entry;
    entry["gamma"] = cell.gamma;
    entry["min_eigenvalue"] = cell.min_eigenvalue;
    out["cells"].push_back(std::move(entry));
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidArgument("cannot write file: " + path);
    out << text;
    out.flush();
    if (!out) throw InvalidArgument("cannot write file: " + path);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw InvalidArgument("cannot move temporary onto: " + path);
  }
}

}  // namespace swk
