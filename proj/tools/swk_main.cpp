// tools/swk_main.cpp
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
//
// swk: command line front end. Subcommands score, rerank, gram, study and
// gen all print a single JSON object to stdout. Exit codes: 0 success,
// 2 usage or argument errors, 3 malformed input files, 4 degenerate inputs.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "swkernel/baselines.hpp"
#include "swkernel/io.hpp"
#include "swkernel/kernels.hpp"
#include "swkernel/positional.hpp"
#include "swkernel/rerank.hpp"
#include "swkernel/studies.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitUsage = 2;
constexpr int kExitBadInput = 3;
constexpr int kExitDegenerate = 4;

std::int64_t default_seed() {
  if (const char* env = std::getenv("SWKERNEL_SEED")) {
    try {
      return std::stoll(env);
    } catch (const std::exception&) {
      throw swk::InvalidArgument(
          "SWKERNEL_SEED must be a 64-bit integer, got: " +
          std::string(env));
    }
  }
  return 0;
}

swk::PositionalMode parse_pe_mode(const std::string& name) {
  if (name == "none") return swk::PositionalMode::kNone;
  if (name == "absolute") return swk::PositionalMode::kAbsolute;
  return swk::PositionalMode::kRotary;
}

// Flags shared by score and rerank.
struct PeFlags {
  std::string mode = "none";
  int dim = 0;
  double beta = 1.0;
  bool raw_positions = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--pe", mode, "Positional encoding: none|absolute|rotary")
        ->check(CLI::IsMember({"none", "absolute", "rotary"}))
        ->capture_default_str();
    cmd->add_option("--pe-dim", dim,
                    "Encoding width (even, >= 2; 0 picks a default)")
        ->capture_default_str();
    cmd->add_option("--pe-beta", beta, "Weight of the encoding block")
        ->capture_default_str();
    cmd->add_flag("--pe-raw-positions", raw_positions,
                  "Encode raw indices instead of length-normalized positions");
  }

  swk::PositionalConfig config() const {
    swk::PositionalConfig out;
    out.mode = parse_pe_mode(mode);
    out.encoding_dim = dim;
    out.beta = beta;
    out.normalize_positions = !raw_positions;
    return out;
  }

  ordered_json to_json() const {
    ordered_json out;
    out["mode"] = mode;
    out["dim"] = dim;
    out["beta"] = beta;
    out["normalize_positions"] = !raw_positions;
    return out;
  }
};

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

int run(int argc, char** argv) {
  CLI::App app{"Sequence similarity kernels built on sliced optimal transport"};
  app.require_subcommand(1);

  // score ------------------------------------------------------------
  auto* score = app.add_subcommand(
      "score", "Score one pair of sequences from a document");
  std::string score_doc, score_id_a, score_id_b;
  std::string metric = "usw";
  double gamma = 2.5;
  double order = 2.0;
  int projections = 50;
  double sdtw_smoothing = 1.0;
  std::int64_t seed = default_seed();
  PeFlags score_pe;
  score->add_option("doc", score_doc, "Sequence document (JSON)")->required();
  score->add_option("id_a", score_id_a, "First sequence id")->required();
  score->add_option("id_b", score_id_b, "Second sequence id")->required();
  score
      ->add_option("--metric", metric,
                   "usw|sw-rbf|sw|dtw|sdtw|wasserstein|cosine")
      ->check(CLI::IsMember(
          {"usw", "sw-rbf", "sw", "dtw", "sdtw", "wasserstein", "cosine"}))
      ->capture_default_str();
  score->add_option("--gamma", gamma, "Kernel bandwidth")
      ->capture_default_str();
  score->add_option("--p", order, "Ground cost exponent")
      ->capture_default_str();
  score->add_option("--proj", projections, "Projection count")
      ->capture_default_str();
  score
      ->add_option("--sdtw-gamma", sdtw_smoothing,
                   "Smoothing of the sdtw metric")
      ->capture_default_str();
  score->add_option("--seed", seed, "Random seed (default $SWKERNEL_SEED or 0)");
  score_pe.attach(score);

  // rerank -----------------------------------------------------------
  auto* rerank = app.add_subcommand(
      "rerank", "Rerank a candidate document against its anchor");
  std::string rerank_doc;
  std::string rule = "usw";
  double rerank_gamma = 2.5;
  int rerank_projections = 50;
  double alpha = -1.0;  // negative means "take it from the document"
  std::int64_t rerank_seed = default_seed();
  PeFlags rerank_pe;
  rerank_pe.mode = "rotary";
  rerank->add_option("doc", rerank_doc, "Candidate document (JSON)")
      ->required();
  rerank->add_option("--rule", rule, "usw|cosine")
      ->check(CLI::IsMember({"usw", "cosine"}))
      ->capture_default_str();
  rerank->add_option("--alpha", alpha,
                     "Mixing weight; overrides the document value");
  rerank->add_option("--gamma", rerank_gamma, "Kernel bandwidth")
      ->capture_default_str();
  rerank->add_option("--proj", rerank_projections, "Projection count")
      ->capture_default_str();
  rerank->add_option("--seed", rerank_seed,
                     "Random seed (default $SWKERNEL_SEED or 0)");
  rerank_pe.attach(rerank);

  // gram ---------------------------------------------------------------
  auto* gram = app.add_subcommand(
      "gram", "Kernel matrix over every sequence of a document");
  std::string gram_doc;
  double gram_gamma = 2.5;
  double gram_order = 2.0;
  int gram_projections = 50;
  std::int64_t gram_seed = default_seed();
  gram->add_option("doc", gram_doc, "Sequence document (JSON)")->required();
  gram->add_option("--gamma", gram_gamma, "Kernel bandwidth")
      ->capture_default_str();
  gram->add_option("--p", gram_order, "Ground cost exponent")
      ->capture_default_str();
  gram->add_option("--proj", gram_projections, "Projection count")
      ->capture_default_str();
  gram->add_option("--seed", gram_seed,
                   "Random seed (default $SWKERNEL_SEED or 0)");

  // study --------------------------------------------------------------
  auto* study = app.add_subcommand(
      "study", "Statistical checks of the kernel estimator");
  std::string study_kind;
  int replicates = 0;  // 0 picks a per-kind default
  std::vector<int> l_grid;
  std::vector<double> gamma_grid;
  std::int64_t study_seed = default_seed();
  int study_dim = 8;
  int len_x = 10;
  int len_y = 12;
  int study_count = 8;
  double study_order = 2.0;
  study->add_option("kind", study_kind, "unbiasedness|rate|psd")
      ->required()
      ->check(CLI::IsMember({"unbiasedness", "rate", "psd"}));
  study->add_option("--replicates", replicates,
                    "Replicates per cell (default 2000, rate: 200)");
  study->add_option("--L-grid", l_grid,
                    "Projection counts (default per kind)");
  study->add_option("--gamma-grid", gamma_grid,
                    "Bandwidths (default 0.5 1.0 1.5 2.0 2.5 3.0)");
  study->add_option("--d", study_dim, "Embedding dimension")
      ->capture_default_str();
  study->add_option("--len-x", len_x, "Length of the first sequence")
      ->capture_default_str();
  study->add_option("--len-y", len_y, "Length of the second sequence")
      ->capture_default_str();
  study->add_option("--count", study_count,
                    "Sequences in the psd kernel matrix")
      ->capture_default_str();
  study->add_option("--p", study_order, "Ground cost exponent")
      ->capture_default_str();
  study->add_option("--seed", study_seed,
                    "Random seed (default $SWKERNEL_SEED or 0)");

  // gen ----------------------------------------------------------------
  auto* gen = app.add_subcommand(
      "gen", "Generate a random-walk sequence document");
  int gen_count = 8;
  int gen_dim = 8;
  int len_lo = 5;
  int len_hi = 15;
  std::string out_path = "-";
  std::int64_t gen_seed = default_seed();
  gen->add_option("--count", gen_count, "Number of sequences")
      ->capture_default_str();
  gen->add_option("--d", gen_dim, "Embedding dimension")
      ->capture_default_str();
  gen->add_option("--len-lo", len_lo, "Minimum length")->capture_default_str();
  gen->add_option("--len-hi", len_hi, "Maximum length")->capture_default_str();
  gen->add_option("--out", out_path, "Output path, '-' for stdout")
      ->capture_default_str();
  gen->add_option("--seed", gen_seed,
                  "Random seed (default $SWKERNEL_SEED or 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the parse error
    return code == 0 ? 0 : kExitUsage;
  }

  if (*score) {
    const swk::SequenceDocument doc = swk::load_sequence_document(score_doc);
    const swk::EmbeddingSequence& a = doc.find(score_id_a);
    const swk::EmbeddingSequence& b = doc.find(score_id_b);

    swk::KernelConfig kernel;
    kernel.gamma = gamma;
    kernel.p = swk::OrderParameter(order);
    kernel.projections = projections;
    kernel.seed = seed;
    const swk::PositionalConfig positional = score_pe.config();

    // The positional flags transform the inputs of the distribution
    // metrics; alignment and pooling metrics always see raw embeddings.
    const bool augmented = positional.mode != swk::PositionalMode::kNone;
    const swk::EmbeddingSequence ka =
        augmented ? swk::augment(a, positional) : a;
    const swk::EmbeddingSequence kb =
        augmented ? swk::augment(b, positional) : b;

    double value = 0.0;
    if (metric == "usw") {
      value = swk::usw_rbf(ka, kb, kernel);
    } else if (metric == "sw-rbf") {
      value = swk::sw_rbf(ka, kb, kernel);
    } else if (metric == "sw") {
      value = swk::sliced_wasserstein(ka, kb, kernel);
    } else if (metric == "dtw") {
      value = swk::dtw(a, b);
    } else if (metric == "sdtw") {
      value = swk::soft_dtw(a, b, sdtw_smoothing);
    } else if (metric == "wasserstein") {
      value = swk::exact_wasserstein(ka, kb);
    } else {
      value = swk::cosine_meanpool(a, b);
    }

    ordered_json out;
    out["metric"] = metric;
    out["id_a"] = score_id_a;
    out["id_b"] = score_id_b;
    out["value"] = value;
    ordered_json config;
    config["gamma"] = gamma;
    config["p"] = order;
    config["projections"] = projections;
    config["seed"] = seed;
    config["pe"] = score_pe.to_json();
    if (metric == "sdtw") config["sdtw_gamma"] = sdtw_smoothing;
    out["config"] = config;
    emit(out);
    return 0;
  }

  if (*rerank) {
    swk::CandidateSet set = swk::load_candidate_set(rerank_doc);
    if (alpha >= 0.0) set.alpha = alpha;

    swk::RerankReport report;
    swk::KernelConfig kernel;
    kernel.gamma = rerank_gamma;
    kernel.projections = rerank_projections;
    kernel.seed = rerank_seed;
    const swk::PositionalConfig positional = rerank_pe.config();
    if (rule == "usw") {
      report = swk::rerank_usw(set, kernel, positional);
    } else {
      report = swk::rerank_cosine(set);
    }

    ordered_json out = swk::rerank_report_to_json(report);
    ordered_json config;
    config["gamma"] = rerank_gamma;
    config["projections"] = rerank_projections;
    config["seed"] = rerank_seed;
    config["pe"] = rerank_pe.to_json();
    out["config"] = config;
    emit(out);
    return 0;
  }

  if (*gram) {
    const swk::SequenceDocument doc = swk::load_sequence_document(gram_doc);
    swk::KernelConfig kernel;
    kernel.gamma = gram_gamma;
    kernel.p = swk::OrderParameter(gram_order);
    kernel.projections = gram_projections;
    kernel.seed = gram_seed;
    const swk::GramMatrix matrix =
        swk::build_gram(doc.sequences, doc.ids, kernel);

    ordered_json out = swk::gram_to_json(matrix);
    ordered_json config;
    config["gamma"] = gram_gamma;
    config["p"] = gram_order;
    config["projections"] = gram_projections;
    config["seed"] = gram_seed;
    out["config"] = config;
    emit(out);
    return 0;
  }

  if (*study) {
    swk::StudyConfig config;
    config.replicates = replicates > 0
                            ? replicates
                            : (study_kind == "rate" ? 200 : 2000);
    if (!l_grid.empty()) {
      config.projection_grid = l_grid;
    } else if (study_kind == "rate") {
      config.projection_grid = {4, 16, 64, 256, 1024};
    } else if (study_kind == "psd") {
      config.projection_grid = {512};
    }
    if (!gamma_grid.empty()) config.gamma_grid = gamma_grid;
    config.seed = study_seed;
    config.dim = study_dim;
    config.len_x = len_x;
    config.len_y = len_y;
    config.count = study_count;
    config.p = swk::OrderParameter(study_order);

    ordered_json out;
    if (study_kind == "unbiasedness") {
      out = swk::study_to_json(swk::unbiasedness_study(config));
    } else if (study_kind == "rate") {
      out = swk::study_to_json(swk::rate_study(config));
    } else {
      out = swk::study_to_json(swk::psd_study(config));
    }
    ordered_json cfg;
    cfg["seed"] = config.seed;
    cfg["dim"] = config.dim;
    cfg["len_x"] = config.len_x;
    cfg["len_y"] = config.len_y;
    cfg["p"] = study_order;
    cfg["projection_grid"] = config.projection_grid;
    cfg["gamma_grid"] = config.gamma_grid;
    out["config"] = cfg;
    emit(out);
    return 0;
  }

  // gen
  swk::SequenceDocument doc;
  doc.dim = gen_dim;
  doc.sequences =
      swk::random_walk_sequences(gen_seed, gen_count, gen_dim, len_lo, len_hi);
  for (std::size_t i = 0; i < doc.sequences.size(); ++i)
    doc.ids.push_back("seq" + std::to_string(i));
  const std::string text = swk::sequence_document_to_json(doc).dump(2) + "\n";
  if (out_path == "-") {
    std::cout << text;
  } else {
    swk::write_text_file(out_path, text);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const swk::DegenerateInput& e) {
    std::cerr << "degenerate input: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const swk::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
