// src/python_bindings.cpp
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
// Thin numpy-facing bindings. Sequences cross the boundary as 2d arrays
// (rows are time steps); configuration crosses as keyword arguments.

#include <cstdint>
#include <string>
#include <vector>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "swkernel/baselines.hpp"
#include "swkernel/kernels.hpp"
#include "swkernel/positional.hpp"
#include "swkernel/rerank.hpp"
#include "swkernel/sequence.hpp"
#include "swkernel/studies.hpp"
#include "swkernel/wasserstein1d.hpp"

namespace py = pybind11;

namespace {

swk::EmbeddingSequence to_sequence(const Eigen::MatrixXd& rows) {
  return swk::EmbeddingSequence(rows);
}

swk::KernelConfig kernel_config(double gamma, double p, int projections,
                                std::int64_t seed) {
  swk::KernelConfig config;
  config.gamma = gamma;
  config.p = swk::OrderParameter(p);
  config.projections = projections;
  config.seed = seed;
  config.validate();
  return config;
}

swk::PositionalConfig positional_config(const std::string& mode,
                                        int encoding_dim, double beta,
                                        double base,
                                        bool normalize_positions) {
  swk::PositionalConfig config;
  if (mode == "none") {
    config.mode = swk::PositionalMode::kNone;
  } else if (mode == "absolute") {
    config.mode = swk::PositionalMode::kAbsolute;
  } else if (mode == "rotary") {
    config.mode = swk::PositionalMode::kRotary;
  } else {
    throw swk::InvalidArgument("mode must be none, absolute, or rotary");
  }
  config.encoding_dim = encoding_dim;
  config.beta = beta;
  config.base = base;
  config.normalize_positions = normalize_positions;
  config.validate();
  return config;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "sliced-Wasserstein sequence kernels";

  m.def(
      "wasserstein_1d",
      [](std::vector<double> a, std::vector<double> b, double p) {
        return swk::wasserstein_1d(std::move(a), std::move(b),
                                   swk::OrderParameter(p));
      },
      py::arg("a"), py::arg("b"), py::arg("p") = 2.0);

  m.def(
      "sliced_wasserstein",
      [](const Eigen::MatrixXd& x, const Eigen::MatrixXd& y, double p,
         int projections, std::int64_t seed) {
        return swk::sliced_wasserstein(to_sequence(x), to_sequence(y),
                                       kernel_config(1.0, p, projections, seed));
      },
      py::arg("x"), py::arg("y"), py::arg("p") = 2.0,
      py::arg("projections") = 50, py::arg("seed") = 0);

  m.def(
      "sw_rbf",
      [](const Eigen::MatrixXd& x, const Eigen::MatrixXd& y, double gamma,
         double p, int projections, std::int64_t seed) {
        return swk::sw_rbf(to_sequence(x), to_sequence(y),
                           kernel_config(gamma, p, projections, seed));
      },
      py::arg("x"), py::arg("y"), py::arg("gamma") = 2.5, py::arg("p") = 2.0,
      py::arg("projections") = 50, py::arg("seed") = 0);

  m.def(
      "usw_rbf",
      [](const Eigen::MatrixXd& x, const Eigen::MatrixXd& y, double gamma,
         double p, int projections, std::int64_t seed) {
        return swk::usw_rbf(to_sequence(x), to_sequence(y),
                            kernel_config(gamma, p, projections, seed));
      },
      py::arg("x"), py::arg("y"), py::arg("gamma") = 2.5, py::arg("p") = 2.0,
      py::arg("projections") = 50, py::arg("seed") = 0);

  m.def(
      "temporal_score",
      [](const Eigen::MatrixXd& x, const Eigen::MatrixXd& y, double gamma,
         int projections, std::int64_t seed, const std::string& mode,
         int encoding_dim, double beta, double base,
         bool normalize_positions) {
        return swk::temporal_score(
            to_sequence(x), to_sequence(y),
            kernel_config(gamma, 2.0, projections, seed),
            positional_config(mode, encoding_dim, beta, base,
                              normalize_positions));
      },
      py::arg("x"), py::arg("y"), py::arg("gamma") = 2.5,
      py::arg("projections") = 50, py::arg("seed") = 0,
      py::arg("mode") = "rotary", py::arg("encoding_dim") = 0,
      py::arg("beta") = 1.0, py::arg("base") = 10000.0,
      py::arg("normalize_positions") = true);

  m.def(
      "gram",
      [](const std::vector<Eigen::MatrixXd>& sequences, double gamma,
         double p, int projections, std::int64_t seed) {
        std::vector<swk::EmbeddingSequence> seqs;
        seqs.reserve(sequences.size());
        for (const auto& rows : sequences) seqs.push_back(to_sequence(rows));
        const swk::GramMatrix gram =
            swk::build_gram(seqs, kernel_config(gamma, p, projections, seed));
        py::dict out;
        out["matrix"] = gram.entries();
        out["labels"] = gram.labels();
        out["min_eigenvalue"] = gram.min_eigenvalue();
        return out;
      },
      py::arg("sequences"), py::arg("gamma") = 2.5, py::arg("p") = 2.0,
      py::arg("projections") = 50, py::arg("seed") = 0);

  m.def(
      "dtw",
      [](const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
        return swk::dtw(to_sequence(x), to_sequence(y));
      },
      py::arg("x"), py::arg("y"));

  m.def(
      "soft_dtw",
      [](const Eigen::MatrixXd& x, const Eigen::MatrixXd& y,
         double smoothing) {
        return swk::soft_dtw(to_sequence(x), to_sequence(y), smoothing);
      },
      py::arg("x"), py::arg("y"), py::arg("smoothing") = 1.0);

  m.def(
      "exact_wasserstein",
      [](const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
        return swk::exact_wasserstein(to_sequence(x), to_sequence(y));
      },
      py::arg("x"), py::arg("y"));

  m.def(
      "cosine_meanpool",
      [](const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
        return swk::cosine_meanpool(to_sequence(x), to_sequence(y));
      },
      py::arg("x"), py::arg("y"));

  m.def(
      "rerank",
      [](const Eigen::MatrixXd& anchor, const std::vector<std::string>& ids,
         const std::vector<Eigen::MatrixXd>& sequences,
         const std::vector<double>& likelihoods, double alpha,
         const std::string& rule, double gamma, int projections,
         std::int64_t seed, const std::string& mode, int encoding_dim,
         double beta, double base, bool normalize_positions) {
        if (ids.size() != sequences.size() ||
            ids.size() != likelihoods.size())
          throw swk::InvalidArgument(
              "ids, sequences, and likelihoods must have equal lengths");
        swk::CandidateSet set{to_sequence(anchor), {}, alpha};
        for (std::size_t i = 0; i < ids.size(); ++i)
          set.candidates.push_back(
              {ids[i], to_sequence(sequences[i]), likelihoods[i]});

        swk::RerankReport report;
        if (rule == "usw") {
          report = swk::rerank_usw(
              set, kernel_config(gamma, 2.0, projections, seed),
              positional_config(mode, encoding_dim, beta, base,
                                normalize_positions));
        } else if (rule == "cosine") {
          report = swk::rerank_cosine(set);
        } else {
          throw swk::InvalidArgument("rule must be usw or cosine");
        }

        py::list scored;
        for (const auto& c : report.candidates) {
          py::dict row;
          row["id"] = c.id;
          row["likelihood"] = c.likelihood;
          row["similarity"] = c.similarity;
          row["combined"] = c.combined;
          scored.append(row);
        }
        py::dict out;
        out["rule"] = report.rule;
        out["alpha"] = report.alpha;
        out["winner_id"] = report.winner().id;
        out["winner_index"] = report.winner_index;
        out["candidates"] = scored;
        return out;
      },
      py::arg("anchor"), py::arg("ids"), py::arg("sequences"),
      py::arg("likelihoods"), py::arg("alpha") = 0.5, py::arg("rule") = "usw",
      py::arg("gamma") = 2.5, py::arg("projections") = 50, py::arg("seed") = 0,
      py::arg("mode") = "rotary", py::arg("encoding_dim") = 0,
      py::arg("beta") = 1.0, py::arg("base") = 10000.0,
      py::arg("normalize_positions") = true);

  m.def(
      "random_walks",
      [](std::int64_t seed, int count, int dim, int len_lo, int len_hi) {
        const auto walks =
            swk::random_walk_sequences(seed, count, dim, len_lo, len_hi);
        std::vector<Eigen::MatrixXd> out;
        out.reserve(walks.size());
        for (const auto& walk : walks) out.push_back(walk.matrix());
        return out;
      },
      py::arg("seed"), py::arg("count") = 8, py::arg("dim") = 3,
      py::arg("len_lo") = 4, py::arg("len_hi") = 12);
}
