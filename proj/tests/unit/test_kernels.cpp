// tests/unit/test_kernels.cpp
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

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "support/oracles.hpp"
#include "swkernel/kernels.hpp"
#include "swkernel/studies.hpp"

using swk::EmbeddingSequence;
using swk::InvalidArgument;
using swk::KernelConfig;
using swk::OrderParameter;
using swk::ProjectionSet;
using swk::sample_projections;

namespace {

KernelConfig config(double gamma, int projections, std::int64_t seed,
                    double p = 2.0) {
  KernelConfig cfg;
  cfg.gamma = gamma;
  cfg.p = OrderParameter(p);
  cfg.projections = projections;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("kernel config validation") {
  CHECK_THROWS_AS(swk::usw_rbf(EmbeddingSequence::from_rows({{0.0}}),
                               EmbeddingSequence::from_rows({{1.0}}),
                               config(0.0, 8, 1)),
                  InvalidArgument);
  CHECK_THROWS_AS(swk::usw_rbf(EmbeddingSequence::from_rows({{0.0}}),
                               EmbeddingSequence::from_rows({{1.0}}),
                               config(-1.0, 8, 1)),
                  InvalidArgument);
  CHECK_THROWS_AS(swk::usw_rbf(EmbeddingSequence::from_rows({{0.0}}),
                               EmbeddingSequence::from_rows({{1.0}}),
                               config(1.0, 0, 1)),
                  InvalidArgument);
}

TEST_CASE("one-dimensional sequences have a closed-form kernel") {
  // Both unit directions give transport cost 9, so every Monte Carlo size
  // returns exp(-9) exactly (up to one exp evaluation).
  const auto x = EmbeddingSequence::from_rows({{0.0}});
  const auto y = EmbeddingSequence::from_rows({{3.0}});
  for (const int projections : {1, 7, 50}) {
    const double k = swk::usw_rbf(x, y, config(1.0, projections, 5));
    CHECK(k == doctest::Approx(std::exp(-9.0)).epsilon(1e-15));
  }
  CHECK(swk::sw_rbf(x, y, config(1.0, 50, 5)) ==
        doctest::Approx(std::exp(-9.0)).epsilon(1e-15));
}

TEST_CASE("planar singletons recover the expected projected cost") {
  // For points (0,0) and (1,0) the projected squared cost is cos^2(theta),
  // whose mean over the circle is 1/2.
  const auto x = EmbeddingSequence::from_rows({{0.0, 0.0}});
  const auto y = EmbeddingSequence::from_rows({{1.0, 0.0}});
  const ProjectionSet proj = sample_projections(2, 20000, 12);
  const double estimate = swk::sliced_wasserstein(x, y, OrderParameter(2.0),
                                                  proj);
  // Var(cos^2) = 1/8, so four standard errors at L = 20000 is 0.010.
  CHECK(std::abs(estimate - 0.5) < 0.010);
}

TEST_CASE("planar singleton kernel matches the Bessel closed form") {
  // E[exp(-gamma cos^2 theta)] = exp(-gamma/2) I0(gamma/2).
  const auto x = EmbeddingSequence::from_rows({{0.0, 0.0}});
  const auto y = EmbeddingSequence::from_rows({{1.0, 0.0}});
  const double gamma = 1.0;
  const double closed_form =
      std::exp(-gamma / 2.0) * std::cyl_bessel_i(0.0, gamma / 2.0);
  const double estimate = swk::usw_rbf(x, y, config(gamma, 50000, 17));
  CHECK(std::abs(estimate - closed_form) < 0.01);
  CHECK(closed_form == doctest::Approx(0.6450352).epsilon(1e-6));
}

TEST_CASE("kernel values stay in (0, 1] and hit 1 on identical sequences") {
  const auto seqs = swk::random_walk_sequences(71, 6, 4, 2, 9);
  for (const auto& s : seqs) {
    CHECK(swk::usw_rbf(s, s, config(2.5, 32, 3)) == 1.0);
    for (const auto& t : seqs) {
      const double k = swk::usw_rbf(s, t, config(2.5, 32, 3));
      CHECK(k > 0.0);
      CHECK(k <= 1.0);
    }
  }
}

TEST_CASE("unbiased kernel is symmetric and deterministic in the seed") {
  const auto seqs = swk::random_walk_sequences(123, 2, 5, 4, 10);
  const auto& x = seqs[0];
  const auto& y = seqs[1];
  CHECK(swk::usw_rbf(x, y, config(1.5, 64, 9)) ==
        swk::usw_rbf(y, x, config(1.5, 64, 9)));
  CHECK(swk::usw_rbf(x, y, config(1.5, 64, 9)) ==
        swk::usw_rbf(x, y, config(1.5, 64, 9)));
  CHECK(swk::usw_rbf(x, y, config(1.5, 64, 9)) !=
        swk::usw_rbf(x, y, config(1.5, 64, 10)));
}

TEST_CASE("averaging outside the exponential never exceeds averaging inside") {
  // Jensen: mean(exp(-gamma w_l)) >= exp(-gamma mean(w_l)), strictly when
  // the projected costs vary.
  const auto seqs = swk::random_walk_sequences(2029, 20, 6, 3, 12);
  int strict = 0;
  for (std::size_t i = 0; i + 1 < seqs.size(); i += 2) {
    const KernelConfig cfg = config(2.0, 32, 77);
    const ProjectionSet proj = sample_projections(6, 32, 77);
    const double unbiased = swk::usw_rbf(seqs[i], seqs[i + 1], cfg, proj);
    const double plug_in = swk::sw_rbf(seqs[i], seqs[i + 1], cfg, proj);
    CHECK(unbiased >= plug_in);
    if (unbiased > plug_in + 1e-12) ++strict;
  }
  CHECK(strict >= 8);  // random walks essentially never project identically
}

TEST_CASE("kernel matrix matches pairwise kernel calls exactly") {
  const auto seqs = swk::random_walk_sequences(5150, 5, 3, 2, 8);
  const KernelConfig cfg = config(2.5, 48, 31);
  const swk::GramMatrix gram = swk::build_gram(seqs, cfg);
  const ProjectionSet proj = sample_projections(3, 48, 31);

  REQUIRE(gram.size() == 5);
  for (int i = 0; i < 5; ++i) {
    CHECK(gram.entries()(i, i) == 1.0);
    for (int j = 0; j < 5; ++j) {
      CHECK(gram.entries()(i, j) == gram.entries()(j, i));
      CHECK(gram.entries()(i, j) ==
            swk::usw_rbf(seqs[static_cast<std::size_t>(i)],
                         seqs[static_cast<std::size_t>(j)], cfg, proj));
    }
  }
}

TEST_CASE("kernel matrix of random walks is positive semidefinite") {
  const auto seqs = swk::random_walk_sequences(404, 6, 4, 2, 9);
  const swk::GramMatrix gram = swk::build_gram(seqs, config(2.5, 64, 2));
  CHECK(gram.min_eigenvalue() >= -1e-12);
}

TEST_CASE("duplicated sequences create an exactly repeated row") {
  auto seqs = swk::random_walk_sequences(88, 2, 3, 4, 6);
  seqs.push_back(seqs[0]);
  const swk::GramMatrix gram = swk::build_gram(seqs, config(1.0, 32, 6));
  for (int j = 0; j < gram.size(); ++j)
    CHECK(gram.entries()(0, j) == gram.entries()(2, j));
  // A repeated row forces a zero eigenvalue, but no negative ones.
  CHECK(std::abs(gram.min_eigenvalue()) < 1e-12);
}

TEST_CASE("single-sequence kernel matrix is the 1x1 identity") {
  const auto seqs = swk::random_walk_sequences(9, 1, 2, 3, 3);
  const swk::GramMatrix gram = swk::build_gram(seqs, config(0.5, 8, 1));
  CHECK(gram.size() == 1);
  CHECK(gram.entries()(0, 0) == 1.0);
  CHECK(gram.min_eigenvalue() == 1.0);
}

TEST_CASE("kernel rejects mismatched dimensions") {
  const auto x = EmbeddingSequence::from_rows({{0.0, 1.0}});
  const auto y = EmbeddingSequence::from_rows({{0.0}});
  CHECK_THROWS_AS(swk::usw_rbf(x, y, config(1.0, 8, 1)), InvalidArgument);

  const ProjectionSet proj = sample_projections(3, 8, 1);
  const auto z = EmbeddingSequence::from_rows({{0.0, 1.0}});
  CHECK_THROWS_AS(swk::usw_rbf(x, z, config(1.0, 8, 1), proj),
                  InvalidArgument);
}

TEST_CASE("gram labels default to positional names and validate sizes") {
  const auto seqs = swk::random_walk_sequences(1, 3, 2, 2, 4);
  const swk::GramMatrix gram = swk::build_gram(seqs, config(1.0, 8, 1));
  CHECK(gram.labels() == std::vector<std::string>{"seq0", "seq1", "seq2"});
  CHECK_THROWS_AS(swk::build_gram(seqs, {"a", "b"}, config(1.0, 8, 1)),
                  InvalidArgument);
  CHECK_THROWS_AS(swk::build_gram({}, config(1.0, 8, 1)), InvalidArgument);
}
