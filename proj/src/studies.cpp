// src/studies.cpp
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

#include "swkernel/studies.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <utility>

#include "swkernel/projection.hpp"
#include "swkernel/wasserstein1d.hpp"

namespace swk {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kReferenceProjections = 100000;

// Below this relative spread the replicate estimates are numerically
// constant (d = 1 collapses every direction to a sign) and standardized
// statistics would divide by rounding noise.
constexpr double kNumericallyExact = 1e-13;

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

EmbeddingSequence gaussian_walk(std::mt19937_64& rng, int length, int dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd m(length, dim);
  Eigen::RowVectorXd position = Eigen::RowVectorXd::Zero(dim);
  for (int i = 0; i < length; ++i) {
    for (int j = 0; j < dim; ++j) position[j] += gauss(rng);
    m.row(i) = position;
  }
  return EmbeddingSequence(std::move(m));
}

std::pair<EmbeddingSequence, EmbeddingSequence> study_pair(
    const StudyConfig& config) {
  std::mt19937_64 rng_x(static_cast<std::uint64_t>(
      derive_seed(config.seed, SeedStream::kData, 0)));
  std::mt19937_64 rng_y(static_cast<std::uint64_t>(
      derive_seed(config.seed, SeedStream::kData, 1)));
  return {gaussian_walk(rng_x, config.len_x, config.dim),
          gaussian_walk(rng_y, config.len_y, config.dim)};
}

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double fa, double b, double fb, double m, double fm,
                        double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adaptive_simpson(f, a, fa, m, fm, lm, flm, left, 0.5 * tol,
                          depth - 1) +
         adaptive_simpson(f, m, fm, b, fb, rm, frm, right, 0.5 * tol,
                          depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(f, a, fa, b, fb, m, fm, whole, tol, 48);
}

double fitted_slope(const std::vector<double>& us,
                    const std::vector<double>& vs) {
  const double n = static_cast<double>(us.size());
  double mean_u = 0.0, mean_v = 0.0;
  for (std::size_t i = 0; i < us.size(); ++i) {
    mean_u += us[i];
    mean_v += vs[i];
  }
  mean_u /= n;
  mean_v /= n;
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < us.size(); ++i) {
    num += (us[i] - mean_u) * (vs[i] - mean_v);
    den += (us[i] - mean_u) * (us[i] - mean_u);
  }
  return num / den;
}

}  // namespace

std::int64_t derive_seed(std::int64_t seed, SeedStream stream,
                         std::uint64_t index) {
  std::uint64_t h = mix64(static_cast<std::uint64_t>(seed));
  h = mix64(h ^ static_cast<std::uint64_t>(stream));
  h = mix64(h ^ index);
  return static_cast<std::int64_t>(h);
}

std::vector<EmbeddingSequence> random_walk_sequences(std::int64_t seed,
                                                     int count, int dim,
                                                     int len_lo, int len_hi) {
  detail::require(count >= 1, "sequence count must be >= 1");
  detail::require(dim >= 1, "embedding dimension must be >= 1");
  detail::require(len_lo >= 1 && len_hi >= len_lo,
                  "length range must satisfy 1 <= len_lo <= len_hi");
  std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
  std::uniform_int_distribution<int> length(len_lo, len_hi);
  std::vector<EmbeddingSequence> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(gaussian_walk(rng, length(rng), dim));
  return out;
}

void StudyConfig::validate() const {
  detail::require(replicates >= 2, "study needs at least two replicates");
  detail::require(!projection_grid.empty(), "projection grid must be non-empty");
  for (const int l : projection_grid)
    detail::require(l >= 1, "projection counts must be >= 1");
  detail::require(!gamma_grid.empty(), "gamma grid must be non-empty");
  for (const double gamma : gamma_grid)
    detail::require(std::isfinite(gamma) && gamma > 0.0,
                    "gamma grid entries must be finite and > 0");
  detail::require(dim >= 1, "embedding dimension must be >= 1");
  detail::require(len_x >= 1 && len_y >= 1, "sequence lengths must be >= 1");
  detail::require(count >= 1, "sequence count must be >= 1");
}

double reference_kernel_value(const EmbeddingSequence& x,
                              const EmbeddingSequence& y, double gamma,
                              OrderParameter p, std::int64_t seed) {
  detail::require(x.dim() == y.dim(),
                  "sequences must share one embedding dimension");
  detail::require(std::isfinite(gamma) && gamma > 0.0,
                  "kernel bandwidth gamma must be finite and > 0");
  const int dim = x.dim();

  if (dim == 1) {
    // A unit direction is +-1 and the transport cost is sign-invariant.
    Eigen::VectorXd dir(1);
    dir << 1.0;
    const double cost =
        wasserstein_1d(project_sequence(x, dir), project_sequence(y, dir), p);
    return std::exp(-gamma * cost);
  }

  if (dim == 2) {
    // Mean over the circle; opposite directions give equal costs, so half
    // the circle carries the full average.
    const auto f = [&](double theta) {
      Eigen::VectorXd dir(2);
      dir << std::cos(theta), std::sin(theta);
      const double cost = wasserstein_1d(project_sequence(x, dir),
                                         project_sequence(y, dir), p);
      return std::exp(-gamma * cost);
    };
    return integrate(f, 0.0, kPi, 1e-12) / kPi;
  }

  KernelConfig config;
  config.gamma = gamma;
  config.p = p;
  config.projections = kReferenceProjections;
  config.seed = seed;
  return usw_rbf(x, y, config,
                 sample_projections(dim, kReferenceProjections, seed));
}

UnbiasednessResult unbiasedness_study(const StudyConfig& config) {
  config.validate();
  const auto [x, y] = study_pair(config);

  UnbiasednessResult result;
  result.replicates = config.replicates;
  std::vector<double> estimates(static_cast<std::size_t>(config.replicates));
  for (const double gamma : config.gamma_grid) {
    const double reference = reference_kernel_value(
        x, y, gamma, config.p,
        derive_seed(config.seed, SeedStream::kReference, 0));

    KernelConfig kernel;
    kernel.gamma = gamma;
    kernel.p = config.p;
    kernel.projections = 1;
    for (int r = 0; r < config.replicates; ++r) {
      kernel.seed = derive_seed(config.seed, SeedStream::kReplicate,
                                static_cast<std::uint64_t>(r));
      estimates[static_cast<std::size_t>(r)] =
          usw_rbf(x, y, kernel, sample_projections(config.dim, 1, kernel.seed));
    }

    double mean = 0.0;
    for (const double e : estimates) mean += e;
    mean /= config.replicates;
    double ss = 0.0;
    for (const double e : estimates) ss += (e - mean) * (e - mean);
    const double stddev = std::sqrt(ss / (config.replicates - 1));

    UnbiasednessCell cell;
    cell.gamma = gamma;
    cell.reference = reference;
    cell.mean = mean;
    cell.stddev = stddev;
    if (stddev <= kNumericallyExact) {
      cell.standardized_deviation =
          std::abs(mean - reference) <= kNumericallyExact
              ? 0.0
              : std::numeric_limits<double>::infinity();
    } else {
      cell.standardized_deviation =
          (mean - reference) / (stddev / std::sqrt(config.replicates));
    }
    result.cells.push_back(cell);
  }
  return result;
}

RateResult rate_study(const StudyConfig& config) {
  config.validate();
  detail::require(config.projection_grid.size() >= 4,
                  "rate study needs at least four projection counts");
  detail::require(std::is_sorted(config.projection_grid.begin(),
                                 config.projection_grid.end()),
                  "rate study projection grid must be sorted ascending");
  detail::require(config.projection_grid.back() >=
                      100 * config.projection_grid.front(),
                  "rate study projection grid must span two decades");

  const auto [x, y] = study_pair(config);
  const double gamma = config.gamma_grid.front();

  RateResult result;
  result.gamma = gamma;
  result.replicates = config.replicates;
  result.reference = reference_kernel_value(
      x, y, gamma, config.p,
      derive_seed(config.seed, SeedStream::kReference, 0));

  KernelConfig kernel;
  kernel.gamma = gamma;
  kernel.p = config.p;
  for (std::size_t gi = 0; gi < config.projection_grid.size(); ++gi) {
    const int count = config.projection_grid[gi];
    kernel.projections = count;
    double sse = 0.0;
    for (int r = 0; r < config.replicates; ++r) {
      kernel.seed = derive_seed(
          config.seed, SeedStream::kRateReplicate,
          gi * static_cast<std::uint64_t>(config.replicates) +
              static_cast<std::uint64_t>(r));
      const double estimate = usw_rbf(
          x, y, kernel, sample_projections(config.dim, count, kernel.seed));
      sse += (estimate - result.reference) * (estimate - result.reference);
    }
    RateCell cell;
    cell.projections = count;
    cell.rmse = std::sqrt(sse / config.replicates);
    result.cells.push_back(cell);
    if (cell.rmse <= kNumericallyExact) result.degenerate = true;
  }

  if (result.degenerate) {
    result.slope = std::numeric_limits<double>::quiet_NaN();
  } else {
    std::vector<double> log_l, log_rmse;
    for (const RateCell& cell : result.cells) {
      log_l.push_back(std::log(static_cast<double>(cell.projections)));
      log_rmse.push_back(std::log(cell.rmse));
    }
    result.slope = fitted_slope(log_l, log_rmse);
  }
  return result;
}

PsdResult psd_study(const StudyConfig& config) {
  config.validate();
  const std::vector<EmbeddingSequence> sequences = random_walk_sequences(
      derive_seed(config.seed, SeedStream::kData, 0), config.count, config.dim,
      std::min(config.len_x, config.len_y),
      std::max(config.len_x, config.len_y));

  PsdResult result;
  result.count = config.count;
  result.projections = *std::max_element(config.projection_grid.begin(),
                                         config.projection_grid.end());
  for (const double gamma : config.gamma_grid) {
    KernelConfig kernel;
    kernel.gamma = gamma;
    kernel.p = config.p;
    kernel.projections = result.projections;
    kernel.seed = derive_seed(config.seed, SeedStream::kGram, 0);
    const GramMatrix gram = build_gram(sequences, kernel);
    PsdCell cell;
    cell.gamma = gamma;
    cell.min_eigenvalue = gram.min_eigenvalue();
    result.cells.push_back(cell);
  }
  return result;
}

}  // namespace swk
