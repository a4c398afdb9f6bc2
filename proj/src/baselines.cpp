// src/baselines.cpp
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

#include "swkernel/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <utility>
#include <vector>

namespace swk {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Eigen::MatrixXd squared_distances(const EmbeddingSequence& x,
                                  const EmbeddingSequence& y) {
  detail::require(x.dim() == y.dim(),
                  "sequences must share one embedding dimension");
  const Eigen::MatrixXd& a = x.matrix();
  const Eigen::MatrixXd& b = y.matrix();
  Eigen::MatrixXd cost(a.rows(), b.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.rows(); ++j)
      cost(i, j) = (a.row(i) - b.row(j)).squaredNorm();
  return cost;
}

inline double softmin3(double a, double b, double c, double smoothing) {
  const double m = std::min({a, b, c});
  if (!std::isfinite(m)) return m;  // all three unreachable
  const double s = std::exp(-(a - m) / smoothing) +
                   std::exp(-(b - m) / smoothing) +
                   std::exp(-(c - m) / smoothing);
  return m - smoothing * std::log(s);
}

// Shared DP over the alignment cost matrix; `soft` selects the smoothed
// minimum. Runs in O(N*M) time and O(M) space.
template <typename Combine>
double alignment_value(const Eigen::MatrixXd& cost, Combine combine) {
  const Eigen::Index n = cost.rows();
  const Eigen::Index m = cost.cols();
  std::vector<double> prev(static_cast<std::size_t>(m) + 1, kInf);
  std::vector<double> cur(static_cast<std::size_t>(m) + 1, kInf);
  prev[0] = 0.0;  // virtual start cell before (1,1)
  for (Eigen::Index i = 1; i <= n; ++i) {
    cur[0] = kInf;
    for (Eigen::Index j = 1; j <= m; ++j) {
      const std::size_t sj = static_cast<std::size_t>(j);
      cur[sj] =
          cost(i - 1, j - 1) + combine(prev[sj], cur[sj - 1], prev[sj - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[static_cast<std::size_t>(m)];
}

struct FlowEdge {
  int to;
  std::int64_t cap;
  double cost;
  int rev;
};

class MinCostFlow {
 public:
  explicit MinCostFlow(int nodes) : graph_(static_cast<std::size_t>(nodes)) {}

  void add_edge(int from, int to, std::int64_t cap, double cost) {
    graph_[static_cast<std::size_t>(from)].push_back(
        {to, cap, cost, static_cast<int>(graph_[static_cast<std::size_t>(to)].size())});
    graph_[static_cast<std::size_t>(to)].push_back(
        {from, 0, -cost,
         static_cast<int>(graph_[static_cast<std::size_t>(from)].size()) - 1});
  }

  // Successive shortest augmenting paths until the sink is unreachable.
  // Dijkstra over reduced costs with Johnson potentials: original costs are
  // nonnegative, so zero potentials are valid initially, and clamping the
  // reduced costs at zero absorbs rounding noise on residual edges. The
  // predecessor pointers of a Dijkstra run form a tree, so the path walk
  // terminates unconditionally.
  double send_all(int source, int sink) {
    const std::size_t nodes = graph_.size();
    std::vector<double> potential(nodes, 0.0);
    double total = 0.0;
    while (true) {
      std::vector<double> dist(nodes, kInf);
      std::vector<int> prev_node(nodes, -1);
      std::vector<int> prev_edge(nodes, -1);
      using Entry = std::pair<double, int>;
      std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> queue;
      dist[static_cast<std::size_t>(source)] = 0.0;
      queue.push({0.0, source});
      while (!queue.empty()) {
        const auto [d, u] = queue.top();
        queue.pop();
        const std::size_t su = static_cast<std::size_t>(u);
        if (d > dist[su]) continue;
        for (int k = 0; k < static_cast<int>(graph_[su].size()); ++k) {
          const FlowEdge& e = graph_[su][static_cast<std::size_t>(k)];
          if (e.cap <= 0) continue;
          const std::size_t sv = static_cast<std::size_t>(e.to);
          const double reduced =
              std::max(0.0, e.cost + potential[su] - potential[sv]);
          if (dist[su] + reduced < dist[sv]) {
            dist[sv] = dist[su] + reduced;
            prev_node[sv] = u;
            prev_edge[sv] = k;
            queue.push({dist[sv], e.to});
          }
        }
      }
      if (dist[static_cast<std::size_t>(sink)] == kInf) break;
      for (std::size_t v = 0; v < nodes; ++v)
        if (dist[v] < kInf) potential[v] += dist[v];

      std::int64_t push = std::numeric_limits<std::int64_t>::max();
      for (int v = sink; v != source; v = prev_node[static_cast<std::size_t>(v)]) {
        const FlowEdge& e =
            graph_[static_cast<std::size_t>(prev_node[static_cast<std::size_t>(v)])]
                  [static_cast<std::size_t>(prev_edge[static_cast<std::size_t>(v)])];
        push = std::min(push, e.cap);
      }
      for (int v = sink; v != source; v = prev_node[static_cast<std::size_t>(v)]) {
        FlowEdge& e =
            graph_[static_cast<std::size_t>(prev_node[static_cast<std::size_t>(v)])]
                  [static_cast<std::size_t>(prev_edge[static_cast<std::size_t>(v)])];
        e.cap -= push;
        graph_[static_cast<std::size_t>(v)][static_cast<std::size_t>(e.rev)].cap +=
            push;
        total += static_cast<double>(push) * e.cost;
      }
    }
    return total;
  }

 private:
  std::vector<std::vector<FlowEdge>> graph_;
};

}  // namespace

Eigen::MatrixXd alignment_cost_matrix(const EmbeddingSequence& x,
                                      const EmbeddingSequence& y) {
  return 0.5 * squared_distances(x, y);
}

Eigen::MatrixXd transport_cost_matrix(const EmbeddingSequence& x,
                                      const EmbeddingSequence& y) {
  return squared_distances(x, y);
}

double dtw(const EmbeddingSequence& x, const EmbeddingSequence& y) {
  const Eigen::MatrixXd cost = alignment_cost_matrix(x, y);
  return alignment_value(cost, [](double a, double b, double c) {
    return std::min({a, b, c});
  });
}

double soft_dtw(const EmbeddingSequence& x, const EmbeddingSequence& y,
                double smoothing) {
  detail::require(std::isfinite(smoothing) && smoothing > 0.0,
                  "soft-dtw smoothing must be finite and > 0");
  const Eigen::MatrixXd cost = alignment_cost_matrix(x, y);
  return alignment_value(cost, [smoothing](double a, double b, double c) {
    return softmin3(a, b, c, smoothing);
  });
}

namespace detail {

double min_cost_assignment(const Eigen::MatrixXd& cost) {
  require(cost.rows() == cost.cols() && cost.rows() >= 1,
          "assignment needs a non-empty square cost matrix");
  const int n = static_cast<int>(cost.rows());

  // Hungarian algorithm with row/column potentials, O(n^3). Indices are
  // 1-based; column 0 is the scratch column of the alternating search.
  std::vector<double> u(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<double> v(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<int> match(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> way(static_cast<std::size_t>(n) + 1, 0);

  for (int i = 1; i <= n; ++i) {
    match[0] = i;
    int j0 = 0;
    std::vector<double> min_reduced(static_cast<std::size_t>(n) + 1, kInf);
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    do {
      used[static_cast<std::size_t>(j0)] = true;
      const int i0 = match[static_cast<std::size_t>(j0)];
      int j1 = 0;
      double delta = kInf;
      for (int j = 1; j <= n; ++j) {
        const std::size_t sj = static_cast<std::size_t>(j);
        if (used[sj]) continue;
        const double reduced = cost(i0 - 1, j - 1) -
                               u[static_cast<std::size_t>(i0)] - v[sj];
        if (reduced < min_reduced[sj]) {
          min_reduced[sj] = reduced;
          way[sj] = j0;
        }
        if (min_reduced[sj] < delta) {
          delta = min_reduced[sj];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        const std::size_t sj = static_cast<std::size_t>(j);
        if (used[sj]) {
          u[static_cast<std::size_t>(match[sj])] += delta;
          v[sj] -= delta;
        } else {
          min_reduced[sj] -= delta;
        }
      }
      j0 = j1;
    } while (match[static_cast<std::size_t>(j0)] != 0);
    do {
      const int j1 = way[static_cast<std::size_t>(j0)];
      match[static_cast<std::size_t>(j0)] = match[static_cast<std::size_t>(j1)];
      j0 = j1;
    } while (j0 != 0);
  }

  double total = 0.0;
  for (int j = 1; j <= n; ++j)
    total += cost(match[static_cast<std::size_t>(j)] - 1, j - 1);
  return total;
}

double min_cost_transport(const Eigen::MatrixXd& cost) {
  require(cost.rows() >= 1 && cost.cols() >= 1,
          "transport needs a non-empty cost matrix");
  const int n = static_cast<int>(cost.rows());
  const int m = static_cast<int>(cost.cols());

  // Scale the uniform marginals 1/n and 1/m to integers over the common
  // denominator lcm(n, m): each row supplies m/g units, each column absorbs
  // n/g, one unit being lcm^{-1} of mass.
  const std::int64_t g = std::gcd(static_cast<std::int64_t>(n),
                                  static_cast<std::int64_t>(m));
  const std::int64_t row_supply = m / g;
  const std::int64_t col_demand = n / g;
  const std::int64_t total_units =
      static_cast<std::int64_t>(n) * static_cast<std::int64_t>(m) / g;

  const int source = 0;
  const int sink = n + m + 1;
  MinCostFlow flow(n + m + 2);
  for (int i = 0; i < n; ++i) flow.add_edge(source, 1 + i, row_supply, 0.0);
  for (int j = 0; j < m; ++j)
    flow.add_edge(1 + n + j, sink, col_demand, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      flow.add_edge(1 + i, 1 + n + j, row_supply, cost(i, j));

  const double total_cost = flow.send_all(source, sink);
  return total_cost / static_cast<double>(total_units);
}

}  // namespace detail

double exact_wasserstein(const EmbeddingSequence& x,
                         const EmbeddingSequence& y) {
  const Eigen::MatrixXd cost = transport_cost_matrix(x, y);
  if (x.length() == y.length())
    return detail::min_cost_assignment(cost) / x.length();
  return detail::min_cost_transport(cost);
}

double cosine_meanpool(const EmbeddingSequence& x,
                       const EmbeddingSequence& y) {
  detail::require(x.dim() == y.dim(),
                  "sequences must share one embedding dimension");
  const Eigen::RowVectorXd a = x.matrix().colwise().mean();
  const Eigen::RowVectorXd b = y.matrix().colwise().mean();
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0)
    throw DegenerateInput("cosine of a zero-norm mean-pooled vector");
  return std::clamp(a.dot(b) / (na * nb), -1.0, 1.0);
}

}  // namespace swk
