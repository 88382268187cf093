// Copyright 2026 The kpath Authors.
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

#include "kpath/kflow.hpp"

#include <algorithm>
#include <cmath>

#include "dense_dijkstra.hpp"
#include "kpath/error.hpp"
#include "kpath/order_stats.hpp"

namespace kpath {

using internal::DenseDijkstra;

FlowSolver::FlowSolver(const WeightedCompleteGraph& g)
    : g_(g), n_(g.n()), flow_(g.n() * g.n(), 0), potential_(g.n(), 0.0) {}

double FlowSolver::ReducedCost(Vertex u, Vertex v, double w) const {
  const int f = NetFlow(u, v);
  const double c = f < 0 ? -w : w;
  return c + potential_[u] - potential_[v];
}

bool FlowSolver::Augment() {
  const Vertex s = g_.source();
  const Vertex t = g_.sink();
  DenseDijkstra dij(n_);
  const double* pot = potential_.data();
  dij.Run(s, t, n_, [&](Vertex u, std::span<double> row) {
    g_.LoadRow(u, row);
    const signed char* f = flow_.data() + static_cast<std::size_t>(u) * n_;
    const double pu = pot[u];
    for (std::size_t v = 0; v < n_; ++v) {
      double c = f[v] < 0 ? -row[v] : row[v];
      if (f[v] > 0) c = DenseDijkstra::kInf;
      // Rounding can push a zero reduced cost slightly negative.
      row[v] = std::max(0.0, c + pu - pot[v]);
    }
  });
  if (!dij.settled(t)) return false;

  const double reach = dij.dist(t);
  for (Vertex v = 0; v < n_; ++v) {
    potential_[v] += dij.settled(v) ? dij.dist(v) : reach;
  }

  double cost = 0.0;
  for (Vertex v = t; v != s;) {
    const Vertex p = dij.pred(v);
    const double w = g_.Weight(p, v);
    signed char& fwd = flow_[static_cast<std::size_t>(p) * n_ + v];
    signed char& rev = flow_[static_cast<std::size_t>(v) * n_ + p];
    cost += fwd < 0 ? -w : w;
    ++fwd;
    --rev;
    v = p;
  }
  marginals_.push_back(cost);
  ++flow_value_;
  return true;
}

std::vector<PathRecord> FlowSolver::Decompose() const {
  const Vertex s = g_.source();
  const Vertex t = g_.sink();
  std::vector<signed char> rem(flow_.size());
  std::transform(flow_.begin(), flow_.end(), rem.begin(),
                 [](signed char f) { return static_cast<signed char>(f > 0); });

  std::vector<PathRecord> paths;
  std::vector<unsigned char> visited(n_);
  for (;;) {
    std::fill(visited.begin(), visited.end(), 0);
    PathRecord rec;
    rec.vertices.push_back(s);
    visited[s] = 1;
    Vertex x = s;
    bool started = false;
    while (x != t) {
      signed char* out = rem.data() + static_cast<std::size_t>(x) * n_;
      const auto it = std::find(out, out + n_, 1);
      if (it == out + n_) {
        if (!started) break;
        Fail(ErrorCode::kInternal, "flow decomposition hit a dead end");
      }
      started = true;
      const auto y = static_cast<Vertex>(it - out);
      *it = 0;
      if (visited[y]) {
        Fail(ErrorCode::kInternal, "flow decomposition found a cycle");
      }
      visited[y] = 1;
      rec.vertices.push_back(y);
      x = y;
    }
    if (!started) break;
    rec.index = paths.size() + 1;
    rec.cost = PathCost(g_, rec.vertices);
    paths.push_back(std::move(rec));
  }
  if (std::find(rem.begin(), rem.end(), 1) != rem.end()) {
    Fail(ErrorCode::kInternal, "flow contains circulation");
  }
  if (paths.size() != flow_value_) {
    Fail(ErrorCode::kInternal, "decomposition does not match flow value");
  }
  return paths;
}

double FlowSolver::ComplementarySlacknessGap() const {
  double gap = 0.0;
  std::vector<double> row(n_);
  for (Vertex u = 0; u < n_; ++u) {
    g_.LoadRow(u, row);
    for (Vertex v = 0; v < n_; ++v) {
      if (!std::isfinite(row[v]) || NetFlow(u, v) > 0) continue;
      gap = std::max(gap, -ReducedCost(u, v, row[v]));
    }
  }
  return gap;
}

FlowResult FlowSolver::Snapshot(std::size_t requested_k) const {
  FlowResult r;
  r.k = requested_k;
  r.paths = Decompose();
  r.feasible = flow_value_ == requested_k;
  for (const auto& p : r.paths) r.total_cost += p.cost;
  return r;
}

FlowResult MinCostKFlow(const WeightedCompleteGraph& g, std::size_t k) {
  const std::size_t ks[] = {k};
  return MinCostFlowSweep(g, ks).front();
}

std::vector<FlowResult> MinCostFlowSweep(const WeightedCompleteGraph& g,
                                         std::span<const std::size_t> ks) {
  Require(!ks.empty(), "flow sweep needs at least one k");
  for (std::size_t i = 0; i < ks.size(); ++i) {
    Require(ks[i] >= 1 && ks[i] <= g.n() - 1, "k must lie in [1, n-1]");
    Require(i == 0 || ks[i] > ks[i - 1], "flow sweep ks must be increasing");
  }
  FlowSolver solver(g);
  std::vector<FlowResult> out;
  bool saturated = false;
  for (std::size_t k : ks) {
    while (!saturated && solver.flow_value() < k) saturated = !solver.Augment();
    out.push_back(solver.Snapshot(k));
  }
  return out;
}

double FlowLimitValue(WeightModel model, std::size_t n, std::size_t k) {
  const OrderStatContext ctx(n, model);
  const double nn = static_cast<double>(n);
  return 2.0 * SumMeanOrderStats(ctx, k) +
         static_cast<double>(k) * std::log(nn) / nn;
}

FlowRatio FlowRatioStatistics(const FlowResult& result, WeightModel model,
                              std::size_t n) {
  if (!result.feasible) {
    Fail(ErrorCode::kInfeasible, "flow ratio needs a feasible flow");
  }
  FlowRatio r;
  r.value = result.total_cost;
  r.limit = FlowLimitValue(model, n, result.k);
  r.ratio = r.value / r.limit;
  return r;
}

}  // namespace kpath
