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

#ifndef KPATH_KFLOW_HPP_
#define KPATH_KFLOW_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "kpath/paths.hpp"
#include "kpath/weights.hpp"

namespace kpath {

struct FlowResult {
  std::size_t k = 0;             // requested flow value
  double total_cost = 0.0;       // F_k, sum of the decomposed path costs
  std::vector<PathRecord> paths; // |paths| == k when feasible
  bool feasible = false;
};

// Successive shortest augmenting paths with node potentials on K_n with unit
// capacity undirected edges. Deleted edges of the input graph are absent.
//
// Each undirected edge {u,v} carries a net flow in {-1, 0, +1}. The residual
// arc u->v exists iff the net flow u->v is <= 0; its cost is +w when the edge
// is idle and -w when it cancels flow running v->u.
class FlowSolver {
 public:
  explicit FlowSolver(const WeightedCompleteGraph& g);

  // One augmentation along a cheapest residual s-t path. Returns false when
  // the sink is unreachable (maximum flow reached).
  bool Augment();

  std::size_t flow_value() const { return flow_value_; }

  // Costs of the augmenting paths in order; F_k is their running sum up to
  // floating-point rounding.
  const std::vector<double>& augmentation_costs() const { return marginals_; }

  std::span<const double> potentials() const { return potential_; }

  // +1, 0 or -1.
  int NetFlow(Vertex u, Vertex v) const {
    return flow_[static_cast<std::size_t>(u) * n_ + v];
  }

  // Decomposes the current flow into edge-disjoint simple s-t paths, tracing
  // from the source and always leaving through the smallest-id flow arc.
  std::vector<PathRecord> Decompose() const;

  // Largest violation of the optimality conditions under the current
  // potentials: residual arcs need reduced cost >= 0, so saturated arcs need
  // reduced cost <= 0. Returns 0 when they all hold.
  double ComplementarySlacknessGap() const;

  FlowResult Snapshot(std::size_t requested_k) const;

 private:
  double ReducedCost(Vertex u, Vertex v, double w) const;

  const WeightedCompleteGraph& g_;
  std::size_t n_;
  std::vector<signed char> flow_;
  std::vector<double> potential_;
  std::vector<double> marginals_;
  std::size_t flow_value_ = 0;
};

FlowResult MinCostKFlow(const WeightedCompleteGraph& g, std::size_t k);

// Results for each requested flow value from a single augmentation run.
// `ks` must be strictly increasing.
std::vector<FlowResult> MinCostFlowSweep(const WeightedCompleteGraph& g,
                                         std::span<const std::size_t> ks);

// sum_{i=1..k} (2 E W_(i) + ln n / n).
double FlowLimitValue(WeightModel model, std::size_t n, std::size_t k);

struct FlowRatio {
  double value = 0.0;
  double limit = 0.0;
  double ratio = 0.0;
};

FlowRatio FlowRatioStatistics(const FlowResult& result, WeightModel model,
                              std::size_t n);

}  // namespace kpath

#endif  // KPATH_KFLOW_HPP_
