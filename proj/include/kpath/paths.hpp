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

#ifndef KPATH_PATHS_HPP_
#define KPATH_PATHS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "kpath/weights.hpp"

namespace kpath {

// One extracted s-t path. `cost` is the left-to-right sum of its weights.
struct PathRecord {
  std::size_t index = 0;  // 1-based rank k
  std::vector<Vertex> vertices;
  double cost = 0.0;

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

// P_1..P_{k_max}. records[k-1] is empty once no s-t path survives; every
// later rank is empty as well.
struct SuccessiveResult {
  std::size_t k_max = 0;
  std::vector<std::optional<PathRecord>> records;
  std::vector<double> prefix_sums;  // S_k for the existing prefix

  bool exists(std::size_t k) const {
    return k >= 1 && k <= records.size() && records[k - 1].has_value();
  }
  std::size_t existing_count() const { return prefix_sums.size(); }
};

double PathCost(const WeightedCompleteGraph& g, std::span<const Vertex> path);

// Cheapest simple path over non-deleted edges, or nullopt. Among equal-cost
// optima the lexicographically smallest vertex sequence wins.
std::optional<PathRecord> ShortestPath(const WeightedCompleteGraph& g,
                                       Vertex from, Vertex to);

// Greedy extraction of edge-disjoint cheapest source-sink paths. Deletes the
// edges of every extracted path from `g`.
SuccessiveResult SuccessivePaths(WeightedCompleteGraph& g, std::size_t k_max);

// 2 E W_(k) + ln n / n: 2k/n + ln n/n for the uniform model.
double LimitValue(WeightModel model, std::size_t n, std::size_t k);

struct RatioEntry {
  std::size_t k = 0;
  std::optional<double> cost;  // X_k
  double limit = 0.0;
  std::optional<double> ratio;
};

std::vector<RatioEntry> RatioStatistics(const SuccessiveResult& result,
                                        WeightModel model, std::size_t n);

}  // namespace kpath

#endif  // KPATH_PATHS_HPP_
