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

#include "kpath/paths.hpp"

#include <cmath>
#include <string>

#include "dense_dijkstra.hpp"
#include "kpath/error.hpp"
#include "kpath/order_stats.hpp"

namespace kpath {

namespace {

using internal::DenseDijkstra;

// Dijkstra rooted at `to`, stopped once `from` settles; then walk from
// `from` along tight edges, taking the smallest admissible id each step.
std::optional<PathRecord> ShortestPathWith(const WeightedCompleteGraph& g,
                                           Vertex from, Vertex to,
                                           DenseDijkstra& dij,
                                           std::vector<double>& row) {
  dij.Run(to, from, g.n(), [&g](Vertex u, std::span<double> out) {
    g.LoadRow(u, out);
  });
  if (!dij.settled(from)) return std::nullopt;

  PathRecord rec;
  rec.vertices.push_back(from);
  std::vector<unsigned char> on_path(g.n(), 0);
  on_path[from] = 1;
  Vertex u = from;
  while (u != to) {
    g.LoadRow(u, row);
    const double du = dij.dist(u);
    Vertex next = DenseDijkstra::kNone;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (on_path[v] || !dij.settled(v) || !std::isfinite(row[v])) continue;
      if (row[v] + dij.dist(v) == du) {
        next = v;
        break;
      }
    }
    if (next == DenseDijkstra::kNone) {
      Fail(ErrorCode::kInternal, "shortest-path walk found no tight edge");
    }
    on_path[next] = 1;
    rec.vertices.push_back(next);
    u = next;
  }
  rec.cost = PathCost(g, rec.vertices);
  return rec;
}

}  // namespace

double PathCost(const WeightedCompleteGraph& g, std::span<const Vertex> path) {
  double cost = 0.0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    cost += g.Weight(path[i - 1], path[i]);
  }
  return cost;
}

std::optional<PathRecord> ShortestPath(const WeightedCompleteGraph& g,
                                       Vertex from, Vertex to) {
  Require(from < g.n() && to < g.n(), "endpoint out of range");
  Require(from != to, "shortest path needs distinct endpoints");
  DenseDijkstra dij(g.n());
  std::vector<double> row(g.n());
  auto rec = ShortestPathWith(g, from, to, dij, row);
  if (rec) rec->index = 1;
  return rec;
}

SuccessiveResult SuccessivePaths(WeightedCompleteGraph& g, std::size_t k_max) {
  Require(k_max >= 1 && k_max <= g.n() - 1, "k_max must lie in [1, n-1]");
  SuccessiveResult result;
  result.k_max = k_max;
  result.records.resize(k_max);

  DenseDijkstra dij(g.n());
  std::vector<double> row(g.n());
  std::vector<Edge> used;
  double running = 0.0;
  for (std::size_t k = 1; k <= k_max; ++k) {
    auto rec = ShortestPathWith(g, g.source(), g.sink(), dij, row);
    if (!rec) break;  // deletions only shrink the graph
    rec->index = k;
    used.clear();
    for (std::size_t i = 1; i < rec->vertices.size(); ++i) {
      used.push_back({rec->vertices[i - 1], rec->vertices[i]});
    }
    g.DeleteEdges(used);
    running += rec->cost;
    result.prefix_sums.push_back(running);
    result.records[k - 1] = std::move(rec);
  }
  return result;
}

double LimitValue(WeightModel model, std::size_t n, std::size_t k) {
  const OrderStatContext ctx(n, model);
  const double nn = static_cast<double>(n);
  return 2.0 * MeanOrderStat(ctx, k) + std::log(nn) / nn;
}

std::vector<RatioEntry> RatioStatistics(const SuccessiveResult& result,
                                        WeightModel model, std::size_t n) {
  std::vector<RatioEntry> out;
  out.reserve(result.records.size());
  for (std::size_t k = 1; k <= result.records.size(); ++k) {
    RatioEntry e;
    e.k = k;
    e.limit = LimitValue(model, n, k);
    if (result.exists(k)) {
      e.cost = result.records[k - 1]->cost;
      e.ratio = *e.cost / e.limit;
    }
    out.push_back(e);
  }
  return out;
}

}  // namespace kpath
