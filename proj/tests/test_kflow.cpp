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

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>
#include <vector>

#include "doctest.h"
#include "kpath/error.hpp"
#include "kpath/kflow.hpp"
#include "kpath/paths.hpp"
#include "kpath/weights.hpp"
#include "oracles.hpp"

using kpath::WeightedCompleteGraph;
using kpath::WeightModel;

namespace {

WeightedCompleteGraph CraftedK4() {
  // s=0, t=1, a=2, b=3.
  const std::vector<double> m = {0,   100, 1,  10,
                                 100, 0,   10, 1,
                                 1,   10,  0,  1,
                                 10,  1,   1,  0};
  return WeightedCompleteGraph::FromMatrix(4, m);
}

oracle::Table TableOf(const WeightedCompleteGraph& g) {
  const std::size_t n = g.n();
  std::vector<double> w(n * n, 0.0);
  for (kpath::Vertex u = 0; u < n; ++u) {
    for (kpath::Vertex v = 0; v < n; ++v) {
      if (u != v) w[u * n + v] = g.Weight(u, v);
    }
  }
  return oracle::Table(n, std::move(w));
}

std::set<std::pair<kpath::Vertex, kpath::Vertex>> EdgeSet(
    const std::vector<std::vector<kpath::Vertex>>& paths) {
  std::set<std::pair<kpath::Vertex, kpath::Vertex>> out;
  for (const auto& p : paths) {
    for (std::size_t i = 1; i < p.size(); ++i) out.insert(std::minmax(p[i - 1], p[i]));
  }
  return out;
}

std::vector<std::vector<kpath::Vertex>> Vertices(const kpath::FlowResult& r) {
  std::vector<std::vector<kpath::Vertex>> out;
  for (const auto& p : r.paths) out.push_back(p.vertices);
  return out;
}

}  // namespace

TEST_CASE("crafted K_4: flow beats greedy") {
  auto g = CraftedK4();
  const auto f1 = kpath::MinCostKFlow(g, 1);
  REQUIRE(f1.feasible);
  CHECK(f1.total_cost == 3.0);
  const auto f2 = kpath::MinCostKFlow(g, 2);
  REQUIRE(f2.feasible);
  CHECK(f2.total_cost == 22.0);
  auto got = Vertices(f2);
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<std::vector<kpath::Vertex>>{{0, 2, 1}, {0, 3, 1}});

  const auto oracle_f2 = oracle::MinDisjointFamily(TableOf(g), 0, 1, 2);
  CHECK(oracle_f2.first == 22.0);
  // Greedy takes 0-2-3-1 first, which leaves only the direct edge.
  const auto greedy = oracle::Greedy(TableOf(g), 0, 1, 2);
  REQUIRE(greedy.size() == 2);
  CHECK(greedy[0].second + greedy[1].second == 103.0);
  auto gp = CraftedK4();
  const auto s = kpath::SuccessivePaths(gp, 2);
  CHECK(s.prefix_sums[1] == 103.0);
  CHECK(f2.total_cost < s.prefix_sums[1]);
}

TEST_CASE("k=1 flow equals the shortest path") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto g = WeightedCompleteGraph::Generate(25, WeightModel::kExponential1, seed);
    const auto f = kpath::MinCostKFlow(g, 1);
    const auto p = kpath::ShortestPath(g, 0, 1);
    REQUIRE(f.feasible);
    REQUIRE(f.paths.size() == 1);
    CHECK(f.total_cost == p->cost);
    CHECK(f.paths[0].vertices == p->vertices);
  }
}

TEST_CASE("flow matches pair enumeration on K_4, K_5, K_6") {
  for (std::size_t n : {4u, 5u, 6u}) {
    for (auto model : {WeightModel::kUniform01, WeightModel::kExponential1}) {
      for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        auto g = WeightedCompleteGraph::Generate(n, model, seed);
        const auto t = TableOf(g);
        for (std::size_t k : {1u, 2u}) {
          const auto want = oracle::MinDisjointFamily(t, 0, 1, k);
          const auto got = kpath::MinCostKFlow(g, k);
          REQUIRE(got.feasible);
          REQUIRE(got.paths.size() == k);
          CHECK(got.total_cost == doctest::Approx(want.first).epsilon(1e-12));
          CHECK(EdgeSet(Vertices(got)) == EdgeSet(want.second));
        }
      }
    }
  }
}

TEST_CASE("flow properties on random instances") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const std::size_t n = 30;
    auto g = WeightedCompleteGraph::Generate(n, WeightModel::kUniform01, seed);
    kpath::FlowSolver solver(g);
    auto gp = WeightedCompleteGraph::Generate(n, WeightModel::kUniform01, seed);
    const auto s = kpath::SuccessivePaths(gp, n - 1);
    double f_prev = 0.0;
    double marginal_prev = 0.0;
    for (std::size_t k = 1; k <= 10; ++k) {
      REQUIRE(solver.Augment());
      const auto r = solver.Snapshot(k);
      REQUIRE(r.feasible);
      const double marginal = r.total_cost - f_prev;
      if (k >= 2) CHECK(marginal >= marginal_prev - 1e-12);
      CHECK(solver.augmentation_costs()[k - 1] >= (k >= 2 ? solver.augmentation_costs()[k - 2] - 1e-12 : 0.0));
      marginal_prev = marginal;
      f_prev = r.total_cost;
      CHECK(solver.ComplementarySlacknessGap() <= 1e-12);
      if (s.exists(k)) CHECK(r.total_cost <= s.prefix_sums[k - 1] + 1e-12);

      // Decomposed paths are simple, edge-disjoint and never use an edge in
      // both directions.
      std::set<std::pair<kpath::Vertex, kpath::Vertex>> used;
      double sum = 0.0;
      for (const auto& p : r.paths) {
        CHECK(p.vertices.front() == 0);
        CHECK(p.vertices.back() == 1);
        std::set<kpath::Vertex> seen(p.vertices.begin(), p.vertices.end());
        CHECK(seen.size() == p.vertices.size());
        for (std::size_t i = 1; i < p.vertices.size(); ++i) {
          CHECK(used.insert(std::minmax(p.vertices[i - 1], p.vertices[i])).second);
          CHECK(solver.NetFlow(p.vertices[i - 1], p.vertices[i]) == 1);
          CHECK(solver.NetFlow(p.vertices[i], p.vertices[i - 1]) == -1);
        }
        sum += p.cost;
      }
      CHECK(sum == r.total_cost);
    }
  }
}

TEST_CASE("sweep agrees with independent solves") {
  auto g = WeightedCompleteGraph::Generate(40, WeightModel::kExponential1, 12);
  const std::vector<std::size_t> ks = {1, 3, 7, 20, 39};
  const auto sweep = kpath::MinCostFlowSweep(g, ks);
  REQUIRE(sweep.size() == ks.size());
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const auto single = kpath::MinCostKFlow(g, ks[i]);
    CHECK(sweep[i].k == ks[i]);
    CHECK(sweep[i].feasible);
    CHECK(sweep[i].total_cost == single.total_cost);
  }
  const std::vector<std::size_t> bad = {3, 2};
  CHECK_THROWS_AS(kpath::MinCostFlowSweep(g, bad), kpath::Error);
}

TEST_CASE("infeasible flow is reported, not thrown") {
  auto g = WeightedCompleteGraph::Generate(5, WeightModel::kUniform01, 1);
  const std::vector<kpath::Edge> cut = {{0, 2}, {0, 3}, {0, 4}};
  g.DeleteEdges(cut);
  const auto f = kpath::MinCostKFlow(g, 2);
  CHECK_FALSE(f.feasible);
  try {
    kpath::FlowRatioStatistics(f, WeightModel::kUniform01, 5);
    FAIL("infeasible result accepted");
  } catch (const kpath::Error& e) {
    CHECK(e.code() == kpath::ErrorCode::kInfeasible);
  }
  CHECK(kpath::MinCostKFlow(g, 1).feasible);
}

TEST_CASE("flow limit and ratio") {
  CHECK(kpath::FlowLimitValue(WeightModel::kUniform01, 1000, 2) ==
        doctest::Approx(0.0198155).epsilon(1e-5));
  auto g = WeightedCompleteGraph::Generate(50, WeightModel::kUniform01, 2);
  const auto f = kpath::MinCostKFlow(g, 4);
  const auto r = kpath::FlowRatioStatistics(f, WeightModel::kUniform01, 50);
  CHECK(r.value == f.total_cost);
  CHECK(r.limit == kpath::FlowLimitValue(WeightModel::kUniform01, 50, 4));
  CHECK(r.ratio == r.value / r.limit);
}
