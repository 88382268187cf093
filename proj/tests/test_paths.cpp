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

#include <cmath>
#include <set>
#include <utility>
#include <vector>

#include "doctest.h"
#include "kpath/error.hpp"
#include "kpath/paths.hpp"
#include "kpath/weights.hpp"
#include "oracles.hpp"

using kpath::WeightedCompleteGraph;
using kpath::WeightModel;

namespace {

WeightedCompleteGraph Triangle() {
  // s=0, t=1, v=2.
  const std::vector<double> m = {0.0, 0.5, 0.1,
                                 0.5, 0.0, 0.2,
                                 0.1, 0.2, 0.0};
  return WeightedCompleteGraph::FromMatrix(3, m);
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

}  // namespace

TEST_CASE("shortest path on the triangle") {
  auto g = Triangle();
  const auto p = kpath::ShortestPath(g, 0, 1);
  REQUIRE(p);
  CHECK(p->vertices == std::vector<kpath::Vertex>{0, 2, 1});
  CHECK(p->cost == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(p->length() == 2);

  const std::vector<kpath::Edge> cut = {{0, 2}, {0, 1}};
  g.DeleteEdges(cut);
  CHECK_FALSE(kpath::ShortestPath(g, 0, 1).has_value());
}

TEST_CASE("shortest path rejects bad endpoints") {
  auto g = Triangle();
  CHECK_THROWS_AS(kpath::ShortestPath(g, 1, 1), kpath::Error);
  CHECK_THROWS_AS(kpath::ShortestPath(g, 0, 3), kpath::Error);
}

TEST_CASE("successive paths on the triangle") {
  auto g = Triangle();
  const auto r = kpath::SuccessivePaths(g, 2);
  REQUIRE(r.exists(1));
  REQUIRE(r.exists(2));
  CHECK(r.records[0]->vertices == std::vector<kpath::Vertex>{0, 2, 1});
  CHECK(r.records[1]->vertices == std::vector<kpath::Vertex>{0, 1});
  CHECK(r.records[1]->cost == 0.5);
  CHECK(r.prefix_sums[1] == r.prefix_sums[0] + 0.5);
  CHECK(g.deleted_count() == 3);
  // Both edges at s are used, so no third path can exist.
  CHECK_FALSE(kpath::ShortestPath(g, 0, 1).has_value());
  auto fresh = Triangle();
  try {
    kpath::SuccessivePaths(fresh, 3);
    FAIL("k_max beyond n-1 accepted");
  } catch (const kpath::Error& e) {
    CHECK(e.code() == kpath::ErrorCode::kInvalidParameter);
  }
}

TEST_CASE("successive paths stop early once s and t are separated") {
  auto g = Triangle();
  const std::vector<kpath::Edge> cut = {{0, 1}};
  g.DeleteEdges(cut);
  const auto r = kpath::SuccessivePaths(g, 2);
  CHECK(r.exists(1));
  CHECK_FALSE(r.exists(2));
  CHECK(r.existing_count() == 1);
  CHECK(r.records.size() == 2);
}

TEST_CASE("equal-cost ties resolve to the lexicographically smallest sequence") {
  // Unit weights on K_5: every 0-1 route through one midpoint costs 2, and
  // the direct edge costs 1. Delete it and the winner must be 0-2-1.
  std::vector<double> m(25, 1.0);
  auto g = WeightedCompleteGraph::FromMatrix(5, m);
  const std::vector<kpath::Edge> cut = {{0, 1}};
  g.DeleteEdges(cut);
  const auto p = kpath::ShortestPath(g, 0, 1);
  REQUIRE(p);
  CHECK(p->vertices == std::vector<kpath::Vertex>{0, 2, 1});
  const auto r = kpath::SuccessivePaths(g, 3);
  REQUIRE(r.existing_count() == 3);
  CHECK(r.records[1]->vertices == std::vector<kpath::Vertex>{0, 3, 1});
  CHECK(r.records[2]->vertices == std::vector<kpath::Vertex>{0, 4, 1});
}

TEST_CASE("shortest path matches exhaustive enumeration on K_6") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    for (auto model : {WeightModel::kUniform01, WeightModel::kExponential1}) {
      auto g = WeightedCompleteGraph::Generate(6, model, seed);
      const auto t = TableOf(g);
      CHECK(oracle::AllSimplePaths(t, 0, 1).size() == 65);
      const auto want = oracle::Cheapest(t, 0, 1);
      const auto got = kpath::ShortestPath(g, 0, 1);
      REQUIRE(want);
      REQUIRE(got);
      CHECK(got->vertices == want->first);
      CHECK(got->cost == want->second);
    }
  }
}

TEST_CASE("successive paths match the greedy oracle on K_5 and K_6") {
  for (std::size_t n : {5u, 6u}) {
    for (auto model : {WeightModel::kUniform01, WeightModel::kExponential1}) {
      for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        auto g = WeightedCompleteGraph::Generate(n, model, seed);
        const auto want = oracle::Greedy(TableOf(g), 0, 1, 3);
        const auto got = kpath::SuccessivePaths(g, 3);
        REQUIRE(got.existing_count() == want.size());
        for (std::size_t i = 0; i < want.size(); ++i) {
          CHECK(got.records[i]->vertices == want[i].first);
          CHECK(got.records[i]->cost == want[i].second);
        }
      }
    }
  }
}

TEST_CASE("custom terminals") {
  auto g = WeightedCompleteGraph::Generate(8, WeightModel::kUniform01, 3);
  g.SetTerminals(5, 2);
  const auto want = oracle::Greedy(TableOf(g), 5, 2, 3);
  const auto got = kpath::SuccessivePaths(g, 3);
  REQUIRE(got.existing_count() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(got.records[i]->vertices == want[i].first);
    CHECK(got.records[i]->vertices.front() == 5);
    CHECK(got.records[i]->vertices.back() == 2);
  }
}

TEST_CASE("successive-path invariants on random instances") {
  for (std::size_t n : {6u, 10u, 20u}) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      auto model = seed % 2 ? WeightModel::kExponential1 : WeightModel::kUniform01;
      auto g = WeightedCompleteGraph::Generate(n, model, seed + 1000 * n);
      const auto r = kpath::SuccessivePaths(g, n - 1);
      REQUIRE(r.existing_count() >= n / 2);
      std::set<std::uint64_t> used;
      double prev = 0.0;
      double sum = 0.0;
      for (std::size_t k = 1; k <= r.existing_count(); ++k) {
        const auto& rec = *r.records[k - 1];
        CHECK(rec.index == k);
        CHECK(rec.cost >= prev);
        prev = rec.cost;
        sum += rec.cost;
        CHECK(r.prefix_sums[k - 1] == sum);
        CHECK(rec.cost == kpath::PathCost(g, rec.vertices));
        std::set<kpath::Vertex> seen(rec.vertices.begin(), rec.vertices.end());
        CHECK(seen.size() == rec.vertices.size());
        for (std::size_t i = 1; i < rec.vertices.size(); ++i) {
          CHECK(used.insert(kpath::PairIndex(rec.vertices[i - 1], rec.vertices[i])).second);
        }
      }
      CHECK(g.deleted_count() == used.size());
    }
  }
}

TEST_CASE("limit values") {
  CHECK(kpath::LimitValue(WeightModel::kUniform01, 1000, 1) ==
        doctest::Approx(0.0089078).epsilon(1e-5));
  CHECK(kpath::LimitValue(WeightModel::kExponential1, 5, 2) ==
        doctest::Approx(7.0 / 6.0 + std::log(5.0) / 5.0).epsilon(1e-14));
  CHECK(kpath::LimitValue(WeightModel::kExponential1, 5, 2) ==
        doctest::Approx(1.48855).epsilon(1e-5));
}

TEST_CASE("ratio statistics") {
  auto g = WeightedCompleteGraph::Generate(12, WeightModel::kUniform01, 8);
  const auto r = kpath::SuccessivePaths(g, 11);
  const auto stats = kpath::RatioStatistics(r, WeightModel::kUniform01, 12);
  REQUIRE(stats.size() == 11);
  for (const auto& e : stats) {
    CHECK(e.limit == kpath::LimitValue(WeightModel::kUniform01, 12, e.k));
    CHECK(e.cost.has_value() == r.exists(e.k));
    if (e.cost) CHECK(*e.ratio == *e.cost / e.limit);
    else CHECK_FALSE(e.ratio.has_value());
  }
  // A path whose cost equals the limit has ratio 1.
  kpath::SuccessiveResult one;
  one.k_max = 1;
  const double lim = kpath::LimitValue(WeightModel::kUniform01, 12, 1);
  one.records.push_back(kpath::PathRecord{1, {0, 1}, lim});
  one.prefix_sums.push_back(lim);
  CHECK(*kpath::RatioStatistics(one, WeightModel::kUniform01, 12)[0].ratio == 1.0);
}
