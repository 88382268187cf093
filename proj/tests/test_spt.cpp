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
#include <limits>
#include <vector>

#include "doctest.h"
#include "kpath/error.hpp"
#include "kpath/spt.hpp"
#include "kpath/stats.hpp"
#include "kpath/weights.hpp"

using kpath::WeightModel;

TEST_CASE("radius law with d=2 is Exp(n-1)") {
  std::vector<double> xs;
  for (std::uint64_t s = 0; s < 100000; ++s) xs.push_back(kpath::RadiusByLaw(100, 2, s).radius);
  CHECK(kpath::stats::Mean(xs) == doctest::Approx(1.0 / 99.0).epsilon(0.02));
  CHECK(kpath::MeanRadiusByLaw(100, 2) == doctest::Approx(1.0 / 99.0).epsilon(1e-15));
}

TEST_CASE("radius law mean") {
  double full = 0.0;
  for (int i = 1; i < 40; ++i) full += 1.0 / (i * (40.0 - i));
  CHECK(kpath::MeanRadiusByLaw(40, 40) == doctest::Approx(full).epsilon(1e-14));

  const std::size_t n = 1000;
  const std::size_t d = 32;
  std::vector<double> xs;
  for (std::uint64_t s = 0; s < 20000; ++s) xs.push_back(kpath::RadiusByLaw(n, d, s).radius);
  const double exact = kpath::MeanRadiusByLaw(n, d);
  const double mean = kpath::stats::Mean(xs);
  CHECK(std::abs(mean - exact) <= 3.0 * kpath::stats::StdError(xs));
  CHECK(mean == doctest::Approx(exact).epsilon(0.10));
  CHECK(mean == doctest::Approx(std::log(32.0) / 1000.0).epsilon(0.25));
}

TEST_CASE("growth: first attachment is the cheapest root edge") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto g = kpath::WeightedCompleteGraph::Generate(60, WeightModel::kExponential1, seed);
    double best = std::numeric_limits<double>::infinity();
    for (kpath::Vertex v = 1; v < 60; ++v) best = std::min(best, g.Weight(0, v));
    CHECK(kpath::RadiusByGrowth(WeightModel::kExponential1, 60, 2, seed).radius == best);
  }
}

TEST_CASE("growth: full tree radius is the root eccentricity") {
  const std::size_t n = 25;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto g = kpath::WeightedCompleteGraph::Generate(n, WeightModel::kExponential1, seed);
    std::vector<double> d(n * n);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        d[u * n + v] = u == v ? 0.0 : g.Weight(static_cast<kpath::Vertex>(u),
                                                static_cast<kpath::Vertex>(v));
      }
    }
    for (std::size_t m = 0; m < n; ++m) {
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
          d[u * n + v] = std::min(d[u * n + v], d[u * n + m] + d[m * n + v]);
        }
      }
    }
    const double ecc = *std::max_element(d.begin(), d.begin() + n);
    CHECK(kpath::RadiusByGrowth(WeightModel::kExponential1, n, n, seed).radius ==
          doctest::Approx(ecc).epsilon(1e-12));
  }
}

TEST_CASE("growth: attachment distances are nondecreasing") {
  for (auto model : {WeightModel::kUniform01, WeightModel::kExponential1}) {
    const auto ds = kpath::GrowthAttachmentDistances(model, 300, 300, 4);
    REQUIRE(ds.size() == 300);
    CHECK(ds[0] == 0.0);
    for (std::size_t i = 1; i < ds.size(); ++i) CHECK(ds[i] >= ds[i - 1]);
  }
}

TEST_CASE("growth and law agree in distribution") {
  std::vector<double> law;
  std::vector<double> growth;
  for (std::uint64_t s = 0; s < 3000; ++s) {
    law.push_back(kpath::RadiusByLaw(100, 20, s).radius);
    growth.push_back(kpath::RadiusByGrowth(WeightModel::kExponential1, 100, 20, s + 7777).radius);
  }
  // 99.9% critical value for two samples of 3000 is about 0.050.
  CHECK(kpath::stats::KsTwoSample(law, growth) < 0.05);
  CHECK(kpath::stats::Mean(growth) == doctest::Approx(kpath::stats::Mean(law)).epsilon(0.05));
}

TEST_CASE("tree order out of range") {
  for (std::size_t d : {0u, 1u, 51u}) {
    try {
      kpath::RadiusByLaw(50, d, 1);
      FAIL("bad d accepted");
    } catch (const kpath::Error& e) {
      CHECK(e.code() == kpath::ErrorCode::kInvalidParameter);
    }
    CHECK_THROWS_AS(kpath::RadiusByGrowth(WeightModel::kExponential1, 50, d, 1), kpath::Error);
  }
}
