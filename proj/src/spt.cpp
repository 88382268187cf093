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

#include "kpath/spt.hpp"

#include "dense_dijkstra.hpp"
#include "kpath/error.hpp"
#include "kpath/random.hpp"

namespace kpath {

namespace {

void CheckOrder(std::size_t n, std::size_t d) {
  Require(n >= 2, "spt needs n >= 2");
  Require(d >= 2 && d <= n, "tree order d must lie in [2, n]");
}

}  // namespace

SptRadiusSample RadiusByLaw(std::size_t n, std::size_t d, std::uint64_t seed) {
  CheckOrder(n, d);
  Rng rng(seed);
  double radius = 0.0;
  for (std::size_t i = 1; i < d; ++i) {
    radius += rng.Exponential(static_cast<double>(i) * static_cast<double>(n - i));
  }
  return {n, d, radius};
}

double MeanRadiusByLaw(std::size_t n, std::size_t d) {
  CheckOrder(n, d);
  double mean = 0.0;
  for (std::size_t i = 1; i < d; ++i) {
    mean += 1.0 / (static_cast<double>(i) * static_cast<double>(n - i));
  }
  return mean;
}

std::vector<double> GrowthAttachmentDistances(WeightModel model, std::size_t n,
                                              std::size_t d,
                                              std::uint64_t seed) {
  CheckOrder(n, d);
  // Only the rows of attached vertices are ever evaluated.
  const auto g = WeightedCompleteGraph::Generate(n, model, seed,
                                                 StorageMode::kImplicitPrf);
  internal::DenseDijkstra dij(n);
  dij.Run(0, internal::DenseDijkstra::kNone, d,
          [&g](Vertex u, std::span<double> row) { g.LoadRow(u, row); });
  std::vector<double> out;
  out.reserve(d);
  for (Vertex v : dij.order()) out.push_back(dij.dist(v));
  return out;
}

SptRadiusSample RadiusByGrowth(WeightModel model, std::size_t n, std::size_t d,
                               std::uint64_t seed) {
  return {n, d, GrowthAttachmentDistances(model, n, d, seed).back()};
}

}  // namespace kpath
