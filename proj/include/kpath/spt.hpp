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

#ifndef KPATH_SPT_HPP_
#define KPATH_SPT_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "kpath/weights.hpp"

namespace kpath {

struct SptRadiusSample {
  std::size_t n = 0;
  std::size_t d = 0;
  double radius = 0.0;
};

// Radius of a shortest-path tree of order d drawn from its exact law on K_n
// with Exp(1) weights: a sum of independent Exp(i(n-i)), i = 1..d-1.
SptRadiusSample RadiusByLaw(std::size_t n, std::size_t d, std::uint64_t seed);

// E of the above: sum_{i=1..d-1} 1/(i(n-i)).
double MeanRadiusByLaw(std::size_t n, std::size_t d);

// Grows the tree on a fresh K_n (vertex 0 is the root) in Dijkstra order and
// returns the distance to the d-th attached vertex, the root counting as the
// first. The exact law above holds for the exponential model only.
SptRadiusSample RadiusByGrowth(WeightModel model, std::size_t n, std::size_t d,
                               std::uint64_t seed);

// Attachment distances of the first d vertices, root included (0.0 first).
std::vector<double> GrowthAttachmentDistances(WeightModel model, std::size_t n,
                                              std::size_t d,
                                              std::uint64_t seed);

}  // namespace kpath

#endif  // KPATH_SPT_HPP_
