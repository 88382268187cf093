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

#ifndef KPATH_ORDER_STATS_HPP_
#define KPATH_ORDER_STATS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "kpath/random.hpp"
#include "kpath/weights.hpp"

namespace kpath {

// Order statistics W_(1) < ... < W_(n-1) of the n-1 edge weights at a vertex.
struct OrderStatContext {
  OrderStatContext(std::size_t n, WeightModel model);

  std::size_t n;
  WeightModel model;
};

/// E W_(k). Uniform: k/n. Exponential: sum_{i=1..k} 1/(n-i).
double MeanOrderStat(const OrderStatContext& ctx, std::size_t k);

/// Sum of E W_(i) for i = 1..k.
double SumMeanOrderStats(const OrderStatContext& ctx, std::size_t k);

/// One draw of the full vector (W_(1), ..., W_(n-1)) via exponential
/// spacings: W_(k) is the running sum of independent Exp(n-1), Exp(n-2), ...
/// For the uniform model the exponential vector is mapped through
/// 1 - exp(-w), which gives the exact joint law of uniform order statistics.
void SampleOrderStats(const OrderStatContext& ctx, Rng& rng,
                      std::span<double> out);
std::vector<double> SampleOrderStats(const OrderStatContext& ctx,
                                     std::uint64_t seed);

// Exponential and uniform vectors from the same spacings, so that
// uniform[k] = 1 - exp(-exponential[k]) at every rank.
struct CoupledOrderStats {
  std::vector<double> uniform;
  std::vector<double> exponential;
};
CoupledOrderStats SampleCoupledOrderStats(std::size_t n, std::uint64_t seed);

// ceil(sqrt(ln n)), at least 1.
std::size_t DefaultLowerRank(std::size_t n);

struct ConcentrationReport {
  double epsilon = 0.0;
  std::size_t lower_rank = 0;
  std::size_t samples = 0;
  std::vector<std::size_t> ranks;         // lower_rank..n-1
  std::vector<double> violation_freq;     // per rank
  double simultaneous_violation_freq = 0; // any rank in range violated
};

/// Fraction of sample vectors whose ratio W_(k)/E W_(k) falls outside
/// [1-eps, 1+eps], per rank k >= lower_rank and over the whole range at once.
ConcentrationReport Concentration(const OrderStatContext& ctx,
                                  std::span<const std::vector<double>> samples,
                                  double epsilon, std::size_t lower_rank);

}  // namespace kpath

#endif  // KPATH_ORDER_STATS_HPP_
