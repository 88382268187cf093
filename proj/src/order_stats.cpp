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

#include "kpath/order_stats.hpp"

#include <cmath>

#include "kpath/error.hpp"

namespace kpath {

OrderStatContext::OrderStatContext(std::size_t n_, WeightModel model_)
    : n(n_), model(model_) {
  Require(n >= 2, "order statistics need n >= 2");
}

double MeanOrderStat(const OrderStatContext& ctx, std::size_t k) {
  Require(k >= 1 && k <= ctx.n - 1, "rank k must lie in [1, n-1]");
  if (ctx.model == WeightModel::kUniform01) {
    return static_cast<double>(k) / static_cast<double>(ctx.n);
  }
  double sum = 0.0;
  for (std::size_t i = 1; i <= k; ++i) {
    sum += 1.0 / static_cast<double>(ctx.n - i);
  }
  return sum;
}

double SumMeanOrderStats(const OrderStatContext& ctx, std::size_t k) {
  Require(k >= 1 && k <= ctx.n - 1, "rank k must lie in [1, n-1]");
  double total = 0.0;
  double running = 0.0;
  for (std::size_t i = 1; i <= k; ++i) {
    if (ctx.model == WeightModel::kUniform01) {
      running = static_cast<double>(i) / static_cast<double>(ctx.n);
    } else {
      running += 1.0 / static_cast<double>(ctx.n - i);
    }
    total += running;
  }
  return total;
}

void SampleOrderStats(const OrderStatContext& ctx, Rng& rng,
                      std::span<double> out) {
  Require(out.size() == ctx.n - 1, "output must hold n-1 order statistics");
  double w = 0.0;
  for (std::size_t k = 1; k <= ctx.n - 1; ++k) {
    w += rng.Exponential(static_cast<double>(ctx.n - k));
    out[k - 1] = w;
  }
  if (ctx.model == WeightModel::kUniform01) {
    for (double& x : out) x = -std::expm1(-x);
  }
}

std::vector<double> SampleOrderStats(const OrderStatContext& ctx,
                                     std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> out(ctx.n - 1);
  SampleOrderStats(ctx, rng, out);
  return out;
}

CoupledOrderStats SampleCoupledOrderStats(std::size_t n, std::uint64_t seed) {
  const OrderStatContext ctx(n, WeightModel::kExponential1);
  CoupledOrderStats out;
  out.exponential = SampleOrderStats(ctx, seed);
  out.uniform.reserve(out.exponential.size());
  for (double w : out.exponential) out.uniform.push_back(-std::expm1(-w));
  return out;
}

std::size_t DefaultLowerRank(std::size_t n) {
  const double r = std::ceil(std::sqrt(std::log(static_cast<double>(n))));
  return r < 1.0 ? 1 : static_cast<std::size_t>(r);
}

ConcentrationReport Concentration(const OrderStatContext& ctx,
                                  std::span<const std::vector<double>> samples,
                                  double epsilon, std::size_t lower_rank) {
  Require(!samples.empty(), "concentration report needs at least one sample");
  Require(epsilon >= 0.0, "epsilon must be >= 0");
  Require(lower_rank >= 1 && lower_rank <= ctx.n - 1,
          "lower rank must lie in [1, n-1]");
  ConcentrationReport report;
  report.epsilon = epsilon;
  report.lower_rank = lower_rank;
  report.samples = samples.size();

  std::vector<double> means;
  for (std::size_t k = lower_rank; k <= ctx.n - 1; ++k) {
    report.ranks.push_back(k);
    means.push_back(MeanOrderStat(ctx, k));
  }
  std::vector<std::size_t> violations(means.size(), 0);
  std::size_t any = 0;
  for (const auto& vec : samples) {
    Require(vec.size() == ctx.n - 1, "sample vector must hold n-1 entries");
    bool hit = false;
    for (std::size_t j = 0; j < means.size(); ++j) {
      const double ratio = vec[report.ranks[j] - 1] / means[j];
      if (!(ratio >= 1.0 - epsilon && ratio <= 1.0 + epsilon)) {
        ++violations[j];
        hit = true;
      }
    }
    if (hit) ++any;
  }
  const double total = static_cast<double>(samples.size());
  for (std::size_t c : violations) {
    report.violation_freq.push_back(static_cast<double>(c) / total);
  }
  report.simultaneous_violation_freq = static_cast<double>(any) / total;
  return report;
}

}  // namespace kpath
