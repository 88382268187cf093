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

#ifndef KPATH_TAIL_BOUNDS_HPP_
#define KPATH_TAIL_BOUNDS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace kpath {

// Irwin-Hall lower tail: Pr(U_1 + ... + U_l <= a) <= a^l / l!.
// Evaluated as exp(l ln a - ln l!); the log form never under/overflows.
double IrwinHallLogTail(std::size_t l, double a);
double IrwinHallTail(std::size_t l, double a);

// Exact Irwin-Hall CDF by the alternating sum. Accurate for l up to ~20.
double IrwinHallCdf(std::size_t l, double x);

// Tail bounds for a sum of independent Exp(rate_i):
//   Pr(X >= lambda mu) <= lambda^-1 exp(-a mu (lambda - 1 - ln lambda)), lambda > 1
//   Pr(X <= lambda mu) <= exp(-a mu (lambda - 1 - ln lambda)),           lambda < 1
// with a the smallest rate and mu = sum 1/rate. The side that does not
// apply is reported as 1.
struct ExpSumTailBounds {
  double upper = 1.0;  // bound on Pr(X >= lambda mu)
  double lower = 1.0;  // bound on Pr(X <= lambda mu)
  double mu = 0.0;
  double min_rate = 0.0;
};
ExpSumTailBounds ExpSumTails(std::span<const double> rates, double lambda);

// Pr(|X - mu| >= eps mu) bounded by the sum of the two one-sided bounds at
// lambda = 1 + eps and 1 - eps (the lower side is 0 once eps >= 1).
double ExpSumTwoSided(std::span<const double> rates, double epsilon);

// Binomial lower tail: Pr(X < (1 - eps) np) <= exp(-eps^2 np / 2).
double BinomialLowerTail(std::size_t n_trials, double p, double epsilon);

// Exact Pr(Bin(n, p) < x) by summation.
double BinomialCdfBelow(std::size_t n_trials, double p, double x);

// Lower bounds on Pr(min(Z1, Z2) >= threshold) for i.i.d. Z ~ Bin(n, p):
// lambda = np >= 2: threshold 0.65 lambda, bound 1/4;
// lambda < 2:       threshold 1,            bound 0.18 lambda^2.
struct MinBinomialBound {
  bool large_mean = false;
  double lambda = 0.0;
  double threshold = 0.0;
  double bound = 0.0;
};
MinBinomialBound MinBinomialLowerBound(std::size_t n_trials, double p);

// One comparison of a bound against an exact or Monte Carlo probability.
struct BoundReport {
  std::string name;
  std::string params;
  bool is_upper = true;            // bound from above vs below
  double bound_value = 0.0;
  double exact = -1.0;             // exact probability, -1 when unavailable
  double empirical_frequency = 0.0;
  double standard_error = 0.0;
  std::size_t samples = 0;         // 0 when only the exact oracle is used
  bool passed = false;
};

// 20-point grid checks, three standard errors of Monte Carlo slack.
std::vector<BoundReport> ValidateIrwinHall(std::uint64_t seed,
                                           std::size_t samples = 100000);
std::vector<BoundReport> ValidateExpSumTails(std::uint64_t seed,
                                             std::size_t samples = 100000);
std::vector<BoundReport> ValidateBinomialLowerTail(std::uint64_t seed,
                                                   std::size_t samples = 100000);
std::vector<BoundReport> ValidateMinBinomial(std::uint64_t seed,
                                             std::size_t samples = 100000);

}  // namespace kpath

#endif  // KPATH_TAIL_BOUNDS_HPP_
