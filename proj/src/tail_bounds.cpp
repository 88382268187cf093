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

#include "kpath/tail_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "kpath/error.hpp"
#include "kpath/random.hpp"

namespace kpath {

namespace {

constexpr double kSlackSe = 3.0;

void CheckProbability(double p) {
  if (!(p > 0.0 && p <= 1.0)) Fail(ErrorCode::kDomain, "p must lie in (0, 1]");
}

double LogBinomialPmf(std::size_t n, double p, std::size_t j) {
  const double nn = static_cast<double>(n);
  const double jj = static_cast<double>(j);
  if (p == 1.0) return j == n ? 0.0 : -std::numeric_limits<double>::infinity();
  return std::lgamma(nn + 1) - std::lgamma(jj + 1) - std::lgamma(nn - jj + 1) +
         jj * std::log(p) + (nn - jj) * std::log1p(-p);
}

template <class... Args>
std::string Params(const Args&... args) {
  std::ostringstream os;
  os.precision(6);
  (os << ... << args);
  return os.str();
}

double SeFor(double freq, std::size_t samples) {
  return samples == 0 ? 0.0
                      : std::sqrt(freq * (1.0 - freq) / static_cast<double>(samples));
}

void Judge(BoundReport& r) {
  bool ok = true;
  if (r.is_upper) {
    if (r.samples > 0) {
      ok = ok && r.empirical_frequency <= r.bound_value + kSlackSe * r.standard_error;
    }
    if (r.exact >= 0.0) ok = ok && r.exact <= r.bound_value * (1.0 + 1e-9);
  } else {
    if (r.samples > 0) {
      ok = ok && r.empirical_frequency >= r.bound_value - kSlackSe * r.standard_error;
    }
    if (r.exact >= 0.0) ok = ok && r.exact > r.bound_value;
  }
  r.passed = ok;
}

}  // namespace

double IrwinHallLogTail(std::size_t l, double a) {
  Require(l >= 1, "Irwin-Hall term count must be >= 1");
  if (!(a >= 0.0)) Fail(ErrorCode::kDomain, "threshold a must be >= 0");
  if (a == 0.0) return -std::numeric_limits<double>::infinity();
  const double ll = static_cast<double>(l);
  return ll * std::log(a) - std::lgamma(ll + 1.0);
}

double IrwinHallTail(std::size_t l, double a) {
  return std::exp(IrwinHallLogTail(l, a));
}

double IrwinHallCdf(std::size_t l, double x) {
  Require(l >= 1, "Irwin-Hall term count must be >= 1");
  if (x <= 0.0) return 0.0;
  const double ll = static_cast<double>(l);
  if (x >= ll) return 1.0;
  double sum = 0.0;
  double binom = 1.0;
  for (std::size_t j = 0; static_cast<double>(j) <= x; ++j) {
    const double term = binom * std::pow(x - static_cast<double>(j), ll);
    sum += (j % 2 == 0) ? term : -term;
    binom = binom * static_cast<double>(l - j) / static_cast<double>(j + 1);
  }
  return std::clamp(sum / std::tgamma(ll + 1.0), 0.0, 1.0);
}

ExpSumTailBounds ExpSumTails(std::span<const double> rates, double lambda) {
  Require(!rates.empty(), "need at least one rate");
  if (!(lambda > 0.0)) Fail(ErrorCode::kDomain, "lambda must be > 0");
  ExpSumTailBounds b;
  b.min_rate = std::numeric_limits<double>::infinity();
  for (double r : rates) {
    if (!(r > 0.0)) Fail(ErrorCode::kDomain, "rates must be > 0");
    b.min_rate = std::min(b.min_rate, r);
    b.mu += 1.0 / r;
  }
  const double exponent = -b.min_rate * b.mu * (lambda - 1.0 - std::log(lambda));
  if (lambda > 1.0) b.upper = std::exp(exponent - std::log(lambda));
  if (lambda < 1.0) b.lower = std::exp(exponent);
  return b;
}

double ExpSumTwoSided(std::span<const double> rates, double epsilon) {
  if (!(epsilon > 0.0)) Fail(ErrorCode::kDomain, "epsilon must be > 0");
  const double upper = ExpSumTails(rates, 1.0 + epsilon).upper;
  const double lower = epsilon < 1.0 ? ExpSumTails(rates, 1.0 - epsilon).lower : 0.0;
  return upper + lower;
}

double BinomialLowerTail(std::size_t n_trials, double p, double epsilon) {
  CheckProbability(p);
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    Fail(ErrorCode::kDomain, "epsilon must lie in (0, 1]");
  }
  const double lambda = static_cast<double>(n_trials) * p;
  return std::exp(-epsilon * epsilon * lambda / 2.0);
}

double BinomialCdfBelow(std::size_t n_trials, double p, double x) {
  CheckProbability(p);
  double sum = 0.0;
  for (std::size_t j = 0; j <= n_trials && static_cast<double>(j) < x; ++j) {
    sum += std::exp(LogBinomialPmf(n_trials, p, j));
  }
  return std::min(sum, 1.0);
}

MinBinomialBound MinBinomialLowerBound(std::size_t n_trials, double p) {
  CheckProbability(p);
  MinBinomialBound b;
  b.lambda = static_cast<double>(n_trials) * p;
  b.large_mean = b.lambda >= 2.0;
  if (b.large_mean) {
    b.threshold = 0.65 * b.lambda;
    b.bound = 0.25;
  } else {
    b.threshold = 1.0;
    b.bound = 0.18 * b.lambda * b.lambda;
  }
  return b;
}

std::vector<BoundReport> ValidateIrwinHall(std::uint64_t seed,
                                           std::size_t samples) {
  Rng rng(seed);
  std::vector<BoundReport> out;
  for (std::size_t l : {1, 2, 3, 5, 8}) {
    for (double a : {0.25, 0.75, 1.0, 1.5}) {
      BoundReport r;
      r.name = "irwin_hall";
      r.params = Params("l=", l, " a=", a);
      r.bound_value = IrwinHallTail(l, a);
      r.exact = IrwinHallCdf(l, a);
      std::size_t hits = 0;
      for (std::size_t i = 0; i < samples; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < l; ++j) sum += rng.OpenUnit();
        hits += sum <= a;
      }
      r.samples = samples;
      r.empirical_frequency = static_cast<double>(hits) / static_cast<double>(samples);
      r.standard_error = SeFor(r.empirical_frequency, samples);
      Judge(r);
      out.push_back(r);
    }
  }
  return out;
}

std::vector<BoundReport> ValidateExpSumTails(std::uint64_t seed,
                                             std::size_t samples) {
  struct RateSet {
    std::string label;
    std::vector<double> rates;
  };
  std::vector<RateSet> sets;
  sets.push_back({"single(n=1000)", {999.0}});
  {
    RateSet spt{"spt(n=1000,d=32)", {}};
    for (int i = 1; i < 32; ++i) spt.rates.push_back(i * (1000.0 - i));
    sets.push_back(spt);
  }
  {
    RateSet ladder{"ladder(1..10)", {}};
    for (int i = 1; i <= 10; ++i) ladder.rates.push_back(i);
    sets.push_back(ladder);
  }
  sets.push_back({"gamma(4,5)", {5.0, 5.0, 5.0, 5.0}});

  Rng rng(seed);
  std::vector<BoundReport> out;
  std::vector<double> draws(samples);
  for (const auto& set : sets) {
    for (double& x : draws) {
      x = 0.0;
      for (double rate : set.rates) x += rng.Exponential(rate);
    }
    for (double lambda : {0.5, 0.8, 1.2, 1.5, 2.0}) {
      const ExpSumTailBounds b = ExpSumTails(set.rates, lambda);
      const double cut = lambda * b.mu;
      std::size_t hits = 0;
      for (double x : draws) hits += lambda > 1.0 ? x >= cut : x <= cut;
      BoundReport r;
      r.name = lambda > 1.0 ? "exp_sum_upper" : "exp_sum_lower";
      r.params = Params(set.label, " lambda=", lambda);
      r.bound_value = lambda > 1.0 ? b.upper : b.lower;
      r.samples = samples;
      r.empirical_frequency = static_cast<double>(hits) / static_cast<double>(samples);
      r.standard_error = SeFor(r.empirical_frequency, samples);
      Judge(r);
      out.push_back(r);
    }
  }
  return out;
}

std::vector<BoundReport> ValidateBinomialLowerTail(std::uint64_t seed,
                                                   std::size_t samples) {
  const std::pair<std::size_t, double> designs[] = {
      {100, 0.5}, {50, 0.2}, {400, 0.05}, {20, 0.9}, {1000, 0.01}};
  Rng rng(seed);
  std::vector<BoundReport> out;
  for (auto [n, p] : designs) {
    std::binomial_distribution<std::size_t> bin(n, p);
    std::vector<std::size_t> draws(samples);
    for (auto& z : draws) z = bin(rng.engine());
    for (double eps : {0.1, 0.2, 0.5, 1.0}) {
      const double cut = (1.0 - eps) * static_cast<double>(n) * p;
      std::size_t hits = 0;
      for (std::size_t z : draws) hits += static_cast<double>(z) < cut;
      BoundReport r;
      r.name = "binomial_lower_tail";
      r.params = Params("n=", n, " p=", p, " eps=", eps);
      r.bound_value = BinomialLowerTail(n, p, eps);
      r.exact = BinomialCdfBelow(n, p, cut);
      r.samples = samples;
      r.empirical_frequency = static_cast<double>(hits) / static_cast<double>(samples);
      r.standard_error = SeFor(r.empirical_frequency, samples);
      Judge(r);
      out.push_back(r);
    }
  }
  return out;
}

std::vector<BoundReport> ValidateMinBinomial(std::uint64_t seed,
                                             std::size_t samples) {
  const std::pair<std::size_t, double> designs[] = {
      // mean >= 2
      {100, 0.1}, {20, 0.5}, {10, 0.2}, {50, 0.06}, {1000, 0.002},
      {30, 0.9}, {200, 0.25}, {7, 0.3}, {4, 0.5}, {1000, 0.05},
      // mean < 2
      {100, 0.005}, {100, 0.019}, {50, 0.01}, {1000, 0.001}, {10, 0.1},
      {200, 0.001}, {5, 0.3}, {30, 0.05}, {1000, 0.0001}, {3, 0.5}};
  Rng rng(seed);
  std::vector<BoundReport> out;
  for (auto [n, p] : designs) {
    const MinBinomialBound b = MinBinomialLowerBound(n, p);
    std::binomial_distribution<std::size_t> bin(n, p);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      const std::size_t z1 = bin(rng.engine());
      const std::size_t z2 = bin(rng.engine());
      hits += static_cast<double>(std::min(z1, z2)) >= b.threshold;
    }
    // Pr(min >= m) = Pr(Z >= m)^2 by independence.
    const double single = 1.0 - BinomialCdfBelow(n, p, b.threshold);
    BoundReport r;
    r.name = b.large_mean ? "min_binomial_large" : "min_binomial_small";
    r.params = Params("n=", n, " p=", p, " lambda=", b.lambda);
    r.is_upper = false;
    r.bound_value = b.bound;
    r.exact = single * single;
    r.samples = samples;
    r.empirical_frequency = static_cast<double>(hits) / static_cast<double>(samples);
    r.standard_error = SeFor(r.empirical_frequency, samples);
    Judge(r);
    out.push_back(r);
  }
  return out;
}

}  // namespace kpath
