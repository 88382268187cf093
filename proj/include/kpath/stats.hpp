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

#ifndef KPATH_STATS_HPP_
#define KPATH_STATS_HPP_

#include <functional>
#include <span>
#include <vector>

namespace kpath::stats {

double Mean(std::span<const double> xs);
// Sample standard deviation (n-1 denominator); 0 for fewer than two values.
double StdDev(std::span<const double> xs);
double StdError(std::span<const double> xs);

// Linear-interpolation quantile on sorted data (R type 7).
double QuantileSorted(std::span<const double> sorted, double q);
double Quantile(std::span<const double> xs, double q);

// sup |F_a - F_b| between two empirical CDFs.
double KsTwoSample(std::vector<double> a, std::vector<double> b);

// sup |F_n - F| against a continuous reference CDF.
double KsOneSample(std::vector<double> xs, const std::function<double(double)>& cdf);

}  // namespace kpath::stats

#endif  // KPATH_STATS_HPP_
