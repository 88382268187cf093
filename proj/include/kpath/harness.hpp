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

#ifndef KPATH_HARNESS_HPP_
#define KPATH_HARNESS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kpath/weights.hpp"

namespace kpath {

enum class OutputFormat { kCsv, kJson };
OutputFormat ParseFormat(const std::string& name);

struct ExperimentConfig {
  std::size_t n = 100;
  std::size_t k_max = 0;            // 0: max of the k-grid
  std::vector<std::size_t> k_grid;  // empty: default geometric grid
  bool all_k = false;               // k-grid = 1..k_max
  WeightModel model = WeightModel::kUniform01;
  std::size_t trials = 1;
  std::uint64_t seed = 1;
  std::size_t workers = 1;
};

// {1, 2, 4, ...} together with floor(n/2) and n-1, clipped to [1, k_max].
std::vector<std::size_t> DefaultKGrid(std::size_t n, std::size_t k_max);

// Validates and fills in k_max and k_grid. Throws kInvalidParameter.
ExperimentConfig ResolveConfig(ExperimentConfig config);

enum class BatchKind { kPaths, kFlow };

// One (trial, k) observation. `value` is X_k (paths) or F_k (flow); absent
// quantities are NaN. `s_ratio` is only used by flow batches.
struct BatchRow {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t k = 0;
  bool exists = false;
  double value = 0.0;
  double s_k = 0.0;
  double limit = 0.0;
  double ratio = 0.0;
  double s_ratio = 0.0;
};

struct AggregateRow {
  std::size_t k = 0;
  std::size_t n_exist = 0;
  double ratio_mean = 0.0;
  double ratio_median = 0.0;
  double ratio_q05 = 0.0;
  double ratio_q95 = 0.0;
  double cond_mean = 0.0;  // mean of value over rows where it exists
};

// Per-k aggregates as a pure function of the rows, folded in row order.
std::vector<AggregateRow> Aggregate(const std::vector<BatchRow>& rows,
                                    const std::vector<std::size_t>& k_grid);

// Counters from per-trial structural checks; every *_violations field must
// stay zero on a correct run.
struct StructuralAudit {
  std::size_t paths_checked = 0;
  std::size_t monotone_violations = 0;
  std::size_t disjoint_violations = 0;
  std::size_t length_violations = 0;     // length > 19 n cost
  std::size_t prefix_violations = 0;     // S_k != running sum of X_k
  std::size_t lower_bound_checks = 0;
  std::size_t lower_bound_violations = 0;  // S_k < sum_{i<k} (W^s_(i) + W^t_(i))
  std::size_t existence_floor_violations = 0;  // P_k absent for k <= n/2
  std::size_t dominance_violations = 0;  // flow: F_k > S_k
  std::size_t k1_mismatches = 0;         // flow: F_1 != X_1
  double max_slackness_gap = 0.0;        // flow: optimality audit
};

struct TrialBatch {
  BatchKind kind = BatchKind::kPaths;
  ExperimentConfig config;  // resolved
  std::vector<BatchRow> rows;
  std::vector<AggregateRow> aggregates;
  StructuralAudit audit;
};

TrialBatch RunPathsExperiment(const ExperimentConfig& config);
TrialBatch RunFlowExperiment(const ExperimentConfig& config);

struct ConditionalMean {
  std::size_t k = 0;
  std::size_t trials = 0;
  std::size_t n_exist = 0;
  double mean = 0.0;       // NaN when flagged
  double std_error = 0.0;  // NaN when flagged
  double limit = 0.0;
  double ratio = 0.0;      // mean / limit
  bool flagged = false;    // no trial produced P_k
};

// E[X_k | P_k exists] per k of the grid, from the rows of a paths batch.
std::vector<ConditionalMean> ConditionalMeans(const std::vector<BatchRow>& rows,
                                              const std::vector<std::size_t>& k_grid,
                                              WeightModel model, std::size_t n);

struct ConditionalExpectationResult {
  TrialBatch batch;
  std::vector<ConditionalMean> estimates;
};
ConditionalExpectationResult RunConditionalExpectation(const ExperimentConfig& config);

// Rows go to `path`; for CSV the aggregates go to AggregatePath(path). JSON
// writes a single document holding config, rows, aggregates and audit.
// Numbers use 17 significant digits; absent values are empty (CSV) or null.
// On failure no partial file is left behind.
void WriteBatch(const TrialBatch& batch, OutputFormat format,
                const std::string& path);
std::string AggregatePath(const std::string& path);
void WriteConditionalMeans(const std::vector<ConditionalMean>& estimates,
                           OutputFormat format, const std::string& path);
// Two columns: k and mean ratio.
void WriteGnuplot(const TrialBatch& batch, const std::string& path);

std::string RowsCsv(const TrialBatch& batch);
std::string AggregatesCsv(const std::vector<AggregateRow>& aggregates);
std::string BatchJson(const TrialBatch& batch);

std::vector<BatchRow> ParseRowsCsv(const std::string& text);
std::vector<AggregateRow> ParseAggregatesCsv(const std::string& text);
std::vector<BatchRow> ParseRowsJson(const std::string& text);

std::string ReadFile(const std::string& path);

}  // namespace kpath

#endif  // KPATH_HARNESS_HPP_
