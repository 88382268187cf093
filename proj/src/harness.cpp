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

#include "kpath/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <nlohmann/json.hpp>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "kpath/error.hpp"
#include "kpath/kflow.hpp"
#include "kpath/paths.hpp"
#include "kpath/stats.hpp"

namespace kpath {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
// Relative slack for comparisons between sums accumulated in different
// orders (greedy vs flow costs, prefix sums vs sorted incident weights).
constexpr double kRelSlack = 1e-12;

const char* kPathsHeader = "trial,seed,k,exists,x_k,s_k,limit,ratio";
const char* kFlowHeader = "trial,seed,k,feasible,f_k,s_k,limit,ratio,s_ratio";
const char* kAggregateHeader =
    "k,n_exist,ratio_mean,ratio_median,ratio_q05,ratio_q95,cond_mean_xk";

std::string Num(double x) {
  if (std::isnan(x)) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double ParseNum(const std::string& field) {
  if (field.empty()) return kNaN;
  char* end = nullptr;
  const double v = std::strtod(field.c_str(), &end);
  if (end != field.c_str() + field.size()) {
    Fail(ErrorCode::kInvalidParameter, "bad numeric field '" + field + "'");
  }
  return v;
}

std::uint64_t ParseU64(const std::string& field) {
  std::size_t pos = 0;
  const std::uint64_t v = std::stoull(field, &pos);
  if (pos != field.size()) {
    Fail(ErrorCode::kInvalidParameter, "bad integer field '" + field + "'");
  }
  return v;
}

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line != "\r") lines.push_back(line);
  }
  return lines;
}

struct TrialOutput {
  std::vector<BatchRow> rows;
  StructuralAudit audit;
};

void MergeAudit(StructuralAudit& into, const StructuralAudit& a) {
  into.paths_checked += a.paths_checked;
  into.monotone_violations += a.monotone_violations;
  into.disjoint_violations += a.disjoint_violations;
  into.length_violations += a.length_violations;
  into.prefix_violations += a.prefix_violations;
  into.lower_bound_checks += a.lower_bound_checks;
  into.lower_bound_violations += a.lower_bound_violations;
  into.existence_floor_violations += a.existence_floor_violations;
  into.dominance_violations += a.dominance_violations;
  into.k1_mismatches += a.k1_mismatches;
  into.max_slackness_gap = std::max(into.max_slackness_gap, a.max_slackness_gap);
}

std::vector<double> SortedIncident(const WeightedCompleteGraph& g, Vertex v) {
  std::vector<double> row(g.n());
  g.LoadRawRow(v, row);
  row.erase(row.begin() + v);
  std::sort(row.begin(), row.end());
  return row;
}

// Checks every extracted path of one trial; see StructuralAudit.
void AuditSuccessive(const WeightedCompleteGraph& g, const SuccessiveResult& res,
                     const std::vector<double>& ws, const std::vector<double>& wt,
                     StructuralAudit& audit) {
  const double n = static_cast<double>(g.n());
  std::unordered_set<std::uint64_t> edges;
  double running = 0.0;
  double incident = 0.0;  // sum_{i<k} (W^s_(i) + W^t_(i))
  for (std::size_t k = 1; k <= res.records.size(); ++k) {
    if (!res.exists(k)) {
      if (2 * k <= g.n()) ++audit.existence_floor_violations;
      continue;
    }
    const PathRecord& p = *res.records[k - 1];
    ++audit.paths_checked;
    if (k > 1 && res.exists(k - 1)) {
      const double prev = res.records[k - 2]->cost;
      if (p.cost < prev * (1.0 - kRelSlack)) ++audit.monotone_violations;
    }
    for (std::size_t i = 1; i < p.vertices.size(); ++i) {
      if (!edges.insert(PairIndex(p.vertices[i - 1], p.vertices[i])).second) {
        ++audit.disjoint_violations;
      }
    }
    if (static_cast<double>(p.length()) > 19.0 * n * p.cost) ++audit.length_violations;
    running += p.cost;
    if (res.prefix_sums[k - 1] != running) ++audit.prefix_violations;
    if (k > 1) incident += ws[k - 2] + wt[k - 2];
    ++audit.lower_bound_checks;
    if (res.prefix_sums[k - 1] < incident * (1.0 - kRelSlack)) {
      ++audit.lower_bound_violations;
    }
  }
}

TrialOutput RunPathsTrial(const ExperimentConfig& cfg, std::size_t trial,
                          const std::vector<double>& limits) {
  TrialOutput out;
  const std::uint64_t seed = TrialSeed(cfg.seed, trial);
  auto g = WeightedCompleteGraph::Generate(cfg.n, cfg.model, seed);
  const auto ws = SortedIncident(g, g.source());
  const auto wt = SortedIncident(g, g.sink());
  const SuccessiveResult res = SuccessivePaths(g, cfg.k_max);
  AuditSuccessive(g, res, ws, wt, out.audit);
  for (std::size_t j = 0; j < cfg.k_grid.size(); ++j) {
    const std::size_t k = cfg.k_grid[j];
    BatchRow row;
    row.trial = trial;
    row.seed = seed;
    row.k = k;
    row.limit = limits[j];
    row.exists = res.exists(k);
    row.value = row.exists ? res.records[k - 1]->cost : kNaN;
    row.s_k = row.exists ? res.prefix_sums[k - 1] : kNaN;
    row.ratio = row.exists ? row.value / row.limit : kNaN;
    row.s_ratio = kNaN;
    out.rows.push_back(row);
  }
  return out;
}

TrialOutput RunFlowTrial(const ExperimentConfig& cfg, std::size_t trial,
                         const std::vector<double>& limits) {
  TrialOutput out;
  const std::uint64_t seed = TrialSeed(cfg.seed, trial);
  auto g = WeightedCompleteGraph::Generate(cfg.n, cfg.model, seed);

  FlowSolver solver(g);
  std::vector<FlowResult> flows;
  bool saturated = false;
  for (std::size_t k : cfg.k_grid) {
    while (!saturated && solver.flow_value() < k) saturated = !solver.Augment();
    flows.push_back(solver.Snapshot(k));
  }
  out.audit.max_slackness_gap = solver.ComplementarySlacknessGap();

  const SuccessiveResult res = SuccessivePaths(g, cfg.k_max);
  for (std::size_t j = 0; j < cfg.k_grid.size(); ++j) {
    const std::size_t k = cfg.k_grid[j];
    const FlowResult& f = flows[j];
    BatchRow row;
    row.trial = trial;
    row.seed = seed;
    row.k = k;
    row.limit = limits[j];
    row.exists = f.feasible;
    row.value = f.feasible ? f.total_cost : kNaN;
    row.ratio = f.feasible ? row.value / row.limit : kNaN;
    row.s_k = res.exists(k) ? res.prefix_sums[k - 1] : kNaN;
    row.s_ratio = row.s_k / row.limit;
    if (f.feasible && res.exists(k)) {
      if (row.value > row.s_k * (1.0 + kRelSlack)) ++out.audit.dominance_violations;
      if (k == 1 && row.value != res.records[0]->cost) ++out.audit.k1_mismatches;
    }
    out.rows.push_back(row);
  }
  return out;
}

template <class TrialFn>
TrialBatch RunBatch(BatchKind kind, const ExperimentConfig& config,
                    TrialFn&& trial_fn) {
  TrialBatch batch;
  batch.kind = kind;
  batch.config = ResolveConfig(config);
  const ExperimentConfig& cfg = batch.config;

  std::vector<double> limits;
  for (std::size_t k : cfg.k_grid) {
    limits.push_back(kind == BatchKind::kPaths ? LimitValue(cfg.model, cfg.n, k)
                                               : FlowLimitValue(cfg.model, cfg.n, k));
  }

  std::vector<TrialOutput> outputs(cfg.trials);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (;;) {
      const std::size_t trial = next.fetch_add(1);
      if (trial >= cfg.trials) return;
      try {
        outputs[trial] = trial_fn(cfg, trial, limits);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next.store(cfg.trials);
      }
    }
  };
  const std::size_t workers = std::min(cfg.workers, cfg.trials);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  // Ordered fold.
  for (const TrialOutput& out : outputs) {
    batch.rows.insert(batch.rows.end(), out.rows.begin(), out.rows.end());
    MergeAudit(batch.audit, out.audit);
  }
  batch.aggregates = Aggregate(batch.rows, cfg.k_grid);
  return batch;
}

void WriteAtomically(const std::vector<std::pair<std::string, std::string>>& files) {
  namespace fs = std::filesystem;
  std::vector<std::string> temps;
  auto cleanup = [&temps] {
    std::error_code ec;
    for (const auto& t : temps) fs::remove(t, ec);
  };
  for (const auto& [path, content] : files) {
    const std::string tmp = path + ".partial";
    temps.push_back(tmp);
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << content;
    out.close();
    if (!out) {
      cleanup();
      Fail(ErrorCode::kIo, "cannot write '" + path + "'");
    }
  }
  for (std::size_t i = 0; i < files.size(); ++i) {
    std::error_code ec;
    fs::rename(temps[i], files[i].first, ec);
    if (ec) {
      cleanup();
      for (std::size_t j = 0; j < i; ++j) fs::remove(files[j].first, ec);
      Fail(ErrorCode::kIo, "cannot write '" + files[i].first + "'");
    }
  }
}

nlohmann::json JsonNum(double x) {
  return std::isnan(x) ? nlohmann::json(nullptr) : nlohmann::json(x);
}

double FromJsonNum(const nlohmann::json& j) {
  return j.is_null() ? kNaN : j.get<double>();
}

}  // namespace

OutputFormat ParseFormat(const std::string& name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  Fail(ErrorCode::kInvalidParameter, "unknown output format '" + name + "'");
}

std::vector<std::size_t> DefaultKGrid(std::size_t n, std::size_t k_max) {
  std::vector<std::size_t> grid;
  for (std::size_t k = 1; k <= k_max; k *= 2) grid.push_back(k);
  for (std::size_t k : {n / 2, n - 1}) {
    if (k >= 1 && k <= k_max) grid.push_back(k);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

ExperimentConfig ResolveConfig(ExperimentConfig c) {
  Require(c.n >= 2, "n must be >= 2");
  Require(c.trials >= 1, "trials must be >= 1");
  Require(c.workers >= 1, "workers must be >= 1");
  Require(c.k_max <= c.n - 1, "k_max must be <= n-1");
  if (c.all_k) {
    if (c.k_max == 0) c.k_max = c.n - 1;
    c.k_grid.clear();
    for (std::size_t k = 1; k <= c.k_max; ++k) c.k_grid.push_back(k);
  } else if (c.k_grid.empty()) {
    if (c.k_max == 0) c.k_max = c.n - 1;
    c.k_grid = DefaultKGrid(c.n, c.k_max);
  } else {
    std::sort(c.k_grid.begin(), c.k_grid.end());
    c.k_grid.erase(std::unique(c.k_grid.begin(), c.k_grid.end()), c.k_grid.end());
    Require(c.k_grid.front() >= 1, "k-grid entries must be >= 1");
    if (c.k_max == 0) c.k_max = c.k_grid.back();
    Require(c.k_grid.back() <= c.k_max, "k-grid must lie within [1, k_max]");
    Require(c.k_max <= c.n - 1, "k-grid entries must be <= n-1");
  }
  return c;
}

std::vector<AggregateRow> Aggregate(const std::vector<BatchRow>& rows,
                                    const std::vector<std::size_t>& k_grid) {
  std::vector<AggregateRow> out;
  for (std::size_t k : k_grid) {
    std::vector<double> ratios;
    std::vector<double> values;
    for (const BatchRow& r : rows) {
      if (r.k != k || !r.exists) continue;
      ratios.push_back(r.ratio);
      values.push_back(r.value);
    }
    AggregateRow a;
    a.k = k;
    a.n_exist = ratios.size();
    if (ratios.empty()) {
      a.ratio_mean = a.ratio_median = a.ratio_q05 = a.ratio_q95 = a.cond_mean = kNaN;
    } else {
      a.ratio_mean = stats::Mean(ratios);
      a.cond_mean = stats::Mean(values);
      std::sort(ratios.begin(), ratios.end());
      a.ratio_median = stats::QuantileSorted(ratios, 0.5);
      a.ratio_q05 = stats::QuantileSorted(ratios, 0.05);
      a.ratio_q95 = stats::QuantileSorted(ratios, 0.95);
    }
    out.push_back(a);
  }
  return out;
}

TrialBatch RunPathsExperiment(const ExperimentConfig& config) {
  return RunBatch(BatchKind::kPaths, config, RunPathsTrial);
}

TrialBatch RunFlowExperiment(const ExperimentConfig& config) {
  return RunBatch(BatchKind::kFlow, config, RunFlowTrial);
}

std::vector<ConditionalMean> ConditionalMeans(const std::vector<BatchRow>& rows,
                                              const std::vector<std::size_t>& k_grid,
                                              WeightModel model, std::size_t n) {
  std::vector<ConditionalMean> out;
  for (std::size_t k : k_grid) {
    ConditionalMean c;
    c.k = k;
    c.limit = LimitValue(model, n, k);
    std::vector<double> values;
    for (const BatchRow& r : rows) {
      if (r.k != k) continue;
      ++c.trials;
      if (r.exists) values.push_back(r.value);
    }
    c.n_exist = values.size();
    c.flagged = values.empty();
    if (c.flagged) {
      c.mean = c.std_error = c.ratio = kNaN;
    } else {
      c.mean = stats::Mean(values);
      c.std_error = stats::StdError(values);
      c.ratio = c.mean / c.limit;
    }
    out.push_back(c);
  }
  return out;
}

ConditionalExpectationResult RunConditionalExpectation(const ExperimentConfig& config) {
  ConditionalExpectationResult r;
  r.batch = RunPathsExperiment(config);
  r.estimates = ConditionalMeans(r.batch.rows, r.batch.config.k_grid,
                                 r.batch.config.model, r.batch.config.n);
  return r;
}

std::string RowsCsv(const TrialBatch& batch) {
  const bool flow = batch.kind == BatchKind::kFlow;
  std::string out = flow ? kFlowHeader : kPathsHeader;
  out += '\n';
  for (const BatchRow& r : batch.rows) {
    out += std::to_string(r.trial) + ',' + std::to_string(r.seed) + ',' +
           std::to_string(r.k) + ',' + (r.exists ? "1" : "0") + ',' +
           Num(r.value) + ',' + Num(r.s_k) + ',' + Num(r.limit) + ',' +
           Num(r.ratio);
    if (flow) out += ',' + Num(r.s_ratio);
    out += '\n';
  }
  return out;
}

std::string AggregatesCsv(const std::vector<AggregateRow>& aggregates) {
  std::string out = kAggregateHeader;
  out += '\n';
  for (const AggregateRow& a : aggregates) {
    out += std::to_string(a.k) + ',' + std::to_string(a.n_exist) + ',' +
           Num(a.ratio_mean) + ',' + Num(a.ratio_median) + ',' +
           Num(a.ratio_q05) + ',' + Num(a.ratio_q95) + ',' + Num(a.cond_mean) +
           '\n';
  }
  return out;
}

std::string BatchJson(const TrialBatch& batch) {
  const bool flow = batch.kind == BatchKind::kFlow;
  const ExperimentConfig& c = batch.config;
  nlohmann::json j;
  j["kind"] = flow ? "flow" : "paths";
  j["config"] = {{"n", c.n},         {"k_max", c.k_max},   {"k_grid", c.k_grid},
                 {"model", ModelName(c.model)}, {"trials", c.trials},
                 {"seed", c.seed},   {"workers", c.workers}};
  auto& rows = j["rows"] = nlohmann::json::array();
  for (const BatchRow& r : batch.rows) {
    nlohmann::json row = {{"trial", r.trial}, {"seed", r.seed}, {"k", r.k}};
    row[flow ? "feasible" : "exists"] = r.exists;
    row[flow ? "f_k" : "x_k"] = JsonNum(r.value);
    row["s_k"] = JsonNum(r.s_k);
    row["limit"] = JsonNum(r.limit);
    row["ratio"] = JsonNum(r.ratio);
    if (flow) row["s_ratio"] = JsonNum(r.s_ratio);
    rows.push_back(std::move(row));
  }
  auto& aggs = j["aggregates"] = nlohmann::json::array();
  for (const AggregateRow& a : batch.aggregates) {
    aggs.push_back({{"k", a.k},
                    {"n_exist", a.n_exist},
                    {"ratio_mean", JsonNum(a.ratio_mean)},
                    {"ratio_median", JsonNum(a.ratio_median)},
                    {"ratio_q05", JsonNum(a.ratio_q05)},
                    {"ratio_q95", JsonNum(a.ratio_q95)},
                    {"cond_mean_xk", JsonNum(a.cond_mean)}});
  }
  const StructuralAudit& au = batch.audit;
  j["audit"] = {{"paths_checked", au.paths_checked},
                {"monotone_violations", au.monotone_violations},
                {"disjoint_violations", au.disjoint_violations},
                {"length_violations", au.length_violations},
                {"prefix_violations", au.prefix_violations},
                {"lower_bound_checks", au.lower_bound_checks},
                {"lower_bound_violations", au.lower_bound_violations},
                {"existence_floor_violations", au.existence_floor_violations},
                {"dominance_violations", au.dominance_violations},
                {"k1_mismatches", au.k1_mismatches},
                {"max_slackness_gap", au.max_slackness_gap}};
  return j.dump(1) + '\n';
}

std::vector<BatchRow> ParseRowsCsv(const std::string& text) {
  const auto lines = Lines(text);
  Require(!lines.empty(), "rows CSV has no header");
  const bool flow = lines[0] == kFlowHeader;
  Require(flow || lines[0] == kPathsHeader, "unrecognized rows CSV header");
  std::vector<BatchRow> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = SplitCsvLine(lines[i]);
    Require(f.size() == (flow ? 9u : 8u), "rows CSV line has wrong field count");
    BatchRow r;
    r.trial = ParseU64(f[0]);
    r.seed = ParseU64(f[1]);
    r.k = ParseU64(f[2]);
    r.exists = f[3] == "1";
    r.value = ParseNum(f[4]);
    r.s_k = ParseNum(f[5]);
    r.limit = ParseNum(f[6]);
    r.ratio = ParseNum(f[7]);
    r.s_ratio = flow ? ParseNum(f[8]) : kNaN;
    rows.push_back(r);
  }
  return rows;
}

std::vector<AggregateRow> ParseAggregatesCsv(const std::string& text) {
  const auto lines = Lines(text);
  Require(!lines.empty() && lines[0] == kAggregateHeader,
          "unrecognized aggregates CSV header");
  std::vector<AggregateRow> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = SplitCsvLine(lines[i]);
    Require(f.size() == 7, "aggregates CSV line has wrong field count");
    AggregateRow a;
    a.k = ParseU64(f[0]);
    a.n_exist = ParseU64(f[1]);
    a.ratio_mean = ParseNum(f[2]);
    a.ratio_median = ParseNum(f[3]);
    a.ratio_q05 = ParseNum(f[4]);
    a.ratio_q95 = ParseNum(f[5]);
    a.cond_mean = ParseNum(f[6]);
    out.push_back(a);
  }
  return out;
}

std::vector<BatchRow> ParseRowsJson(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  const bool flow = j.at("kind") == "flow";
  std::vector<BatchRow> rows;
  for (const auto& r : j.at("rows")) {
    BatchRow row;
    row.trial = r.at("trial").get<std::size_t>();
    row.seed = r.at("seed").get<std::uint64_t>();
    row.k = r.at("k").get<std::size_t>();
    row.exists = r.at(flow ? "feasible" : "exists").get<bool>();
    row.value = FromJsonNum(r.at(flow ? "f_k" : "x_k"));
    row.s_k = FromJsonNum(r.at("s_k"));
    row.limit = FromJsonNum(r.at("limit"));
    row.ratio = FromJsonNum(r.at("ratio"));
    row.s_ratio = flow ? FromJsonNum(r.at("s_ratio")) : kNaN;
    rows.push_back(row);
  }
  return rows;
}

std::string AggregatePath(const std::string& path) {
  const std::string ext = ".csv";
  if (path.size() > ext.size() &&
      path.compare(path.size() - ext.size(), ext.size(), ext) == 0) {
    return path.substr(0, path.size() - ext.size()) + ".agg.csv";
  }
  return path + ".agg.csv";
}

void WriteBatch(const TrialBatch& batch, OutputFormat format,
                const std::string& path) {
  if (format == OutputFormat::kJson) {
    WriteAtomically({{path, BatchJson(batch)}});
  } else {
    WriteAtomically({{path, RowsCsv(batch)},
                     {AggregatePath(path), AggregatesCsv(batch.aggregates)}});
  }
}

void WriteConditionalMeans(const std::vector<ConditionalMean>& estimates,
                           OutputFormat format, const std::string& path) {
  if (format == OutputFormat::kJson) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : estimates) {
      j.push_back({{"k", c.k},
                   {"trials", c.trials},
                   {"n_exist", c.n_exist},
                   {"cond_mean_xk", JsonNum(c.mean)},
                   {"std_err", JsonNum(c.std_error)},
                   {"limit", JsonNum(c.limit)},
                   {"ratio", JsonNum(c.ratio)},
                   {"flagged", c.flagged}});
    }
    WriteAtomically({{path, j.dump(1) + '\n'}});
    return;
  }
  std::string out = "k,trials,n_exist,cond_mean_xk,std_err,limit,ratio,flagged\n";
  for (const auto& c : estimates) {
    out += std::to_string(c.k) + ',' + std::to_string(c.trials) + ',' +
           std::to_string(c.n_exist) + ',' + Num(c.mean) + ',' +
           Num(c.std_error) + ',' + Num(c.limit) + ',' + Num(c.ratio) + ',' +
           (c.flagged ? "1" : "0") + '\n';
  }
  WriteAtomically({{path, out}});
}

void WriteGnuplot(const TrialBatch& batch, const std::string& path) {
  std::string out = "# k ratio_mean\n";
  for (const AggregateRow& a : batch.aggregates) {
    if (a.n_exist == 0) continue;
    out += std::to_string(a.k) + ' ' + Num(a.ratio_mean) + '\n';
  }
  WriteAtomically({{path, out}});
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorCode::kIo, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace kpath
