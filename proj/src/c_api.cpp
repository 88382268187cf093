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

#include "kpath/kpath.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <nlohmann/json.hpp>
#include <string>

#include "kpath/error.hpp"
#include "kpath/harness.hpp"
#include "kpath/kflow.hpp"
#include "kpath/order_stats.hpp"
#include "kpath/paths.hpp"
#include "kpath/spt.hpp"
#include "kpath/stats.hpp"
#include "kpath/tail_bounds.hpp"
#include "kpath/walecki.hpp"
#include "kpath/weights.hpp"

struct kp_graph {
  kpath::WeightedCompleteGraph graph;
};
struct kp_paths {
  kpath::SuccessiveResult result;
};
struct kp_flow {
  kpath::FlowResult result;
};
struct kp_batch {
  kpath::TrialBatch batch;
};
struct kp_condexp {
  kp_batch batch;
  std::vector<kpath::ConditionalMean> estimates;
};

namespace {

thread_local std::string g_last_error;

kp_status ToStatus(kpath::ErrorCode code) {
  switch (code) {
    case kpath::ErrorCode::kInvalidParameter: return KP_ERR_INVALID_PARAMETER;
    case kpath::ErrorCode::kInvalidEdge: return KP_ERR_INVALID_EDGE;
    case kpath::ErrorCode::kDomain: return KP_ERR_DOMAIN;
    case kpath::ErrorCode::kIo: return KP_ERR_IO;
    case kpath::ErrorCode::kInfeasible: return KP_ERR_INFEASIBLE;
    case kpath::ErrorCode::kInternal: return KP_ERR_INTERNAL;
  }
  return KP_ERR_INTERNAL;
}

// Runs `fn`, translating exceptions into status codes.
template <class Fn>
kp_status Guard(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return KP_OK;
  } catch (const kpath::Error& e) {
    g_last_error = e.what();
    return ToStatus(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return KP_ERR_OUT_OF_MEMORY;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return KP_ERR_INTERNAL;
  }
}

#define KP_CHECK_NOT_NULL(p)                             \
  do {                                                   \
    if ((p) == nullptr) {                                \
      g_last_error = "null argument: " #p;               \
      return KP_ERR_NULL_ARGUMENT;                       \
    }                                                    \
  } while (0)

kpath::WeightModel Model(kp_model m) {
  if (m == KP_MODEL_UNIFORM) return kpath::WeightModel::kUniform01;
  if (m == KP_MODEL_EXPONENTIAL) return kpath::WeightModel::kExponential1;
  kpath::Fail(kpath::ErrorCode::kInvalidParameter, "unknown weight model");
}

kpath::OutputFormat Format(kp_format f) {
  if (f == KP_FORMAT_CSV) return kpath::OutputFormat::kCsv;
  if (f == KP_FORMAT_JSON) return kpath::OutputFormat::kJson;
  kpath::Fail(kpath::ErrorCode::kInvalidParameter, "unknown output format");
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void CopyPath(const std::vector<kpath::Vertex>& path, uint32_t* vertices,
              size_t cap, size_t* out_len) {
  if (cap > 0 && vertices == nullptr) {
    kpath::Fail(kpath::ErrorCode::kInvalidParameter, "vertex buffer is null");
  }
  for (size_t i = 0; i < path.size() && i < cap; ++i) vertices[i] = path[i];
  *out_len = path.size();
}

kpath::ExperimentConfig ToConfig(const kp_experiment_config* c) {
  kpath::ExperimentConfig cfg;
  cfg.n = c->n;
  cfg.k_max = c->k_max;
  if (c->k_grid != nullptr) cfg.k_grid.assign(c->k_grid, c->k_grid + c->k_grid_len);
  cfg.all_k = c->all_k != 0;
  cfg.model = Model(c->model);
  cfg.trials = c->trials;
  cfg.seed = c->seed;
  cfg.workers = c->workers;
  return cfg;
}

nlohmann::json ReportsJson(const std::vector<kpath::BoundReport>& reports,
                           size_t& failures) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : reports) {
    if (!r.passed) ++failures;
    j.push_back({{"name", r.name},
                 {"params", r.params},
                 {"kind", r.is_upper ? "upper" : "lower"},
                 {"bound", r.bound_value},
                 {"exact", r.exact < 0 ? nlohmann::json(nullptr) : nlohmann::json(r.exact)},
                 {"empirical", r.empirical_frequency},
                 {"std_error", r.standard_error},
                 {"samples", r.samples},
                 {"passed", r.passed}});
  }
  return j;
}

}  // namespace

extern "C" {

const char* kp_last_error(void) { return g_last_error.c_str(); }

const char* kp_status_string(kp_status status) {
  switch (status) {
    case KP_OK: return "ok";
    case KP_ERR_INVALID_PARAMETER: return "invalid parameter";
    case KP_ERR_INVALID_EDGE: return "invalid edge";
    case KP_ERR_DOMAIN: return "domain error";
    case KP_ERR_IO: return "i/o error";
    case KP_ERR_INFEASIBLE: return "infeasible";
    case KP_ERR_INTERNAL: return "internal error";
    case KP_ERR_NULL_ARGUMENT: return "null argument";
    case KP_ERR_OUT_OF_MEMORY: return "out of memory";
  }
  return "unknown status";
}

const char* kp_version(void) { return "1.0.0"; }

void kp_string_free(char* s) { std::free(s); }

kp_status kp_graph_generate(size_t n, kp_model model, uint64_t seed,
                            kp_storage storage, kp_graph** out) {
  KP_CHECK_NOT_NULL(out);
  return Guard([&] {
    const auto mode = storage == KP_STORAGE_IMPLICIT ? kpath::StorageMode::kImplicitPrf
                                                     : kpath::StorageMode::kDense;
    *out = new kp_graph{kpath::WeightedCompleteGraph::Generate(n, Model(model), seed, mode)};
  });
}

kp_status kp_graph_from_matrix(size_t n, const double* matrix, kp_graph** out) {
  KP_CHECK_NOT_NULL(matrix);
  KP_CHECK_NOT_NULL(out);
  return Guard([&] {
    *out = new kp_graph{kpath::WeightedCompleteGraph::FromMatrix(
        n, std::span<const double>(matrix, n * n))};
  });
}

void kp_graph_free(kp_graph* g) { delete g; }

size_t kp_graph_n(const kp_graph* g) { return g == nullptr ? 0 : g->graph.n(); }

kp_status kp_graph_set_terminals(kp_graph* g, uint32_t s, uint32_t t) {
  KP_CHECK_NOT_NULL(g);
  return Guard([&] { g->graph.SetTerminals(s, t); });
}

kp_status kp_graph_weight(const kp_graph* g, uint32_t u, uint32_t v, double* out) {
  KP_CHECK_NOT_NULL(g);
  KP_CHECK_NOT_NULL(out);
  return Guard([&] { *out = g->graph.Weight(u, v); });
}

kp_status kp_graph_delete_edges(kp_graph* g, const uint32_t* pairs, size_t count) {
  KP_CHECK_NOT_NULL(g);
  if (count > 0) KP_CHECK_NOT_NULL(pairs);
  return Guard([&] {
    std::vector<kpath::Edge> edges;
    edges.reserve(count);
    for (size_t i = 0; i < count; ++i) edges.push_back({pairs[2 * i], pairs[2 * i + 1]});
    g->graph.DeleteEdges(edges);
  });
}

kp_status kp_graph_is_deleted(const kp_graph* g, uint32_t u, uint32_t v, int* out) {
  KP_CHECK_NOT_NULL(g);
  KP_CHECK_NOT_NULL(out);
  return Guard([&] { *out = g->graph.IsDeleted(u, v) ? 1 : 0; });
}

size_t kp_graph_deleted_count(const kp_graph* g) {
  return g == nullptr ? 0 : g->graph.deleted_count();
}

kp_status kp_couple_to_exponential(double w, double* out) {
  KP_CHECK_NOT_NULL(out);
  return Guard([&] { *out = kpath::CoupleToExponential(w); });
}

uint64_t kp_trial_seed(uint64_t master_seed, uint64_t trial) {
  return kpath::TrialSeed(master_seed, trial);
}

kp_status kp_shortest_path(const kp_graph* g, uint32_t from, uint32_t to,
                           uint32_t* vertices, size_t cap, size_t* out_len,
                           double* out_cost) {
  KP_CHECK_NOT_NULL(g);
  KP_CHECK_NOT_NULL(out_len);
  KP_CHECK_NOT_NULL(out_cost);
  return Guard([&] {
    const auto rec = kpath::ShortestPath(g->graph, from, to);
    if (!rec) {
      *out_len = 0;
      *out_cost = 0.0;
      return;
    }
    CopyPath(rec->vertices, vertices, cap, out_len);
    *out_cost = rec->cost;
  });
}

kp_status kp_successive_paths(kp_graph* g, size_t k_max, kp_paths** out) {
  KP_CHECK_NOT_NULL(g);
  KP_CHECK_NOT_NULL(out);
  return Guard([&] { *out = new kp_paths{kpath::SuccessivePaths(g->graph, k_max)}; });
}

void kp_paths_free(kp_paths* p) { delete p; }

size_t kp_paths_k_max(const kp_paths* p) { return p == nullptr ? 0 : p->result.k_max; }

size_t kp_paths_existing(const kp_paths* p) {
  return p == nullptr ? 0 : p->result.existing_count();
}

kp_status kp_paths_get(const kp_paths* p, size_t k, int* exists, double* cost,
                       double* prefix_sum, size_t* length) {
  KP_CHECK_NOT_NULL(p);
  KP_CHECK_NOT_NULL(exists);
  return Guard([&] {
    kpath::Require(k >= 1 && k <= p->result.k_max, "k out of range");
    *exists = p->result.exists(k) ? 1 : 0;
    if (!*exists) return;
    const auto& rec = *p->result.records[k - 1];
    if (cost) *cost = rec.cost;
    if (prefix_sum) *prefix_sum = p->result.prefix_sums[k - 1];
    if (length) *length = rec.length();
  });
}

kp_status kp_paths_vertices(const kp_paths* p, size_t k, uint32_t* vertices,
                            size_t cap, size_t* out_len) {
  KP_CHECK_NOT_NULL(p);
  KP_CHECK_NOT_NULL(out_len);
  return Guard([&] {
    kpath::Require(k >= 1 && k <= p->result.k_max, "k out of range");
    if (!p->result.exists(k)) {
      *out_len = 0;
      return;
    }
    CopyPath(p->result.records[k - 1]->vertices, vertices, cap, out_len);
  });
}

kp_status kp_limit_value(kp_model model, size_t n, size_t k, double* out) {
  KP_CHECK_NOT_NULL(out);
  return Guard([&] { *out = kpath::LimitValue(Model(model), n, k); });
}

kp_status kp_min_cost_flow(const kp_graph* g, size_t k, kp_flow** out) {
  KP_CHECK_NOT_NULL(g);
  KP_CHECK_NOT_NULL(out);
  return Guard([&] { *out = new kp_flow{kpath::MinCostKFlow(g->graph, k)}; });
}

void kp_flow_free(kp_flow* f) { delete f; }

int kp_flow_feasible(const kp_flow* f) {
  return f != nullptr && f->result.feasible ? 1 : 0;
}

double kp_flow_total_cost(const kp_flow* f) {
  return f == nullptr ? 0.0 : f->result.total_cost;
}

size_t kp_flow_path_count(const kp_flow* f) {
  return f == nullptr ? 0 : f->result.paths.size();
}

kp_status kp_flow_path(const kp_flow* f, size_t i, uint32_t* vertices, size_t cap,
                       size_t* out_len, double* out_cost) {
  KP_CHECK_NOT_NULL(f);
  KP_CHECK_NOT_NULL(out_len);
  return Guard([&] {
    kpath::Require(i < f->result.paths.size(), "path index out of range");
    CopyPath(f->result.paths[i].vertices, vertices, cap, out_len);
    if (out_cost) *out_cost = f->result.paths[i].cost;
  });
}

kp_status kp_flow_limit_value(kp_model model, size_t n, size_t k, double* out) {
  KP_CHECK_NOT_NULL(out);
  return Guard([&] {
    kpath::Require(k >= 1 && k + 1 <= n, "k must lie in [1, n-1]");
    *out = kpath::FlowLimitValue(Model(model), n, k);
  });
}

kp_status kp_mean_order_stat(size_t n, kp_model model, size_t k, double* out) {
  KP_CHECK_NOT_NULL(out);
  return Guard([&] {
    *out = kpath::MeanOrderStat(kpath::OrderStatContext(n, Model(model)), k);
  });
}

kp_status kp_sample_order_stats(size_t n, kp_model model, uint64_t seed,
                                double* out, size_t cap) {
  KP_CHECK_NOT_NULL(out);
  return Guard([&] {
    const kpath::OrderStatContext ctx(n, Model(model));
    kpath::Require(cap >= n - 1, "output buffer must hold n-1 values");
    kpath::Rng rng(seed);
    kpath::SampleOrderStats(ctx, rng, std::span<double>(out, n - 1));
  });
}

kp_status kp_concentration_report(size_t n, kp_model model, const double* samples,
                                  size_t count, double epsilon, size_t lower_rank,
                                  double* out_freq, size_t cap,
                                  double* out_simultaneous) {
  KP_CHECK_NOT_NULL(out_simultaneous);
  if (count > 0) KP_CHECK_NOT_NULL(samples);
  return Guard([&] {
    const kpath::OrderStatContext ctx(n, Model(model));
    std::vector<std::vector<double>> vecs;
    vecs.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      vecs.emplace_back(samples + i * (n - 1), samples + (i + 1) * (n - 1));
    }
    const auto rep = kpath::Concentration(ctx, vecs, epsilon, lower_rank);
    if (cap > 0) {
      kpath::Require(out_freq != nullptr, "frequency buffer is null");
      for (size_t i = 0; i < rep.violation_freq.size() && i < cap; ++i) {
        out_freq[i] = rep.violation_freq[i];
      }
    }
    *out_simultaneous = rep.simultaneous_violation_freq;
  });
}

size_t kp_default_lower_rank(size_t n) { return kpath::DefaultLowerRank(n); }

kp_status kp_spt_radius_law(size_t n, size_t d, uint64_t seed, double* out) {
  KP_CHECK_NOT_NULL(out);
  return Guard([&] { *out = kpath::RadiusByLaw(n, d, seed).radius; });
}

kp_status kp_spt_radius_growth(kp_model model, size_t n, size_t d, uint64_t seed,
                               double* out) {
  KP_CHECK_NOT_NULL(out);
  return Guard([&] { *out = kpath::RadiusByGrowth(Model(model), n, d, seed).radius; });
}

kp_status kp_spt_mean_radius(size_t n, size_t d, double* out) {
  KP_CHECK_NOT_NULL(out);
  return Guard([&] { *out = kpath::MeanRadiusByLaw(n, d); });
}

kp_status kp_ks_two_sample(const double* a, size_t na, const double* b, size_t nb,
                           double* out) {
  KP_CHECK_NOT_NULL(a);
  KP_CHECK_NOT_NULL(b);
  KP_CHECK_NOT_NULL(out);
  return Guard([&] {
    *out = kpath::stats::KsTwoSample(std::vector<double>(a, a + na),
                                     std::vector<double>(b, b + nb));
  });
}

kp_status kp_walecki_family_json(size_t n, uint32_t s, uint32_t t, char** out_json) {
  KP_CHECK_NOT_NULL(out_json);
  return Guard([&] {
    *out_json = CopyString(kpath::SaturatingFamilyJson(kpath::BuildSaturatingFamily(n, s, t)));
  });
}

kp_status kp_walecki_family_audit(size_t n, uint32_t s, uint32_t t,
                                  size_t* out_issues) {
  KP_CHECK_NOT_NULL(out_issues);
  return Guard([&] {
    *out_issues =
        kpath::AuditSaturatingFamily(kpath::BuildSaturatingFamily(n, s, t)).size();
  });
}

kp_status kp_irwin_hall_tail(size_t l, double a, double* out) {
  KP_CHECK_NOT_NULL(out);
  return Guard([&] { *out = kpath::IrwinHallTail(l, a); });
}

kp_status kp_irwin_hall_log_tail(size_t l, double a, double* out) {
  KP_CHECK_NOT_NULL(out);
  return Guard([&] { *out = kpath::IrwinHallLogTail(l, a); });
}

kp_status kp_exp_sum_tails(const double* rates, size_t count, double lambda,
                           double* out_upper, double* out_lower) {
  KP_CHECK_NOT_NULL(rates);
  KP_CHECK_NOT_NULL(out_upper);
  KP_CHECK_NOT_NULL(out_lower);
  return Guard([&] {
    const auto b = kpath::ExpSumTails(std::span<const double>(rates, count), lambda);
    *out_upper = b.upper;
    *out_lower = b.lower;
  });
}

kp_status kp_binomial_lower_tail(size_t n_trials, double p, double epsilon,
                                 double* out) {
  KP_CHECK_NOT_NULL(out);
  return Guard([&] { *out = kpath::BinomialLowerTail(n_trials, p, epsilon); });
}

kp_status kp_min_binomial_lower_bound(size_t n_trials, double p, int* out_large_mean,
                                      double* out_threshold, double* out_bound) {
  KP_CHECK_NOT_NULL(out_large_mean);
  KP_CHECK_NOT_NULL(out_threshold);
  KP_CHECK_NOT_NULL(out_bound);
  return Guard([&] {
    const auto b = kpath::MinBinomialLowerBound(n_trials, p);
    *out_large_mean = b.large_mean ? 1 : 0;
    *out_threshold = b.threshold;
    *out_bound = b.bound;
  });
}

kp_status kp_validate_bounds(const char* name, uint64_t seed, size_t samples,
                             char** out_json, size_t* out_failures) {
  KP_CHECK_NOT_NULL(name);
  KP_CHECK_NOT_NULL(out_json);
  KP_CHECK_NOT_NULL(out_failures);
  return Guard([&] {
    const std::string which = name;
    const bool all = which == "all";
    std::vector<kpath::BoundReport> reports;
    auto add = [&reports](std::vector<kpath::BoundReport> r) {
      reports.insert(reports.end(), r.begin(), r.end());
    };
    bool known = all;
    if (all || which == "irwin_hall") { add(kpath::ValidateIrwinHall(seed, samples)); known = true; }
    if (all || which == "exp_sum") { add(kpath::ValidateExpSumTails(seed, samples)); known = true; }
    if (all || which == "binomial") { add(kpath::ValidateBinomialLowerTail(seed, samples)); known = true; }
    if (all || which == "min_binomial") { add(kpath::ValidateMinBinomial(seed, samples)); known = true; }
    kpath::Require(known, "unknown bound name");
    size_t failures = 0;
    const auto j = ReportsJson(reports, failures);
    *out_json = CopyString(j.dump(1));
    *out_failures = failures;
  });
}

void kp_config_init(kp_experiment_config* config) {
  if (config == nullptr) return;
  *config = kp_experiment_config{};
  config->n = 100;
  config->model = KP_MODEL_UNIFORM;
  config->trials = 1;
  config->seed = 1;
  config->workers = 1;
}

kp_status kp_run_paths_experiment(const kp_experiment_config* config, kp_batch** out) {
  KP_CHECK_NOT_NULL(config);
  KP_CHECK_NOT_NULL(out);
  return Guard([&] { *out = new kp_batch{kpath::RunPathsExperiment(ToConfig(config))}; });
}

kp_status kp_run_flow_experiment(const kp_experiment_config* config, kp_batch** out) {
  KP_CHECK_NOT_NULL(config);
  KP_CHECK_NOT_NULL(out);
  return Guard([&] { *out = new kp_batch{kpath::RunFlowExperiment(ToConfig(config))}; });
}

void kp_batch_free(kp_batch* b) { delete b; }

size_t kp_batch_row_count(const kp_batch* b) {
  return b == nullptr ? 0 : b->batch.rows.size();
}

size_t kp_batch_aggregate_count(const kp_batch* b) {
  return b == nullptr ? 0 : b->batch.aggregates.size();
}

kp_status kp_batch_aggregate(const kp_batch* b, size_t i, size_t* k, size_t* n_exist,
                             double* ratio_mean) {
  KP_CHECK_NOT_NULL(b);
  return Guard([&] {
    kpath::Require(i < b->batch.aggregates.size(), "aggregate index out of range");
    const auto& a = b->batch.aggregates[i];
    if (k) *k = a.k;
    if (n_exist) *n_exist = a.n_exist;
    if (ratio_mean) *ratio_mean = a.ratio_mean;
  });
}

size_t kp_batch_audit_violations(const kp_batch* b) {
  if (b == nullptr) return 0;
  const auto& a = b->batch.audit;
  return a.monotone_violations + a.disjoint_violations + a.length_violations +
         a.prefix_violations + a.lower_bound_violations +
         a.existence_floor_violations + a.dominance_violations + a.k1_mismatches;
}

kp_status kp_batch_write(const kp_batch* b, kp_format format, const char* path) {
  KP_CHECK_NOT_NULL(b);
  KP_CHECK_NOT_NULL(path);
  return Guard([&] { kpath::WriteBatch(b->batch, Format(format), path); });
}

kp_status kp_batch_write_gnuplot(const kp_batch* b, const char* path) {
  KP_CHECK_NOT_NULL(b);
  KP_CHECK_NOT_NULL(path);
  return Guard([&] { kpath::WriteGnuplot(b->batch, path); });
}

kp_status kp_batch_to_json(const kp_batch* b, char** out_json) {
  KP_CHECK_NOT_NULL(b);
  KP_CHECK_NOT_NULL(out_json);
  return Guard([&] { *out_json = CopyString(kpath::BatchJson(b->batch)); });
}

kp_status kp_run_conditional_expectation(const kp_experiment_config* config,
                                         kp_condexp** out) {
  KP_CHECK_NOT_NULL(config);
  KP_CHECK_NOT_NULL(out);
  return Guard([&] {
    auto r = kpath::RunConditionalExpectation(ToConfig(config));
    *out = new kp_condexp{kp_batch{std::move(r.batch)}, std::move(r.estimates)};
  });
}

void kp_condexp_free(kp_condexp* c) { delete c; }

size_t kp_condexp_count(const kp_condexp* c) {
  return c == nullptr ? 0 : c->estimates.size();
}

kp_status kp_condexp_get(const kp_condexp* c, size_t i, size_t* k, size_t* n_exist,
                         double* mean, double* std_error, double* limit,
                         int* flagged) {
  KP_CHECK_NOT_NULL(c);
  return Guard([&] {
    kpath::Require(i < c->estimates.size(), "estimate index out of range");
    const auto& e = c->estimates[i];
    if (k) *k = e.k;
    if (n_exist) *n_exist = e.n_exist;
    if (mean) *mean = e.mean;
    if (std_error) *std_error = e.std_error;
    if (limit) *limit = e.limit;
    if (flagged) *flagged = e.flagged ? 1 : 0;
  });
}

kp_status kp_condexp_write(const kp_condexp* c, kp_format format, const char* path) {
  KP_CHECK_NOT_NULL(c);
  KP_CHECK_NOT_NULL(path);
  return Guard([&] { kpath::WriteConditionalMeans(c->estimates, Format(format), path); });
}

const kp_batch* kp_condexp_batch(const kp_condexp* c) {
  return c == nullptr ? nullptr : &c->batch;
}

}  // extern "C"
