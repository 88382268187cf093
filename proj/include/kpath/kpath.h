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

/* C interface to the kpath library.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a kp_status; on
 * failure kp_last_error() holds a message for the calling thread. Output
 * parameters are written only on KP_OK.
 */
#ifndef KPATH_KPATH_H_
#define KPATH_KPATH_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define KP_API __declspec(dllexport)
#else
#define KP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kp_status {
  KP_OK = 0,
  KP_ERR_INVALID_PARAMETER = 1,
  KP_ERR_INVALID_EDGE = 2,
  KP_ERR_DOMAIN = 3,
  KP_ERR_IO = 4,
  KP_ERR_INFEASIBLE = 5,
  KP_ERR_INTERNAL = 6,
  KP_ERR_NULL_ARGUMENT = 7,
  KP_ERR_OUT_OF_MEMORY = 8
} kp_status;

typedef enum kp_model { KP_MODEL_UNIFORM = 0, KP_MODEL_EXPONENTIAL = 1 } kp_model;
typedef enum kp_storage { KP_STORAGE_DENSE = 0, KP_STORAGE_IMPLICIT = 1 } kp_storage;
typedef enum kp_format { KP_FORMAT_CSV = 0, KP_FORMAT_JSON = 1 } kp_format;

typedef struct kp_graph kp_graph;
typedef struct kp_paths kp_paths;
typedef struct kp_flow kp_flow;
typedef struct kp_batch kp_batch;
typedef struct kp_condexp kp_condexp;

KP_API const char* kp_last_error(void);
KP_API const char* kp_status_string(kp_status status);
KP_API const char* kp_version(void);

/* Strings returned through char** are released with kp_string_free. */
KP_API void kp_string_free(char* s);

/* ---- weights ---------------------------------------------------------- */

KP_API kp_status kp_graph_generate(size_t n, kp_model model, uint64_t seed,
                                   kp_storage storage, kp_graph** out);
/* `matrix` is row-major n*n, symmetric; the diagonal is ignored. */
KP_API kp_status kp_graph_from_matrix(size_t n, const double* matrix,
                                      kp_graph** out);
KP_API void kp_graph_free(kp_graph* g);
KP_API size_t kp_graph_n(const kp_graph* g);
KP_API kp_status kp_graph_set_terminals(kp_graph* g, uint32_t s, uint32_t t);
KP_API kp_status kp_graph_weight(const kp_graph* g, uint32_t u, uint32_t v,
                                 double* out);
/* `pairs` holds 2*count vertex ids. */
KP_API kp_status kp_graph_delete_edges(kp_graph* g, const uint32_t* pairs,
                                       size_t count);
KP_API kp_status kp_graph_is_deleted(const kp_graph* g, uint32_t u, uint32_t v,
                                     int* out);
KP_API size_t kp_graph_deleted_count(const kp_graph* g);

KP_API kp_status kp_couple_to_exponential(double w, double* out);
KP_API uint64_t kp_trial_seed(uint64_t master_seed, uint64_t trial);

/* ---- paths ------------------------------------------------------------ */

/* *out_len receives the vertex count (0 when no path exists). At most `cap`
 * vertices are copied into `vertices`, which may be NULL when cap is 0. */
KP_API kp_status kp_shortest_path(const kp_graph* g, uint32_t from, uint32_t to,
                                  uint32_t* vertices, size_t cap,
                                  size_t* out_len, double* out_cost);

/* Mutates g: the edges of every extracted path are deleted. */
KP_API kp_status kp_successive_paths(kp_graph* g, size_t k_max, kp_paths** out);
KP_API void kp_paths_free(kp_paths* p);
KP_API size_t kp_paths_k_max(const kp_paths* p);
KP_API size_t kp_paths_existing(const kp_paths* p);
/* k is 1-based. For an absent P_k, *exists is 0 and the rest is untouched. */
KP_API kp_status kp_paths_get(const kp_paths* p, size_t k, int* exists,
                              double* cost, double* prefix_sum, size_t* length);
KP_API kp_status kp_paths_vertices(const kp_paths* p, size_t k,
                                   uint32_t* vertices, size_t cap,
                                   size_t* out_len);
KP_API kp_status kp_limit_value(kp_model model, size_t n, size_t k, double* out);

/* ---- kflow ------------------------------------------------------------ */

KP_API kp_status kp_min_cost_flow(const kp_graph* g, size_t k, kp_flow** out);
KP_API void kp_flow_free(kp_flow* f);
KP_API int kp_flow_feasible(const kp_flow* f);
KP_API double kp_flow_total_cost(const kp_flow* f);
KP_API size_t kp_flow_path_count(const kp_flow* f);
KP_API kp_status kp_flow_path(const kp_flow* f, size_t i, uint32_t* vertices,
                              size_t cap, size_t* out_len, double* out_cost);
KP_API kp_status kp_flow_limit_value(kp_model model, size_t n, size_t k,
                                     double* out);

/* ---- order statistics ------------------------------------------------- */

KP_API kp_status kp_mean_order_stat(size_t n, kp_model model, size_t k,
                                    double* out);
/* Writes n-1 values. */
KP_API kp_status kp_sample_order_stats(size_t n, kp_model model, uint64_t seed,
                                       double* out, size_t cap);
/* `samples` is row-major, count vectors of n-1 values each. `out_freq`
 * receives n-lower_rank per-rank violation frequencies. */
KP_API kp_status kp_concentration_report(size_t n, kp_model model,
                                         const double* samples, size_t count,
                                         double epsilon, size_t lower_rank,
                                         double* out_freq, size_t cap,
                                         double* out_simultaneous);
KP_API size_t kp_default_lower_rank(size_t n);

/* ---- shortest-path trees ---------------------------------------------- */

KP_API kp_status kp_spt_radius_law(size_t n, size_t d, uint64_t seed,
                                   double* out);
KP_API kp_status kp_spt_radius_growth(kp_model model, size_t n, size_t d,
                                      uint64_t seed, double* out);
KP_API kp_status kp_spt_mean_radius(size_t n, size_t d, double* out);
KP_API kp_status kp_ks_two_sample(const double* a, size_t na, const double* b,
                                  size_t nb, double* out);

/* ---- walecki ---------------------------------------------------------- */

KP_API kp_status kp_walecki_family_json(size_t n, uint32_t s, uint32_t t,
                                        char** out_json);
/* *out_issues receives the number of violated invariants (0 when valid). */
KP_API kp_status kp_walecki_family_audit(size_t n, uint32_t s, uint32_t t,
                                         size_t* out_issues);

/* ---- tail bounds ------------------------------------------------------ */

KP_API kp_status kp_irwin_hall_tail(size_t l, double a, double* out);
KP_API kp_status kp_irwin_hall_log_tail(size_t l, double a, double* out);
KP_API kp_status kp_exp_sum_tails(const double* rates, size_t count,
                                  double lambda, double* out_upper,
                                  double* out_lower);
KP_API kp_status kp_binomial_lower_tail(size_t n_trials, double p,
                                        double epsilon, double* out);
KP_API kp_status kp_min_binomial_lower_bound(size_t n_trials, double p,
                                             int* out_large_mean,
                                             double* out_threshold,
                                             double* out_bound);
/* name: irwin_hall, exp_sum, binomial, min_binomial or all. The report is a
 * JSON array of grid points; *out_failures counts points that failed. */
KP_API kp_status kp_validate_bounds(const char* name, uint64_t seed,
                                    size_t samples, char** out_json,
                                    size_t* out_failures);

/* ---- experiments ------------------------------------------------------ */

typedef struct kp_experiment_config {
  size_t n;
  size_t k_max;          /* 0: derived from the k-grid */
  const size_t* k_grid;  /* NULL: default grid */
  size_t k_grid_len;
  int all_k;             /* nonzero: every k in 1..k_max */
  kp_model model;
  size_t trials;
  uint64_t seed;
  size_t workers;
} kp_experiment_config;

KP_API void kp_config_init(kp_experiment_config* config);

KP_API kp_status kp_run_paths_experiment(const kp_experiment_config* config,
                                         kp_batch** out);
KP_API kp_status kp_run_flow_experiment(const kp_experiment_config* config,
                                        kp_batch** out);
KP_API void kp_batch_free(kp_batch* b);
KP_API size_t kp_batch_row_count(const kp_batch* b);
KP_API size_t kp_batch_aggregate_count(const kp_batch* b);
/* Aggregate i: k, number of trials where the path/flow exists, mean ratio. */
KP_API kp_status kp_batch_aggregate(const kp_batch* b, size_t i, size_t* k,
                                    size_t* n_exist, double* ratio_mean);
/* Sum of every structural-audit violation counter. */
KP_API size_t kp_batch_audit_violations(const kp_batch* b);
KP_API kp_status kp_batch_write(const kp_batch* b, kp_format format,
                                const char* path);
KP_API kp_status kp_batch_write_gnuplot(const kp_batch* b, const char* path);
KP_API kp_status kp_batch_to_json(const kp_batch* b, char** out_json);

KP_API kp_status kp_run_conditional_expectation(const kp_experiment_config* config,
                                                kp_condexp** out);
KP_API void kp_condexp_free(kp_condexp* c);
KP_API size_t kp_condexp_count(const kp_condexp* c);
KP_API kp_status kp_condexp_get(const kp_condexp* c, size_t i, size_t* k,
                                size_t* n_exist, double* mean,
                                double* std_error, double* limit, int* flagged);
KP_API kp_status kp_condexp_write(const kp_condexp* c, kp_format format,
                                  const char* path);
/* The underlying paths batch; owned by the condexp handle. */
KP_API const kp_batch* kp_condexp_batch(const kp_condexp* c);

#ifdef __cplusplus
}
#endif

#endif /* KPATH_KPATH_H_ */
