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

// Command-line driver. Talks to the library exclusively through kpath.h.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kpath/kpath.h"

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

// Thrown when a library call fails; carries the process exit code.
struct CallError {
  int exit_code;
};

void Check(kp_status s, const char* what) {
  if (s == KP_OK) return;
  std::fprintf(stderr, "kpath: %s: %s (%s)\n", what, kp_status_string(s),
               kp_last_error());
  throw CallError{s == KP_ERR_INVALID_PARAMETER ? kExitUsage : kExitRuntime};
}

struct CommonOptions {
  size_t n = 100;
  size_t k_max = 0;
  std::string k_grid;
  std::string model = "uniform";
  size_t trials = 1;
  uint64_t seed = 1;
  size_t workers = 1;
  std::string out;
  std::string format = "csv";
  std::string gnuplot;
};

void AddCommon(CLI::App* app, CommonOptions& o) {
  app->add_option("--n", o.n, "vertex count")->check(CLI::Range(size_t{2}, size_t{1} << 31));
  app->add_option("--k-max", o.k_max, "largest k (default: from the k-grid)");
  app->add_option("--k-grid", o.k_grid,
                  "comma-separated k values, or 'all' (default: geometric grid)");
  app->add_option("--model", o.model)->check(CLI::IsMember({"uniform", "exponential"}));
  app->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
  app->add_option("--seed", o.seed, "master seed");
  app->add_option("--workers", o.workers)->check(CLI::PositiveNumber);
  app->add_option("--out", o.out, "output path");
  app->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));
  app->add_option("--gnuplot", o.gnuplot, "also write k vs mean-ratio data here");
}

kp_model Model(const std::string& name) {
  return name == "exponential" ? KP_MODEL_EXPONENTIAL : KP_MODEL_UNIFORM;
}

kp_format Format(const std::string& name) {
  return name == "json" ? KP_FORMAT_JSON : KP_FORMAT_CSV;
}

std::vector<size_t> ParseSizeList(const std::string& text) {
  std::vector<size_t> out;
  std::string item;
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      if (item.empty()) throw CLI::ValidationError("--k-grid", "empty entry");
      try {
        size_t pos = 0;
        out.push_back(std::stoull(item, &pos));
        if (pos != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw CLI::ValidationError("--k-grid", "bad entry '" + item + "'");
      }
      item.clear();
    } else {
      item.push_back(text[i]);
    }
  }
  return out;
}

std::vector<double> ParseDoubleList(const std::string& text) {
  std::vector<double> out;
  std::string item;
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      try {
        out.push_back(std::stod(item));
      } catch (const std::exception&) {
        throw CLI::ValidationError("--rates", "bad entry '" + item + "'");
      }
      item.clear();
    } else {
      item.push_back(text[i]);
    }
  }
  return out;
}

// Holds the k-grid storage referenced by the config.
struct ConfigHolder {
  kp_experiment_config config;
  std::vector<size_t> grid;
};

ConfigHolder MakeConfig(const CommonOptions& o) {
  ConfigHolder h;
  kp_config_init(&h.config);
  h.config.n = o.n;
  h.config.k_max = o.k_max;
  h.config.model = Model(o.model);
  h.config.trials = o.trials;
  h.config.seed = o.seed;
  h.config.workers = o.workers;
  if (o.k_grid == "all") {
    h.config.all_k = 1;
  } else if (!o.k_grid.empty()) {
    h.grid = ParseSizeList(o.k_grid);
    h.config.k_grid = h.grid.data();
    h.config.k_grid_len = h.grid.size();
  }
  return h;
}

void PrintBatchSummary(const kp_batch* b, const char* ratio_label) {
  std::printf("%8s %8s %14s\n", "k", "n_exist", ratio_label);
  for (size_t i = 0; i < kp_batch_aggregate_count(b); ++i) {
    size_t k = 0, n_exist = 0;
    double mean = 0.0;
    Check(kp_batch_aggregate(b, i, &k, &n_exist, &mean), "aggregate");
    std::printf("%8zu %8zu %14.6f\n", k, n_exist, mean);
  }
  std::printf("structural audit violations: %zu\n", kp_batch_audit_violations(b));
}

void EmitBatch(const kp_batch* b, const CommonOptions& o) {
  if (!o.out.empty()) Check(kp_batch_write(b, Format(o.format), o.out.c_str()), "write");
  if (!o.gnuplot.empty()) Check(kp_batch_write_gnuplot(b, o.gnuplot.c_str()), "gnuplot");
}

int RunPaths(const CommonOptions& o) {
  auto h = MakeConfig(o);
  kp_batch* b = nullptr;
  Check(kp_run_paths_experiment(&h.config, &b), "paths experiment");
  try {
    EmitBatch(b, o);
    PrintBatchSummary(b, "mean X_k/lim");
  } catch (...) {
    kp_batch_free(b);
    throw;
  }
  const int rc = kp_batch_audit_violations(b) == 0 ? 0 : kExitRuntime;
  kp_batch_free(b);
  return rc;
}

int RunFlow(const CommonOptions& o) {
  auto h = MakeConfig(o);
  kp_batch* b = nullptr;
  Check(kp_run_flow_experiment(&h.config, &b), "flow experiment");
  try {
    EmitBatch(b, o);
    PrintBatchSummary(b, "mean F_k/lim");
  } catch (...) {
    kp_batch_free(b);
    throw;
  }
  const int rc = kp_batch_audit_violations(b) == 0 ? 0 : kExitRuntime;
  kp_batch_free(b);
  return rc;
}

int RunCondexp(const CommonOptions& o) {
  auto h = MakeConfig(o);
  kp_condexp* c = nullptr;
  Check(kp_run_conditional_expectation(&h.config, &c), "conditional expectation");
  try {
    if (!o.out.empty()) Check(kp_condexp_write(c, Format(o.format), o.out.c_str()), "write");
    if (!o.gnuplot.empty()) {
      Check(kp_batch_write_gnuplot(kp_condexp_batch(c), o.gnuplot.c_str()), "gnuplot");
    }
    std::printf("%8s %8s %16s %12s %12s\n", "k", "n_exist", "E[X_k|exists]",
                "std_err", "ratio");
    for (size_t i = 0; i < kp_condexp_count(c); ++i) {
      size_t k = 0, n_exist = 0;
      double mean = 0, se = 0, limit = 0;
      int flagged = 0;
      Check(kp_condexp_get(c, i, &k, &n_exist, &mean, &se, &limit, &flagged), "estimate");
      if (flagged) {
        std::printf("%8zu %8zu %16s %12s %12s\n", k, n_exist, "(none)", "-", "-");
      } else {
        std::printf("%8zu %8zu %16.8g %12.4g %12.6f\n", k, n_exist, mean, se, mean / limit);
      }
    }
  } catch (...) {
    kp_condexp_free(c);
    throw;
  }
  kp_condexp_free(c);
  return 0;
}

int RunOrderStats(const CommonOptions& o, double epsilon, size_t lower_rank) {
  const kp_model model = Model(o.model);
  const size_t width = o.n - 1;
  std::vector<double> samples(o.trials * width);
  for (size_t i = 0; i < o.trials; ++i) {
    Check(kp_sample_order_stats(o.n, model, kp_trial_seed(o.seed, i),
                                samples.data() + i * width, width),
          "sample order statistics");
  }
  if (lower_rank == 0) lower_rank = kp_default_lower_rank(o.n);
  std::vector<double> freq(o.n > lower_rank ? o.n - lower_rank : 0);
  double simultaneous = 0.0;
  Check(kp_concentration_report(o.n, model, samples.data(), o.trials, epsilon,
                                lower_rank, freq.data(), freq.size(), &simultaneous),
        "concentration report");

  std::string csv = "k,exact_mean,sample_mean,ratio,violation_freq\n";
  for (size_t k = 1; k <= width; ++k) {
    double exact = 0.0;
    Check(kp_mean_order_stat(o.n, model, k, &exact), "mean order statistic");
    double sum = 0.0;
    for (size_t i = 0; i < o.trials; ++i) sum += samples[i * width + k - 1];
    const double mean = sum / static_cast<double>(o.trials);
    char line[160];
    if (k >= lower_rank) {
      std::snprintf(line, sizeof line, "%zu,%.17g,%.17g,%.17g,%.17g\n", k, exact,
                    mean, mean / exact, freq[k - lower_rank]);
    } else {
      std::snprintf(line, sizeof line, "%zu,%.17g,%.17g,%.17g,\n", k, exact, mean,
                    mean / exact);
    }
    csv += line;
  }
  if (!o.out.empty()) {
    std::ofstream out(o.out);
    out << csv;
    if (!out) Check(KP_ERR_IO, "write");
  }
  std::printf("n=%zu model=%s vectors=%zu epsilon=%g lower_rank=%zu\n", o.n,
              o.model.c_str(), o.trials, epsilon, lower_rank);
  std::printf("simultaneous band violation frequency: %.6f\n", simultaneous);
  return 0;
}

int RunSpt(const CommonOptions& o, size_t d, const std::string& method) {
  const kp_model model = Model(o.model);
  std::vector<double> law, growth;
  for (size_t i = 0; i < o.trials; ++i) {
    const uint64_t seed = kp_trial_seed(o.seed, i);
    double r = 0.0;
    if (method != "growth") {
      Check(kp_spt_radius_law(o.n, d, seed, &r), "radius by law");
      law.push_back(r);
    }
    if (method != "law") {
      Check(kp_spt_radius_growth(model, o.n, d, seed ^ 0xa5a5a5a5a5a5a5a5ULL, &r),
            "radius by growth");
      growth.push_back(r);
    }
  }
  if (!o.out.empty()) {
    std::ofstream out(o.out);
    out << "sample,method,radius\n";
    char buf[40];
    for (size_t i = 0; i < law.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", law[i]);
      out << i << ",law," << buf << '\n';
    }
    for (size_t i = 0; i < growth.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", growth[i]);
      out << i << ",growth," << buf << '\n';
    }
    if (!out) Check(KP_ERR_IO, "write");
  }
  double analytic = 0.0;
  Check(kp_spt_mean_radius(o.n, d, &analytic), "analytic mean");
  auto mean = [](const std::vector<double>& xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
  };
  std::printf("n=%zu d=%zu samples=%zu analytic mean=%.8g\n", o.n, d, o.trials, analytic);
  if (!law.empty()) std::printf("law    mean=%.8g\n", mean(law));
  if (!growth.empty()) std::printf("growth mean=%.8g\n", mean(growth));
  if (!law.empty() && !growth.empty()) {
    double ks = 0.0;
    Check(kp_ks_two_sample(law.data(), law.size(), growth.data(), growth.size(), &ks), "ks");
    std::printf("two-sample KS statistic=%.6f\n", ks);
  }
  return 0;
}

int RunWalecki(const CommonOptions& o, uint32_t s, uint32_t t) {
  char* json = nullptr;
  Check(kp_walecki_family_json(o.n, s, t, &json), "walecki");
  size_t issues = 0;
  const kp_status st = kp_walecki_family_audit(o.n, s, t, &issues);
  if (o.out.empty()) {
    std::printf("%s\n", json);
  } else {
    std::ofstream out(o.out);
    out << json << '\n';
    if (!out) {
      kp_string_free(json);
      Check(KP_ERR_IO, "write");
    }
  }
  kp_string_free(json);
  Check(st, "walecki audit");
  std::fprintf(stderr, "invariant violations: %zu\n", issues);
  return issues == 0 ? 0 : kExitRuntime;
}

struct BoundOptions {
  std::string name;
  size_t l = 1;
  double a = 0.5;
  std::string rates;
  double lambda = 1.0;
  size_t n_trials = 100;
  double p = 0.5;
  double epsilon = 0.1;
  bool validate = false;
  size_t samples = 100000;
};

int RunBounds(const BoundOptions& b, uint64_t seed) {
  if (b.name == "irwin_hall") {
    double v = 0, lv = 0;
    Check(kp_irwin_hall_tail(b.l, b.a, &v), "irwin_hall");
    Check(kp_irwin_hall_log_tail(b.l, b.a, &lv), "irwin_hall");
    std::printf("irwin_hall l=%zu a=%g bound=%.17g log_bound=%.17g\n", b.l, b.a, v, lv);
  } else if (b.name == "exp_sum") {
    const auto rates = ParseDoubleList(b.rates.empty() ? "1" : b.rates);
    double up = 0, lo = 0;
    Check(kp_exp_sum_tails(rates.data(), rates.size(), b.lambda, &up, &lo), "exp_sum");
    std::printf("exp_sum lambda=%g upper=%.17g lower=%.17g\n", b.lambda, up, lo);
  } else if (b.name == "binomial") {
    double v = 0;
    Check(kp_binomial_lower_tail(b.n_trials, b.p, b.epsilon, &v), "binomial");
    std::printf("binomial_lower_tail n=%zu p=%g eps=%g bound=%.17g\n", b.n_trials, b.p,
                b.epsilon, v);
  } else if (b.name == "min_binomial") {
    int large = 0;
    double thr = 0, v = 0;
    Check(kp_min_binomial_lower_bound(b.n_trials, b.p, &large, &thr, &v), "min_binomial");
    std::printf("min_binomial n=%zu p=%g case=%s threshold=%g lower_bound=%.17g\n",
                b.n_trials, b.p, large ? "lambda>=2" : "lambda<2", thr, v);
  }
  if (!b.validate) return 0;
  char* json = nullptr;
  size_t failures = 0;
  Check(kp_validate_bounds(b.name.c_str(), seed, b.samples, &json, &failures), "validate");
  std::printf("%s\n", json);
  kp_string_free(json);
  std::printf("grid points failed: %zu\n", failures);
  return failures == 0 ? 0 : kExitRuntime;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Successive edge-disjoint shortest paths on random complete graphs"};
  app.require_subcommand(1);

  CommonOptions paths_o, flow_o, cond_o, os_o, spt_o, wal_o, bounds_o;
  auto* paths = app.add_subcommand("paths", "successive shortest paths experiment");
  AddCommon(paths, paths_o);
  auto* flow = app.add_subcommand("flow", "min-cost k-flow experiment");
  AddCommon(flow, flow_o);
  auto* condexp = app.add_subcommand("condexp", "E[X_k | P_k exists] estimates");
  AddCommon(condexp, cond_o);

  auto* orderstats = app.add_subcommand("orderstats", "order statistic sampler and concentration");
  AddCommon(orderstats, os_o);
  double os_eps = 0.5;
  size_t os_a = 0;
  orderstats->add_option("--epsilon", os_eps)->check(CLI::NonNegativeNumber);
  orderstats->add_option("--a", os_a, "lower rank cutoff (default ceil(sqrt(ln n)))");

  auto* spt = app.add_subcommand("spt", "shortest-path-tree radius samples");
  AddCommon(spt, spt_o);
  size_t spt_d = 2;
  std::string spt_method = "both";
  spt->add_option("--d", spt_d, "tree order")->required();
  spt->add_option("--method", spt_method)->check(CLI::IsMember({"law", "growth", "both"}));

  auto* walecki = app.add_subcommand("walecki", "saturating family of n/2 s-t paths as JSON");
  AddCommon(walecki, wal_o);
  uint32_t wal_s = 0, wal_t = 1;
  walecki->add_option("--s", wal_s);
  walecki->add_option("--t", wal_t);

  auto* bounds = app.add_subcommand("bounds", "evaluate or validate a tail bound");
  AddCommon(bounds, bounds_o);
  BoundOptions bo;
  bounds->add_option("--name", bo.name)
      ->required()
      ->check(CLI::IsMember({"irwin_hall", "exp_sum", "binomial", "min_binomial", "all"}));
  bounds->add_option("--l", bo.l);
  bounds->add_option("--a", bo.a);
  bounds->add_option("--rates", bo.rates, "comma-separated rates");
  bounds->add_option("--lambda", bo.lambda);
  bounds->add_option("--n-trials", bo.n_trials);
  bounds->add_option("--p", bo.p);
  bounds->add_option("--epsilon", bo.epsilon);
  bounds->add_flag("--validate", bo.validate, "run the Monte Carlo / exact grid check");
  bounds->add_option("--samples", bo.samples, "Monte Carlo samples per grid point");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (paths->parsed()) return RunPaths(paths_o);
    if (flow->parsed()) return RunFlow(flow_o);
    if (condexp->parsed()) return RunCondexp(cond_o);
    if (orderstats->parsed()) return RunOrderStats(os_o, os_eps, os_a);
    if (spt->parsed()) return RunSpt(spt_o, spt_d, spt_method);
    if (walecki->parsed()) return RunWalecki(wal_o, wal_s, wal_t);
    if (bounds->parsed()) return RunBounds(bo, bounds_o.seed);
  } catch (const CallError& e) {
    return e.exit_code;
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "kpath: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "kpath: %s\n", e.what());
    return kExitRuntime;
  }
  return kExitUsage;
}
