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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. Seeds are fixed constants.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "kpath/harness.hpp"
#include "kpath/kflow.hpp"
#include "kpath/order_stats.hpp"
#include "kpath/paths.hpp"
#include "kpath/random.hpp"
#include "kpath/spt.hpp"
#include "kpath/stats.hpp"
#include "kpath/tail_bounds.hpp"
#include "kpath/walecki.hpp"
#include "kpath/weights.hpp"
#include "oracles.hpp"

namespace {

using kpath::ExperimentConfig;
using kpath::WeightedCompleteGraph;
using kpath::WeightModel;

struct Verdict {
  bool pass = true;
  std::string detail;

  void Require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += "FAILED " + what;
    }
  }
  void Note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string Fmt(const char* fmt, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, x);
  return buf;
}

std::size_t Workers() { return std::max(1u, std::thread::hardware_concurrency()); }

oracle::Table TableOf(const WeightedCompleteGraph& g) {
  const std::size_t n = g.n();
  std::vector<double> w(n * n, 0.0);
  for (kpath::Vertex u = 0; u < n; ++u) {
    for (kpath::Vertex v = 0; v < n; ++v) {
      if (u != v) w[u * n + v] = g.Weight(u, v);
    }
  }
  return oracle::Table(n, std::move(w));
}

std::set<std::pair<kpath::Vertex, kpath::Vertex>> EdgeSet(
    const std::vector<std::vector<kpath::Vertex>>& paths) {
  std::set<std::pair<kpath::Vertex, kpath::Vertex>> out;
  for (const auto& p : paths) {
    for (std::size_t i = 1; i < p.size(); ++i) out.insert(std::minmax(p[i - 1], p[i]));
  }
  return out;
}

std::vector<double> RatiosAt(const kpath::TrialBatch& b, std::size_t k) {
  std::vector<double> out;
  for (const auto& r : b.rows) {
    if (r.k == k && r.exists) out.push_back(r.ratio);
  }
  return out;
}

Verdict OraclePaths() {
  Verdict v;
  std::size_t instances = 0;
  std::size_t mismatches = 0;
  for (std::size_t n : {5u, 6u}) {
    for (auto model : {WeightModel::kUniform01, WeightModel::kExponential1}) {
      for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        auto g = WeightedCompleteGraph::Generate(n, model, seed);
        const auto want = oracle::Greedy(TableOf(g), 0, 1, 3);
        const auto got = kpath::SuccessivePaths(g, 3);
        ++instances;
        bool same = got.existing_count() == want.size();
        for (std::size_t i = 0; same && i < want.size(); ++i) {
          same = got.records[i]->vertices == want[i].first &&
                 got.records[i]->cost == want[i].second;
        }
        mismatches += !same;
      }
    }
  }
  v.Require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  v.Note(std::to_string(instances) + " instances, paths and costs bit-exact");
  return v;
}

Verdict OracleFlow() {
  Verdict v;
  std::size_t instances = 0;
  std::size_t mismatches = 0;
  for (std::size_t n : {4u, 5u, 6u}) {
    for (auto model : {WeightModel::kUniform01, WeightModel::kExponential1}) {
      for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        auto g = WeightedCompleteGraph::Generate(n, model, seed);
        const auto t = TableOf(g);
        for (std::size_t k : {1u, 2u}) {
          const auto want = oracle::MinDisjointFamily(t, 0, 1, k);
          const auto got = kpath::MinCostKFlow(g, k);
          std::vector<std::vector<kpath::Vertex>> paths;
          for (const auto& p : got.paths) paths.push_back(p.vertices);
          ++instances;
          const bool same = got.feasible &&
                            std::abs(got.total_cost - want.first) <= 1e-12 * want.first &&
                            EdgeSet(paths) == EdgeSet(want.second);
          mismatches += !same;
        }
      }
    }
  }
  v.Require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  v.Note(std::to_string(instances) + " instances match pair enumeration");

  // Crafted K_4: s=0, t=1, a=2, b=3.
  const std::vector<double> m = {0, 100, 1, 10, 100, 0, 10, 1, 1, 10, 0, 1, 10, 1, 1, 0};
  auto g = WeightedCompleteGraph::FromMatrix(4, m);
  const double f2 = kpath::MinCostKFlow(g, 2).total_cost;
  const auto greedy = oracle::Greedy(TableOf(g), 0, 1, 2);
  const double s2_oracle = greedy.size() == 2 ? greedy[0].second + greedy[1].second : NAN;
  const double s2 = kpath::SuccessivePaths(g, 2).prefix_sums.back();
  v.Require(f2 == 22.0, "crafted F_2 = " + Fmt("%g", f2));
  v.Require(s2 == s2_oracle, "crafted S_2 disagrees with greedy oracle");
  v.Require(f2 < s2, "crafted F_2 < S_2");
  v.Note("crafted K_4: F_2 = " + Fmt("%g", f2) + " < S_2 = " + Fmt("%g", s2) +
         " (greedy oracle " + Fmt("%g", s2_oracle) + ")");
  return v;
}

void CheckBands(Verdict& v, const kpath::TrialBatch& b) {
  for (const auto& a : b.aggregates) {
    const auto r = RatiosAt(b, a.k);
    const double mean = kpath::stats::Mean(r);
    v.Note("k=" + std::to_string(a.k) + " mean " + Fmt("%.3f", mean));
    if (a.k == 1) v.Require(mean >= 0.75 && mean <= 1.30, "k=1 band [0.75,1.30]");
    if (a.k >= 25) {
      v.Require(mean >= 0.85 && mean <= 1.20, "k=" + std::to_string(a.k) + " band [0.85,1.20]");
    }
    if (a.k == 125) {
      const double sd = kpath::stats::StdDev(r);
      v.Note("sd@125 " + Fmt("%.4f", sd));
      v.Require(sd < 0.10, "sd at k=125 < 0.10");
    }
  }
}

kpath::TrialBatch Band(WeightModel model, std::uint64_t seed, Verdict& v) {
  ExperimentConfig c;
  c.n = 500;
  c.k_grid = {1, 5, 25, 125, 249};
  c.model = model;
  c.trials = 100;
  c.seed = seed;
  c.workers = Workers();
  auto b = kpath::RunPathsExperiment(c);
  v.Require(b.rows.size() == 500, "row count");
  for (const auto& a : b.aggregates) v.Require(a.n_exist == 100, "all paths exist");
  CheckBands(v, b);
  return b;
}

Verdict FlowBand() {
  Verdict v;
  ExperimentConfig c;
  c.n = 500;
  c.k_grid = {1, 10, 50};
  c.trials = 50;
  c.seed = 5005;
  c.workers = Workers();
  const auto b = kpath::RunFlowExperiment(c);
  std::size_t dominance = 0;
  for (const auto& r : b.rows) {
    v.Require(r.exists, "flow feasible");
    dominance += !(r.value <= r.s_k);
  }
  for (std::size_t k : c.k_grid) {
    const double mean = kpath::stats::Mean(RatiosAt(b, k));
    v.Note("k=" + std::to_string(k) + " mean F/limit " + Fmt("%.3f", mean));
    v.Require(mean >= 0.80 && mean <= 1.20, "k=" + std::to_string(k) + " band [0.80,1.20]");
  }
  v.Require(dominance == 0, std::to_string(dominance) + " rows with F_k > S_k");
  v.Require(b.audit.k1_mismatches == 0, "F_1 = X_1");
  v.Note("F_k <= S_k on all " + std::to_string(b.rows.size()) + " rows");
  return v;
}

Verdict Existence() {
  Verdict v;
  for (std::size_t n : {6u, 10u, 20u}) {
    ExperimentConfig c;
    c.n = n;
    c.k_max = n / 2;
    c.all_k = true;
    c.trials = 200;
    c.seed = 6000 + n;
    c.workers = Workers();
    const auto b = kpath::RunPathsExperiment(c);
    for (const auto& a : b.aggregates) {
      v.Require(a.n_exist == 200, "n=" + std::to_string(n) + " k=" + std::to_string(a.k) +
                                      " existence " + std::to_string(a.n_exist) + "/200");
    }
  }
  v.Note("existence frequency 1 for k <= n/2, n in {6,10,20}");
  std::size_t families = 0;
  for (std::size_t n = 4; n <= 40; n += 2) {
    const auto fam = kpath::BuildSaturatingFamily(n, 0, 1);
    const auto issues = kpath::AuditSaturatingFamily(fam);
    v.Require(issues.empty(), "family n=" + std::to_string(n));
    auto g = WeightedCompleteGraph::Generate(n, WeightModel::kUniform01, n);
    std::vector<kpath::Edge> edges;
    for (const auto& p : fam.st_paths) {
      for (std::size_t i = 1; i < p.size(); ++i) edges.push_back({p[i - 1], p[i]});
    }
    g.DeleteEdges(edges);
    v.Require(!kpath::ShortestPath(g, 0, 1).has_value(), "residual path at n=" + std::to_string(n));
    ++families;
  }
  v.Note(std::to_string(families) + " saturating families disconnect s from t");
  return v;
}

Verdict ConditionalBand() {
  Verdict v;
  for (auto model : {WeightModel::kUniform01, WeightModel::kExponential1}) {
    ExperimentConfig c;
    c.n = 500;
    c.k_grid = {1, 5, 25, 125, 249, 499};
    c.model = model;
    c.trials = 100;
    c.seed = model == WeightModel::kUniform01 ? 7001 : 7002;
    c.workers = Workers();
    const auto r = kpath::RunConditionalExpectation(c);
    const std::string tag = std::string(kpath::ModelName(model)) + " ";
    for (const auto& e : r.estimates) {
      if (e.k == 499) {
        const double freq = double(e.n_exist) / double(e.trials);
        v.Note(tag + "exist@499 " + Fmt("%.2f", freq));
        v.Require(freq > 0.9, tag + "existence at k=n-1 > 0.9");
      }
      if (e.flagged) {
        v.Require(false, tag + "k=" + std::to_string(e.k) + " has no estimate");
        continue;
      }
      v.Note(tag + "k=" + std::to_string(e.k) + " " + Fmt("%.3f", e.ratio));
      if (e.k == 1) v.Require(e.ratio >= 0.75 && e.ratio <= 1.30, tag + "k=1 band");
      if (e.k >= 25) {
        v.Require(e.ratio >= 0.85 && e.ratio <= 1.20, tag + "k=" + std::to_string(e.k) + " band");
      }
    }
  }
  return v;
}

Verdict SptLaw() {
  Verdict v;
  const std::size_t n = 200;
  const std::size_t d = 50;
  const std::size_t samples = 10000;
  std::vector<double> law;
  std::vector<double> growth;
  for (std::size_t i = 0; i < samples; ++i) {
    law.push_back(kpath::RadiusByLaw(n, d, kpath::TrialSeed(8001, i)).radius);
    growth.push_back(
        kpath::RadiusByGrowth(WeightModel::kExponential1, n, d, kpath::TrialSeed(8002, i)).radius);
  }
  const double ks = kpath::stats::KsTwoSample(law, growth);
  const double mean = kpath::stats::Mean(law);
  const double exact = kpath::MeanRadiusByLaw(n, d);
  const double se = kpath::stats::StdError(law);
  v.Note("KS " + Fmt("%.4f", ks) + ", |mean-exact|/SE " + Fmt("%.2f", std::abs(mean - exact) / se));
  v.Require(ks < 0.03, "KS < 0.03");
  v.Require(std::abs(mean - exact) <= 3 * se, "law mean within 3 SE");
  return v;
}

Verdict OrderStats() {
  Verdict v;
  const std::size_t n = 1000;
  const std::size_t k = 100;
  const std::size_t draws = 10000;
  const std::size_t oracle_draws = 100000;
  for (auto model : {WeightModel::kUniform01, WeightModel::kExponential1}) {
    const bool expo = model == WeightModel::kExponential1;
    const kpath::OrderStatContext ctx(n, model);
    kpath::Rng rng(expo ? 9002 : 9001);
    std::vector<double> vec(n - 1);
    std::vector<double> fast;
    for (std::size_t i = 0; i < draws; ++i) {
      kpath::SampleOrderStats(ctx, rng, vec);
      fast.push_back(vec[k - 1]);
    }
    std::mt19937_64 orng(expo ? 9012 : 9011);
    std::vector<double> scratch;
    std::vector<double> slow;
    for (std::size_t i = 0; i < oracle_draws; ++i) {
      slow.push_back(oracle::KthOfDraws(n, k, expo, orng, scratch));
    }
    const double target = expo ? static_cast<double>(oracle::HarmonicTail(n, k)) : double(k) / n;
    const double mean = kpath::stats::Mean(fast);
    const double rel = std::abs(mean - target) / target;
    const double ks = kpath::stats::KsTwoSample(fast, slow);
    const std::string tag = std::string(kpath::ModelName(model)) + " ";
    v.Note(tag + "rel err " + Fmt("%.4f", rel) + ", KS " + Fmt("%.4f", ks));
    v.Require(rel <= 0.03, tag + "mean within 3%");
    v.Require(ks < 0.02, tag + "KS < 0.02");
  }
  return v;
}

Verdict TailBounds() {
  Verdict v;
  const std::pair<const char*, std::function<std::vector<kpath::BoundReport>()>> suites[] = {
      {"irwin_hall", [] { return kpath::ValidateIrwinHall(10001); }},
      {"exp_sum", [] { return kpath::ValidateExpSumTails(10002); }},
      {"binomial", [] { return kpath::ValidateBinomialLowerTail(10003); }},
      {"min_binomial", [] { return kpath::ValidateMinBinomial(10004); }},
  };
  for (const auto& [name, run] : suites) {
    const auto reports = run();
    std::size_t failed = 0;
    for (const auto& r : reports) failed += !r.passed;
    v.Require(reports.size() == 20, std::string(name) + " grid size");
    v.Require(failed == 0, std::string(name) + " " + std::to_string(failed) + " points");
    v.Note(std::string(name) + " " + std::to_string(reports.size() - failed) + "/" +
           std::to_string(reports.size()));
  }
  return v;
}

Verdict Structural(const kpath::TrialBatch& b) {
  Verdict v;
  const auto& a = b.audit;
  v.Require(a.monotone_violations == 0, "monotone");
  v.Require(a.disjoint_violations == 0, "edge-disjoint");
  v.Require(a.length_violations == 0, "length <= 19 n cost");
  v.Require(a.prefix_violations == 0, "prefix sums");
  v.Require(a.lower_bound_violations == 0, "incident-edge lower bound");
  v.Require(a.lower_bound_checks >= b.rows.size(), "lower bound checked on every row");
  v.Note(std::to_string(a.paths_checked) + " paths, " + std::to_string(a.lower_bound_checks) +
         " rows audited, 0 violations");
  return v;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&failures](int id, const char* name, double budget_s,
                            const std::function<Verdict()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v.Require(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    v.Require(secs < budget_s, "runtime budget " + Fmt("%.0fs", budget_s));
    failures += !v.pass;
    std::printf("[%s] %2d %s (%.1fs): %s\n", v.pass ? "PASS" : "FAIL", id, name, secs,
                v.detail.c_str());
    std::fflush(stdout);
  };

  kpath::TrialBatch uniform_run;
  report(1, "successive paths vs greedy oracle", 10, OraclePaths);
  report(2, "k-flow vs pair enumeration", 30, OracleFlow);
  report(3, "uniform ratio bands, n=500", 300, [&] {
    Verdict v;
    uniform_run = Band(WeightModel::kUniform01, 3003, v);
    return v;
  });
  report(4, "exponential ratio bands, n=500", 300, [] {
    Verdict v;
    Band(WeightModel::kExponential1, 4004, v);
    return v;
  });
  report(5, "k-flow band and dominance, n=500", 600, FlowBand);
  report(6, "existence floor and saturating families", 60, Existence);
  report(7, "conditional means given existence, n=500", 300, ConditionalBand);
  report(8, "SPT radius: law vs growth", 120, SptLaw);
  report(9, "order statistics: means and sort oracle", 60, OrderStats);
  report(10, "tail-bound grid validation", 180, TailBounds);
  report(11, "structural invariants on the uniform run", 1, [&] { return Structural(uniform_run); });
  std::printf("%d of 11 criteria passed\n", 11 - failures);
  return failures == 0 ? 0 : 1;
}
