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

#include "kpath/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "kpath/error.hpp"

namespace kpath {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

std::string_view ModelName(WeightModel model) {
  return model == WeightModel::kUniform01 ? "uniform" : "exponential";
}

WeightModel ParseModel(std::string_view name) {
  if (name == "uniform") return WeightModel::kUniform01;
  if (name == "exponential") return WeightModel::kExponential1;
  Fail(ErrorCode::kInvalidParameter,
       "unknown weight model '" + std::string(name) + "'");
}

std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t TrialSeed(std::uint64_t master_seed, std::uint64_t trial) {
  return master_seed ^ Mix64(trial);
}

double UnitFromBits(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

double CoupleToExponential(double w) {
  if (!(w >= 0.0 && w < 1.0)) {
    Fail(ErrorCode::kDomain, "coupling requires 0 <= w < 1");
  }
  return -std::log1p(-w);
}

double PrfWeight(std::uint64_t seed, std::uint64_t pair, WeightModel model) {
  const std::uint64_t bits = Mix64(Mix64(seed) ^ Mix64(pair ^ 0x5851f42d4c957f2dULL));
  const double u = UnitFromBits(bits);
  return model == WeightModel::kUniform01 ? u : -std::log1p(-u);
}

WeightedCompleteGraph WeightedCompleteGraph::Generate(std::size_t n,
                                                      WeightModel model,
                                                      std::uint64_t seed,
                                                      StorageMode mode) {
  Require(n >= 2, "graph needs n >= 2");
  Require(n <= std::numeric_limits<Vertex>::max(), "n exceeds vertex id range");
  WeightedCompleteGraph g;
  g.n_ = n;
  g.model_ = model;
  g.seed_ = seed;
  g.storage_ = mode;
  g.deleted_adj_.resize(n);
  if (mode == StorageMode::kDense) {
    const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    g.triangle_.resize(pairs);
    for (std::uint64_t p = 0; p < pairs; ++p) {
      g.triangle_[p] = PrfWeight(seed, p, model);
    }
  }
  return g;
}

WeightedCompleteGraph WeightedCompleteGraph::FromMatrix(
    std::size_t n, std::span<const double> matrix) {
  Require(n >= 2, "graph needs n >= 2");
  Require(matrix.size() == n * n, "weight matrix must be n*n");
  WeightedCompleteGraph g;
  g.n_ = n;
  g.storage_ = StorageMode::kDense;
  g.deleted_adj_.resize(n);
  g.triangle_.resize(n * (n - 1) / 2);
  for (std::size_t v = 1; v < n; ++v) {
    for (std::size_t u = 0; u < v; ++u) {
      const double w = matrix[u * n + v];
      Require(std::isfinite(w) && w >= 0.0, "weights must be finite and >= 0");
      Require(w == matrix[v * n + u], "weight matrix must be symmetric");
      g.triangle_[PairIndex(static_cast<Vertex>(u), static_cast<Vertex>(v))] = w;
    }
  }
  return g;
}

void WeightedCompleteGraph::CheckVertex(Vertex u) const {
  if (u >= n_) {
    Fail(ErrorCode::kInvalidEdge, "vertex " + std::to_string(u) + " out of range");
  }
}

void WeightedCompleteGraph::SetTerminals(Vertex s, Vertex t) {
  Require(s < n_ && t < n_, "terminal out of range");
  Require(s != t, "source and sink must differ");
  source_ = s;
  sink_ = t;
}

double WeightedCompleteGraph::Weight(Vertex u, Vertex v) const {
  CheckVertex(u);
  CheckVertex(v);
  if (u == v) Fail(ErrorCode::kInvalidEdge, "weight(u, u) is undefined");
  const std::uint64_t p = PairIndex(u, v);
  if (storage_ == StorageMode::kDense) return triangle_[p];
  return PrfWeight(seed_, p, *model_);
}

bool WeightedCompleteGraph::IsDeleted(Vertex u, Vertex v) const {
  CheckVertex(u);
  CheckVertex(v);
  if (u == v) Fail(ErrorCode::kInvalidEdge, "self-pair is not an edge");
  return deleted_.contains(PairIndex(u, v));
}

void WeightedCompleteGraph::DeleteEdges(std::span<const Edge> edges) {
  for (const Edge& e : edges) {
    CheckVertex(e.u);
    CheckVertex(e.v);
    if (e.u == e.v) Fail(ErrorCode::kInvalidEdge, "self-pair is not an edge");
  }
  for (const Edge& e : edges) {
    if (deleted_.insert(PairIndex(e.u, e.v)).second) {
      deleted_adj_[e.u].push_back(e.v);
      deleted_adj_[e.v].push_back(e.u);
    }
  }
}

void WeightedCompleteGraph::ClearDeletions() {
  deleted_.clear();
  for (auto& adj : deleted_adj_) adj.clear();
}

std::vector<Edge> WeightedCompleteGraph::DeletedEdges() const {
  std::vector<std::uint64_t> idx(deleted_.begin(), deleted_.end());
  std::sort(idx.begin(), idx.end());
  std::vector<Edge> out;
  out.reserve(idx.size());
  for (std::uint64_t p : idx) {
    // Invert p = hi*(hi-1)/2 + lo.
    auto hi = static_cast<std::uint64_t>(
        (1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(p))) / 2.0);
    while (hi * (hi - 1) / 2 > p) --hi;
    while ((hi + 1) * hi / 2 <= p) ++hi;
    out.push_back({static_cast<Vertex>(p - hi * (hi - 1) / 2),
                   static_cast<Vertex>(hi)});
  }
  return out;
}

std::vector<Vertex> WeightedCompleteGraph::Neighbors(Vertex u) const {
  CheckVertex(u);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n_; ++v) {
    if (v != u && !deleted_.contains(PairIndex(u, v))) out.push_back(v);
  }
  return out;
}

void WeightedCompleteGraph::LoadRawRow(Vertex u, std::span<double> out) const {
  CheckVertex(u);
  Require(out.size() == n_, "row buffer must have n entries");
  const std::uint64_t base = static_cast<std::uint64_t>(u) * (u - (u > 0)) / 2;
  if (storage_ == StorageMode::kDense) {
    const double* tri = triangle_.data();
    for (Vertex v = 0; v < u; ++v) out[v] = tri[base + v];
    for (std::uint64_t v = u + 1; v < n_; ++v) out[v] = tri[v * (v - 1) / 2 + u];
  } else {
    for (Vertex v = 0; v < u; ++v) out[v] = PrfWeight(seed_, base + v, *model_);
    for (std::uint64_t v = u + 1; v < n_; ++v) {
      out[v] = PrfWeight(seed_, v * (v - 1) / 2 + u, *model_);
    }
  }
  out[u] = kInf;
}

void WeightedCompleteGraph::LoadRow(Vertex u, std::span<double> out) const {
  LoadRawRow(u, out);
  for (Vertex v : deleted_adj_[u]) out[v] = kInf;
}

}  // namespace kpath
