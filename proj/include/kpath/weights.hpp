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

#ifndef KPATH_WEIGHTS_HPP_
#define KPATH_WEIGHTS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace kpath {

using Vertex = std::uint32_t;

enum class WeightModel { kUniform01, kExponential1 };
enum class StorageMode { kDense, kImplicitPrf };

std::string_view ModelName(WeightModel model);
WeightModel ParseModel(std::string_view name);

// Unordered vertex pair. Construction does not validate; the graph does.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// splitmix64 output function (includes the golden-ratio increment).
std::uint64_t Mix64(std::uint64_t x);

// Seed for trial `trial` of a batch: master ^ splitmix64(trial). Fixed so that
// archived batches can be replayed.
std::uint64_t TrialSeed(std::uint64_t master_seed, std::uint64_t trial);

// Top 53 bits of `bits` mapped onto [0, 1).
double UnitFromBits(std::uint64_t bits);

// -ln(1 - w). Order-preserving map from U(0,1) onto Exp(1); result >= w.
double CoupleToExponential(double w);

// Canonical index of {u, v}, u != v: max*(max-1)/2 + min.
inline std::uint64_t PairIndex(Vertex u, Vertex v) {
  const std::uint64_t lo = u < v ? u : v;
  const std::uint64_t hi = u < v ? v : u;
  return hi * (hi - 1) / 2 + lo;
}

// Counter-based weight of the pair with canonical index `pair`. Both storage
// modes route through this, so they agree bit for bit.
double PrfWeight(std::uint64_t seed, std::uint64_t pair, WeightModel model);

// K_n with symmetric i.i.d. edge weights and a persistent deleted-edge set.
class WeightedCompleteGraph {
 public:
  static WeightedCompleteGraph Generate(std::size_t n, WeightModel model,
                                        std::uint64_t seed,
                                        StorageMode mode = StorageMode::kDense);

  // Crafted instance from a row-major n*n matrix. The diagonal is ignored;
  // the matrix must be symmetric with finite nonnegative off-diagonal
  // entries.
  static WeightedCompleteGraph FromMatrix(std::size_t n,
                                          std::span<const double> matrix);

  std::size_t n() const { return n_; }
  Vertex source() const { return source_; }
  Vertex sink() const { return sink_; }
  void SetTerminals(Vertex s, Vertex t);

  // Unset for crafted instances.
  std::optional<WeightModel> model() const { return model_; }
  std::uint64_t seed() const { return seed_; }
  StorageMode storage() const { return storage_; }

  // Intrinsic weight of {u, v}; deletion does not change it.
  double Weight(Vertex u, Vertex v) const;

  bool IsDeleted(Vertex u, Vertex v) const;

  // Idempotent. Validates every pair before mutating anything.
  void DeleteEdges(std::span<const Edge> edges);
  void ClearDeletions();
  std::size_t deleted_count() const { return deleted_.size(); }
  // Sorted by canonical index.
  std::vector<Edge> DeletedEdges() const;

  // Non-deleted neighbors of u in increasing id order.
  std::vector<Vertex> Neighbors(Vertex u) const;

  // out[v] = w(u, v) for live edges, +inf for v == u and deleted edges.
  // out.size() must equal n().
  void LoadRow(Vertex u, std::span<double> out) const;

  // Same as LoadRow but ignores the deletion mask.
  void LoadRawRow(Vertex u, std::span<double> out) const;

 private:
  WeightedCompleteGraph() = default;
  void CheckVertex(Vertex u) const;

  std::size_t n_ = 0;
  Vertex source_ = 0;
  Vertex sink_ = 1;
  std::optional<WeightModel> model_;
  std::uint64_t seed_ = 0;
  StorageMode storage_ = StorageMode::kDense;
  std::vector<double> triangle_;  // indexed by PairIndex; empty when implicit
  std::unordered_set<std::uint64_t> deleted_;
  std::vector<std::vector<Vertex>> deleted_adj_;
};

}  // namespace kpath

#endif  // KPATH_WEIGHTS_HPP_
