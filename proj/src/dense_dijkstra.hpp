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

#ifndef KPATH_SRC_DENSE_DIJKSTRA_HPP_
#define KPATH_SRC_DENSE_DIJKSTRA_HPP_

#include <algorithm>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "kpath/weights.hpp"

namespace kpath::internal {

// Array-scan Dijkstra for dense graphs: O(n) selection per settled vertex,
// no heap. Arc costs come from a row callback so the same loop serves plain
// weights and residual reduced costs. Workspace is reused across runs.
class DenseDijkstra {
 public:
  static constexpr double kInf = std::numeric_limits<double>::infinity();
  static constexpr Vertex kNone = std::numeric_limits<Vertex>::max();

  explicit DenseDijkstra(std::size_t n)
      : n_(n), dist_(n), tent_(n), penalty_(n), row_(n), pred_(n),
        settled_(n) {}

  // Settles vertices in distance order starting at `root`, stopping after
  // `stop_at` is settled or `max_settled` vertices are settled. RowFn is
  // called as row_fn(u, std::span<double>) and must write the cost of every
  // arc u->v (+inf when absent). Selection ties go to the smaller id.
  template <class RowFn>
  void Run(Vertex root, Vertex stop_at, std::size_t max_settled,
           RowFn&& row_fn) {
    std::fill(dist_.begin(), dist_.end(), kInf);
    std::fill(tent_.begin(), tent_.end(), kInf);
    std::fill(penalty_.begin(), penalty_.end(), 0.0);
    std::fill(pred_.begin(), pred_.end(), kNone);
    std::fill(settled_.begin(), settled_.end(), 0);
    order_.clear();
    tent_[root] = 0.0;
    pred_[root] = root;

    double* tent = tent_.data();
    const double* pen = penalty_.data();
    const double* row = row_.data();
    while (order_.size() < max_settled) {
      double best = kInf;
      std::size_t u = n_;
      for (std::size_t v = 0; v < n_; ++v) {
        if (tent[v] < best) {
          best = tent[v];
          u = v;
        }
      }
      if (u == n_) break;
      dist_[u] = best;
      settled_[u] = 1;
      penalty_[u] = kInf;
      tent[u] = kInf;
      order_.push_back(static_cast<Vertex>(u));
      if (u == stop_at) break;
      row_fn(static_cast<Vertex>(u), std::span<double>(row_));
      const auto from = static_cast<Vertex>(u);
      for (std::size_t v = 0; v < n_; ++v) {
        const double cand = best + row[v] + pen[v];
        if (cand < tent[v]) {
          tent[v] = cand;
          pred_[v] = from;
        }
      }
    }
  }

  std::size_t n() const { return n_; }
  double dist(Vertex v) const { return dist_[v]; }
  bool settled(Vertex v) const { return settled_[v] != 0; }
  Vertex pred(Vertex v) const { return pred_[v]; }
  // Settled vertices in settling order.
  const std::vector<Vertex>& order() const { return order_; }
  std::span<double> scratch_row() { return row_; }

 private:
  std::size_t n_;
  std::vector<double> dist_;
  std::vector<double> tent_;
  std::vector<double> penalty_;
  std::vector<double> row_;
  std::vector<Vertex> pred_;
  std::vector<unsigned char> settled_;
  std::vector<Vertex> order_;
};

}  // namespace kpath::internal

#endif  // KPATH_SRC_DENSE_DIJKSTRA_HPP_
