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

#ifndef KPATH_WALECKI_HPP_
#define KPATH_WALECKI_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "kpath/weights.hpp"

namespace kpath {

// r edge-disjoint Hamilton paths of K_{2r} with 2r distinct terminals.
struct HamiltonDecomposition {
  std::size_t r = 0;
  std::vector<std::vector<Vertex>> paths;
};

// Zig-zag layout: path j visits j, j+1, j-1, j+2, j-2, ..., j+r (mod 2r), so
// its terminals are j and j+r.
HamiltonDecomposition WaleckiDecompose(std::size_t r);

// n/2 edge-disjoint s-t paths of K_n (n even) whose removal separates s from
// t: the bare edge {s,t} plus s -> Hamilton path -> t for each path of a
// Walecki decomposition of K_n - {s,t}.
struct SaturatingFamily {
  std::size_t n = 0;
  Vertex s = 0;
  Vertex t = 1;
  std::vector<std::vector<Vertex>> st_paths;
  std::vector<Vertex> start_terminals;  // linked to s
  std::vector<Vertex> end_terminals;    // linked to t
};

SaturatingFamily BuildSaturatingFamily(std::size_t n, Vertex s, Vertex t);

// Human-readable invariant violations; empty when the structure is valid.
std::vector<std::string> AuditDecomposition(const HamiltonDecomposition& dec);
std::vector<std::string> AuditSaturatingFamily(const SaturatingFamily& fam);

std::string SaturatingFamilyJson(const SaturatingFamily& fam);

}  // namespace kpath

#endif  // KPATH_WALECKI_HPP_
