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

#include "kpath/walecki.hpp"

#include <algorithm>
#include <deque>
#include <nlohmann/json.hpp>
#include <set>

#include "kpath/error.hpp"

namespace kpath {

namespace {

std::pair<Vertex, Vertex> Key(Vertex a, Vertex b) {
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

}  // namespace

HamiltonDecomposition WaleckiDecompose(std::size_t r) {
  Require(r >= 1, "walecki decomposition needs r >= 1");
  const std::size_t m = 2 * r;
  HamiltonDecomposition dec;
  dec.r = r;
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<Vertex> path;
    path.reserve(m);
    path.push_back(static_cast<Vertex>(j));
    for (std::size_t i = 1; i < r; ++i) {
      path.push_back(static_cast<Vertex>((j + i) % m));
      path.push_back(static_cast<Vertex>((j + m - i) % m));
    }
    path.push_back(static_cast<Vertex>((j + r) % m));
    dec.paths.push_back(std::move(path));
  }
  return dec;
}

SaturatingFamily BuildSaturatingFamily(std::size_t n, Vertex s, Vertex t) {
  Require(n >= 4 && n % 2 == 0, "saturating family needs even n >= 4");
  Require(s < n && t < n && s != t, "terminals must be distinct vertices of K_n");
  std::vector<Vertex> inner;
  for (Vertex v = 0; v < n; ++v) {
    if (v != s && v != t) inner.push_back(v);
  }
  SaturatingFamily fam;
  fam.n = n;
  fam.s = s;
  fam.t = t;
  fam.st_paths.push_back({s, t});
  for (const auto& ham : WaleckiDecompose((n - 2) / 2).paths) {
    std::vector<Vertex> path{s};
    for (Vertex h : ham) path.push_back(inner[h]);
    path.push_back(t);
    fam.start_terminals.push_back(inner[ham.front()]);
    fam.end_terminals.push_back(inner[ham.back()]);
    fam.st_paths.push_back(std::move(path));
  }
  return fam;
}

std::vector<std::string> AuditDecomposition(const HamiltonDecomposition& dec) {
  std::vector<std::string> issues;
  const std::size_t m = 2 * dec.r;
  if (dec.paths.size() != dec.r) issues.push_back("wrong number of paths");
  std::set<std::pair<Vertex, Vertex>> edges;
  std::set<Vertex> terminals;
  for (std::size_t j = 0; j < dec.paths.size(); ++j) {
    const auto& p = dec.paths[j];
    std::vector<Vertex> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    bool hamiltonian = sorted.size() == m;
    for (std::size_t i = 0; hamiltonian && i < m; ++i) hamiltonian = sorted[i] == i;
    if (!hamiltonian) {
      issues.push_back("path " + std::to_string(j) + " is not Hamiltonian");
      continue;
    }
    for (std::size_t i = 1; i < p.size(); ++i) {
      if (!edges.insert(Key(p[i - 1], p[i])).second) {
        issues.push_back("edge {" + std::to_string(p[i - 1]) + "," +
                         std::to_string(p[i]) + "} used twice");
      }
    }
    terminals.insert(p.front());
    terminals.insert(p.back());
  }
  if (edges.size() != dec.r * (m - 1)) issues.push_back("edges do not cover K_2r");
  if (terminals.size() != m) issues.push_back("terminals are not distinct");
  return issues;
}

std::vector<std::string> AuditSaturatingFamily(const SaturatingFamily& fam) {
  std::vector<std::string> issues;
  const std::size_t n = fam.n;
  if (fam.st_paths.size() != n / 2) issues.push_back("expected n/2 paths");
  std::vector<unsigned char> used(n * n, 0);
  bool has_st_edge = false;
  for (const auto& p : fam.st_paths) {
    if (p.size() < 2 || p.front() != fam.s || p.back() != fam.t) {
      issues.push_back("path does not run from s to t");
      continue;
    }
    if (p.size() == 2) has_st_edge = true;
    std::set<Vertex> seen(p.begin(), p.end());
    if (seen.size() != p.size()) issues.push_back("path is not simple");
    for (std::size_t i = 1; i < p.size(); ++i) {
      unsigned char& cell = used[p[i - 1] * n + p[i]];
      if (cell) issues.push_back("paths share an edge");
      cell = 1;
      used[p[i] * n + p[i - 1]] = 1;
    }
  }
  if (!has_st_edge) issues.push_back("edge {s,t} missing from the family");

  // Residual BFS from s.
  std::vector<unsigned char> reached(n, 0);
  std::deque<Vertex> queue{fam.s};
  reached[fam.s] = 1;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v = 0; v < n; ++v) {
      if (v != u && !used[u * n + v] && !reached[v]) {
        reached[v] = 1;
        queue.push_back(v);
      }
    }
  }
  if (reached[fam.t]) issues.push_back("residual graph still connects s and t");

  // Residual edges: star s -> end terminals, star t -> start terminals.
  std::set<std::pair<Vertex, Vertex>> expected;
  for (Vertex v : fam.end_terminals) expected.insert(Key(fam.s, v));
  for (Vertex v : fam.start_terminals) expected.insert(Key(fam.t, v));
  std::set<std::pair<Vertex, Vertex>> residual;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!used[u * n + v]) residual.insert({u, v});
    }
  }
  if (residual != expected) issues.push_back("residual edges are not the two stars");
  return issues;
}

std::string SaturatingFamilyJson(const SaturatingFamily& fam) {
  nlohmann::json j;
  j["n"] = fam.n;
  j["s"] = fam.s;
  j["t"] = fam.t;
  j["paths"] = fam.st_paths;
  j["start_terminals"] = fam.start_terminals;
  j["end_terminals"] = fam.end_terminals;
  return j.dump(2);
}

}  // namespace kpath
