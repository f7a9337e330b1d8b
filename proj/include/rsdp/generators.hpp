// Copyright 2026 The RSDP Authors
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

#pragma once

#include <random>
#include <string>
#include <vector>

#include "rsdp/graph.hpp"
#include "rsdp/rng.hpp"

namespace rsdp {

namespace detail {
inline std::vector<std::vector<int>> zero_labels(int n, int label_dim) {
  return std::vector<std::vector<int>>(n, std::vector<int>(label_dim, 0));
}
}  // namespace detail

inline LabeledGraph make_empty(int n, int label_dim = 1) {
  return LabeledGraph(n, {}, detail::zero_labels(n, label_dim));
}

// Center 0 joined to every other vertex.
inline LabeledGraph make_star(int n, int label_dim = 1) {
  if (n < 1) throw std::invalid_argument("star needs at least one vertex");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return LabeledGraph(n, std::move(edges), detail::zero_labels(n, label_dim));
}

inline LabeledGraph make_complete(int n, int label_dim = 1) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return LabeledGraph(n, std::move(edges), detail::zero_labels(n, label_dim));
}

// Vertices 0..left-1 on one side, left..left+right-1 on the other.
inline LabeledGraph make_complete_bipartite(int left, int right, int label_dim = 1) {
  if (left < 0 || right < 0) throw std::invalid_argument("negative side size");
  std::vector<Edge> edges;
  for (int u = 0; u < left; ++u)
    for (int v = 0; v < right; ++v) edges.emplace_back(u, left + v);
  return LabeledGraph(left + right, std::move(edges), detail::zero_labels(left + right, label_dim));
}

inline LabeledGraph make_cycle(int n, int label_dim = 1) {
  if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back(make_edge(v, (v + 1) % n));
  return LabeledGraph(n, std::move(edges), detail::zero_labels(n, label_dim));
}

// Each pair is an edge independently with probability p.
inline LabeledGraph gen_uniform_random(int n, double p, std::mt19937_64& rng, int label_dim = 1) {
  if (p < 0 || p > 1) throw std::invalid_argument("edge probability must lie in [0,1]");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (uniform_open01(rng) < p) edges.emplace_back(u, v);
  return LabeledGraph(n, std::move(edges), detail::zero_labels(n, label_dim));
}

// Vertices arrive one at a time and attach to up to `attach` distinct earlier
// vertices picked with probability proportional to degree + 1, giving the
// usual heavy-tailed degree profile with expected max degree well below n.
inline LabeledGraph gen_preferential_attachment(int n, int attach, std::mt19937_64& rng,
                                                int label_dim = 1) {
  if (attach < 1) throw std::invalid_argument("attachment count must be at least 1");
  std::vector<Edge> edges;
  std::vector<int> degree(n, 0);
  for (int v = 1; v < n; ++v) {
    int want = std::min(attach, v);
    std::vector<int> picked;
    while (static_cast<int>(picked.size()) < want) {
      std::uint64_t total = 0;
      for (int u = 0; u < v; ++u) total += degree[u] + 1;
      std::uint64_t r = uniform_index(rng, total);
      int u = 0;
      for (; u < v; ++u) {
        std::uint64_t weight = degree[u] + 1;
        if (r < weight) break;
        r -= weight;
      }
      bool duplicate = false;
      for (int w : picked) duplicate = duplicate || w == u;
      if (duplicate) continue;
      picked.push_back(u);
    }
    for (int u : picked) {
      edges.push_back(make_edge(u, v));
      ++degree[u];
      ++degree[v];
    }
  }
  return LabeledGraph(n, std::move(edges), detail::zero_labels(n, label_dim));
}

// Same structure with attribute vectors drawn uniformly from the alphabet.
inline LabeledGraph with_random_labels(const LabeledGraph& g, int alphabet,
                                       std::mt19937_64& rng) {
  if (alphabet < 1) throw std::invalid_argument("alphabet must be at least 1");
  std::vector<std::vector<int>> labels(g.vertex_count(),
                                       std::vector<int>(g.label_dim(), 0));
  for (auto& row : labels)
    for (int& value : row) value = static_cast<int>(uniform_index(rng, alphabet));
  return LabeledGraph(g.vertex_count(), g.edges(), std::move(labels));
}

inline LabeledGraph generate_family(const std::string& family, int n, double prob, int attach,
                                    int left, std::uint64_t seed, int label_dim = 1) {
  std::mt19937_64 rng(seed);
  if (family == "star") return make_star(n, label_dim);
  if (family == "complete") return make_complete(n, label_dim);
  if (family == "complete_bipartite") {
    if (left < 0 || left > n) throw std::invalid_argument("left side must lie in [0, n]");
    return make_complete_bipartite(left, n - left, label_dim);
  }
  if (family == "cycle") return make_cycle(n, label_dim);
  if (family == "uniform_random") return gen_uniform_random(n, prob, rng, label_dim);
  if (family == "preferential_attachment")
    return gen_preferential_attachment(n, attach, rng, label_dim);
  throw std::invalid_argument("unknown graph family: " + family);
}

}  // namespace rsdp
