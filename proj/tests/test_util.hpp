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
#include <vector>

#include "rsdp/generators.hpp"
#include "rsdp/graph.hpp"
#include "rsdp/rng.hpp"

namespace rsdp::test {

inline LabeledGraph random_graph(std::mt19937_64& rng, int n, double p, int alphabet = 2,
                                 int label_dim = 1) {
  LabeledGraph structure = gen_uniform_random(n, p, rng, label_dim);
  return with_random_labels(structure, alphabet, rng);
}

// One edge-adjacency step away: flip a uniform pair or relabel one vertex.
inline LabeledGraph random_edge_neighbor(const LabeledGraph& g, std::mt19937_64& rng,
                                         int alphabet = 2) {
  int n = g.vertex_count();
  if (n >= 2 && (alphabet < 2 || uniform_index(rng, 2) == 0)) {
    int u = static_cast<int>(uniform_index(rng, n));
    int v = static_cast<int>(uniform_index(rng, n - 1));
    if (v >= u) ++v;
    return g.with_toggled_edge(u, v);
  }
  int v = static_cast<int>(uniform_index(rng, n));
  std::vector<int> labels = g.labels(v);
  int dim = static_cast<int>(uniform_index(rng, labels.size()));
  int shift = 1 + static_cast<int>(uniform_index(rng, alphabet - 1));
  labels[dim] = (labels[dim] + shift) % alphabet;
  return g.with_vertex_labels(v, labels);
}

// One vertex-adjacency step away: rewire one vertex to a random neighbor set,
// optionally changing its labels in the same step.
inline LabeledGraph random_vertex_neighbor(const LabeledGraph& g, std::mt19937_64& rng,
                                           int alphabet = 2) {
  int n = g.vertex_count();
  int v = static_cast<int>(uniform_index(rng, n));
  std::vector<int> neighbors;
  for (int u = 0; u < n; ++u)
    if (u != v && uniform_index(rng, 2) == 0) neighbors.push_back(u);
  LabeledGraph rewired = g.with_rewired_vertex(v, neighbors);
  if (alphabet >= 2 && uniform_index(rng, 2) == 0) {
    std::vector<int> labels = rewired.labels(v);
    int dim = static_cast<int>(uniform_index(rng, labels.size()));
    labels[dim] = (labels[dim] + 1 + static_cast<int>(uniform_index(rng, alphabet - 1))) % alphabet;
    rewired = rewired.with_vertex_labels(v, labels);
  }
  return rewired;
}

// Exact distance to the max-degree-<=k class under vertex adjacency: the
// smallest set of vertices whose edge removal caps every degree.
inline int brute_force_distance_to_hypothesis(const LabeledGraph& g, int k) {
  int n = g.vertex_count();
  for (int size = 0; size <= n; ++size) {
    std::vector<int> subset(size);
    for (int i = 0; i < size; ++i) subset[i] = i;
    while (true) {
      std::vector<char> gone(n, 0);
      for (int v : subset) gone[v] = 1;
      int worst = 0;
      for (int v = 0; v < n; ++v) {
        if (gone[v]) continue;
        int d = 0;
        for (int u : g.neighbors(v))
          if (!gone[u]) ++d;
        worst = std::max(worst, d);
      }
      if (worst <= k) return size;
      int i = size - 1;
      while (i >= 0 && subset[i] == n - size + i) --i;
      if (i < 0) break;
      ++subset[i];
      for (int j = i + 1; j < size; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  return n;
}

}  // namespace rsdp::test
