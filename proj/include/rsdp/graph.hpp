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

#include <algorithm>
#include <bit>
#include <cstdint>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

#include "rsdp/error.hpp"

namespace rsdp {

// Unordered vertex pair, normalized so that first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("self-loop edge (" + std::to_string(u) + ")");
  return u < v ? Edge{u, v} : Edge{v, u};
}

// Index of the unordered pair {u, v} in the row-major upper triangle of an
// n x n matrix. This matches lexicographic order on (min, max), the canonical
// edge order used throughout.
inline int pair_index(int n, int u, int v) {
  if (u > v) std::swap(u, v);
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

inline int pair_count(int n) { return n * (n - 1) / 2; }

// Which one-step change relates neighboring datasets: a single edge flip or
// single-vertex relabel (kEdge), or an arbitrary change to one vertex's
// incident edges and labels (kVertex).
enum class AdjacencyModel { kEdge, kVertex };

inline const char* to_string(AdjacencyModel m) {
  return m == AdjacencyModel::kEdge ? "edge" : "vertex";
}

// An undirected simple graph on a fixed vertex set {0..n-1} together with a
// per-vertex attribute vector of small non-negative integers. The attribute
// dimension m is shared by all vertices. Instances are immutable; the
// with_*/without_* helpers return modified copies.
class LabeledGraph {
 public:
  LabeledGraph() : LabeledGraph(0, {}, {}) {}

  LabeledGraph(int n, std::vector<Edge> edges, std::vector<std::vector<int>> labels)
      : n_(n), labels_(std::move(labels)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (static_cast<int>(labels_.size()) != n)
      throw std::invalid_argument("labels must have exactly one row per vertex");
    m_ = labels_.empty() ? 0 : static_cast<int>(labels_[0].size());
    for (const auto& row : labels_) {
      if (static_cast<int>(row.size()) != m_)
        throw std::invalid_argument("ragged label rows");
      for (int value : row)
        if (value < 0) throw std::invalid_argument("negative label value");
    }
    adj_.assign(n_, {});
    std::sort(edges.begin(), edges.end());
    for (size_t i = 0; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      if (u < 0 || v >= n_ || u >= v)
        throw std::invalid_argument("edge endpoints must satisfy 0 <= u < v < n");
      if (i > 0 && edges[i] == edges[i - 1])
        throw std::invalid_argument("duplicate edge");
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    edges_ = std::move(edges);
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  }

  // Graph with no attributes (m = 0); used for query patterns.
  static LabeledGraph unlabeled(int n, std::vector<Edge> edges) {
    return LabeledGraph(n, std::move(edges), std::vector<std::vector<int>>(n));
  }

  int vertex_count() const { return n_; }
  int label_dim() const { return m_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  const std::vector<int>& labels(int v) const { return labels_.at(v); }
  const std::vector<std::vector<int>>& all_labels() const { return labels_; }

  bool has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& nb = adj_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  bool same_shape(const LabeledGraph& other) const {
    return n_ == other.n_ && m_ == other.m_;
  }

  LabeledGraph without_edges(const std::vector<Edge>& removed) const {
    std::vector<Edge> keep;
    keep.reserve(edges_.size());
    std::vector<Edge> sorted_removed = removed;
    std::sort(sorted_removed.begin(), sorted_removed.end());
    for (const Edge& e : edges_)
      if (!std::binary_search(sorted_removed.begin(), sorted_removed.end(), e))
        keep.push_back(e);
    return LabeledGraph(n_, std::move(keep), labels_);
  }

  LabeledGraph with_toggled_edge(int u, int v) const {
    Edge e = make_edge(u, v);
    std::vector<Edge> next = edges_;
    auto it = std::lower_bound(next.begin(), next.end(), e);
    if (it != next.end() && *it == e)
      next.erase(it);
    else
      next.insert(it, e);
    return LabeledGraph(n_, std::move(next), labels_);
  }

  LabeledGraph with_vertex_labels(int v, std::vector<int> row) const {
    auto next = labels_;
    next.at(v) = std::move(row);
    return LabeledGraph(n_, edges_, std::move(next));
  }

  // Replaces the set of edges incident to v by {v,u} for u in new_neighbors.
  LabeledGraph with_rewired_vertex(int v, const std::vector<int>& new_neighbors) const {
    std::vector<Edge> next;
    next.reserve(edges_.size() + new_neighbors.size());
    for (const Edge& e : edges_)
      if (e.first != v && e.second != v) next.push_back(e);
    for (int u : new_neighbors) next.push_back(make_edge(u, v));
    return LabeledGraph(n_, std::move(next), labels_);
  }

  // Induced labeled subgraph on the given vertices, renumbered 0..t-1 in the
  // order supplied.
  LabeledGraph induced(const std::vector<int>& vertices) const {
    std::vector<int> local(n_, -1);
    for (size_t i = 0; i < vertices.size(); ++i) local.at(vertices[i]) = static_cast<int>(i);
    std::vector<Edge> sub;
    for (const Edge& e : edges_) {
      int lu = local[e.first], lv = local[e.second];
      if (lu >= 0 && lv >= 0) sub.push_back(make_edge(lu, lv));
    }
    std::vector<std::vector<int>> sub_labels;
    sub_labels.reserve(vertices.size());
    for (int v : vertices) sub_labels.push_back(labels_.at(v));
    return LabeledGraph(static_cast<int>(vertices.size()), std::move(sub), std::move(sub_labels));
  }

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.labels_ == b.labels_;
  }
  friend bool operator!=(const LabeledGraph& a, const LabeledGraph& b) { return !(a == b); }

 private:
  int n_;
  int m_;
  std::vector<Edge> edges_;            // sorted
  std::vector<std::vector<int>> adj_;  // sorted neighbor lists
  std::vector<std::vector<int>> labels_;
};

inline int max_degree(const LabeledGraph& g) {
  int best = 0;
  for (int v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

// The bounded-degree dataset class: all graphs whose maximum degree is <= k.
struct Hypothesis {
  int k = 0;
};

inline bool in_hypothesis(const LabeledGraph& g, Hypothesis h) {
  return max_degree(g) <= h.k;
}

// Vertices whose attribute vectors differ between the two graphs.
inline std::vector<int> label_diff_set(const LabeledGraph& g1, const LabeledGraph& g2) {
  if (!g1.same_shape(g2))
    throw std::invalid_argument("label_diff_set: graphs must share n and label dimension");
  std::vector<int> diff;
  for (int v = 0; v < g1.vertex_count(); ++v)
    if (g1.labels(v) != g2.labels(v)) diff.push_back(v);
  return diff;
}

inline std::vector<Edge> symmetric_difference_edges(const LabeledGraph& g1,
                                                    const LabeledGraph& g2) {
  std::vector<Edge> diff;
  std::set_symmetric_difference(g1.edges().begin(), g1.edges().end(), g2.edges().begin(),
                                g2.edges().end(), std::back_inserter(diff));
  return diff;
}

// Exact minimum vertex cover of the graph formed by `edges`, by branch and
// bound with a degree-1 reduction. Capped at `edge_cap` edges (hard limit 32
// so endpoint ids fit one 64-bit mask after compaction).
inline int min_vertex_cover_size(const std::vector<Edge>& edges, int edge_cap = 24) {
  if (edge_cap > 32) throw std::invalid_argument("exact vertex cover cap may not exceed 32 edges");
  if (static_cast<int>(edges.size()) > edge_cap)
    throw ComputeError("difference graph has " + std::to_string(edges.size()) +
                       " edges, exceeding the exact vertex-cover cap of " +
                       std::to_string(edge_cap));
  if (edges.empty()) return 0;

  // Compact endpoint ids into 0..v-1.
  std::vector<int> ids;
  for (const Edge& e : edges) {
    ids.push_back(e.first);
    ids.push_back(e.second);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  int v = static_cast<int>(ids.size());
  std::vector<std::uint64_t> adj(v, 0);
  auto local = [&](int x) {
    return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), x) - ids.begin());
  };
  for (const Edge& e : edges) {
    int a = local(e.first), b = local(e.second);
    adj[a] |= std::uint64_t{1} << b;
    adj[b] |= std::uint64_t{1} << a;
  }

  int best = v;  // taking every endpoint always covers
  auto popcount = [](std::uint64_t x) { return std::popcount(x); };

  // Depth-first search over "alive" vertices; `taken` counts cover vertices
  // already committed.
  auto search = [&](auto&& self, std::uint64_t alive, int taken) -> void {
    if (taken >= best) return;
    // Degree-1 reduction: a pendant edge is always covered optimally by the
    // non-pendant endpoint.
    bool reduced = true;
    while (reduced) {
      reduced = false;
      for (int i = 0; i < v; ++i) {
        if (!(alive >> i & 1)) continue;
        std::uint64_t nb = adj[i] & alive;
        if (nb == 0) {
          alive &= ~(std::uint64_t{1} << i);
        } else if (popcount(nb) == 1) {
          int j = std::countr_zero(nb);
          ++taken;
          if (taken >= best) return;
          alive &= ~(std::uint64_t{1} << i);
          alive &= ~(std::uint64_t{1} << j);
          reduced = true;
        }
      }
    }
    int pick = -1, deg = 0;
    for (int i = 0; i < v; ++i) {
      if (!(alive >> i & 1)) continue;
      int d = popcount(adj[i] & alive);
      if (d > deg) {
        deg = d;
        pick = i;
      }
    }
    if (pick < 0) {  // no edges remain
      best = std::min(best, taken);
      return;
    }
    // Branch 1: pick is in the cover.
    self(self, alive & ~(std::uint64_t{1} << pick), taken + 1);
    // Branch 2: pick is not, so all of its alive neighbors are.
    std::uint64_t nb = adj[pick] & alive;
    self(self, alive & ~nb & ~(std::uint64_t{1} << pick), taken + popcount(nb));
  };
  search(search, (v == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << v) - 1), 0);
  return best;
}

// Distance under edge adjacency: one step per differing label vector plus one
// step per edge in the symmetric difference.
inline int edge_distance(const LabeledGraph& g1, const LabeledGraph& g2) {
  if (!g1.same_shape(g2))
    throw std::invalid_argument("edge_distance: graphs must share n and label dimension");
  int label_steps = static_cast<int>(label_diff_set(g1, g2).size());
  return label_steps + static_cast<int>(symmetric_difference_edges(g1, g2).size());
}

// Distance under vertex adjacency: relabeled vertices account for one step
// each (a step may rewire that vertex's edges at the same time), and the
// remaining differing edges are covered by an exact minimum vertex cover of
// the difference graph.
inline int vertex_distance(const LabeledGraph& g1, const LabeledGraph& g2,
                           int exact_vc_edge_cap = 24) {
  if (!g1.same_shape(g2))
    throw std::invalid_argument("vertex_distance: graphs must share n and label dimension");
  std::vector<int> relabeled = label_diff_set(g1, g2);
  std::vector<char> in_u(g1.vertex_count(), 0);
  for (int v : relabeled) in_u[v] = 1;
  std::vector<Edge> residual;
  for (const Edge& e : symmetric_difference_edges(g1, g2))
    if (!in_u[e.first] && !in_u[e.second]) residual.push_back(e);
  return static_cast<int>(relabeled.size()) + min_vertex_cover_size(residual, exact_vc_edge_cap);
}

// True when the two graphs differ by exactly one edge flip, or by the labels
// of exactly one vertex.
inline bool is_edge_adjacent(const LabeledGraph& g1, const LabeledGraph& g2) {
  if (!g1.same_shape(g2)) return false;
  size_t label_diffs = label_diff_set(g1, g2).size();
  size_t edge_diffs = symmetric_difference_edges(g1, g2).size();
  return (label_diffs == 1 && edge_diffs == 0) || (label_diffs == 0 && edge_diffs == 1);
}

// True when some single vertex v accounts for every difference: all label
// changes are at v and every differing edge touches v.
inline bool is_vertex_adjacent(const LabeledGraph& g1, const LabeledGraph& g2) {
  if (!g1.same_shape(g2) || g1 == g2) return false;
  std::vector<int> relabeled = label_diff_set(g1, g2);
  if (relabeled.size() > 1) return false;
  std::vector<Edge> diff = symmetric_difference_edges(g1, g2);
  if (relabeled.size() == 1) {
    int v = relabeled[0];
    for (const Edge& e : diff)
      if (e.first != v && e.second != v) return false;
    return true;
  }
  if (diff.empty()) return false;
  for (int v : {diff[0].first, diff[0].second}) {
    bool covers = true;
    for (const Edge& e : diff)
      if (e.first != v && e.second != v) {
        covers = false;
        break;
      }
    if (covers) return true;
  }
  return false;
}

inline int distance(const LabeledGraph& g1, const LabeledGraph& g2, AdjacencyModel model,
                    int exact_vc_edge_cap = 24) {
  return model == AdjacencyModel::kEdge ? edge_distance(g1, g2)
                                        : vertex_distance(g1, g2, exact_vc_edge_cap);
}

// Dense symmetric integer distance matrix over an enumerated dataset list.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(int n = 0) : n_(n), d_(static_cast<size_t>(n) * n, 0) {}
  int size() const { return n_; }
  std::uint16_t at(int i, int j) const { return d_[static_cast<size_t>(i) * n_ + j]; }
  void set(int i, int j, std::uint16_t value) {
    d_[static_cast<size_t>(i) * n_ + j] = value;
    d_[static_cast<size_t>(j) * n_ + i] = value;
  }

 private:
  int n_;
  std::vector<std::uint16_t> d_;
};

}  // namespace rsdp
