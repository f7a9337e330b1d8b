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
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rsdp/graph.hpp"

namespace rsdp {

inline constexpr int kMaxPatternSize = 5;

// Membership test over a vertex's attribute vector: either accepts
// everything, or checks one attribute dimension against an allowed set.
class LabelPredicate {
 public:
  static LabelPredicate any() { return LabelPredicate{}; }
  static LabelPredicate dim_in(int dim, std::vector<int> allowed) {
    if (dim < 0) throw std::invalid_argument("predicate dimension must be non-negative");
    LabelPredicate p;
    p.dim_ = dim;
    p.allowed_ = std::move(allowed);
    std::sort(p.allowed_.begin(), p.allowed_.end());
    return p;
  }

  bool matches(const std::vector<int>& labels) const {
    if (dim_ < 0) return true;
    if (dim_ >= static_cast<int>(labels.size())) return false;
    return std::binary_search(allowed_.begin(), allowed_.end(), labels[dim_]);
  }

  bool is_any() const { return dim_ < 0; }
  int dim() const { return dim_; }
  const std::vector<int>& allowed() const { return allowed_; }

 private:
  int dim_ = -1;
  std::vector<int> allowed_;
};

// Counts unordered t-subsets whose induced subgraph equals a connected
// pattern (non-edges included) under some assignment where every position's
// predicate accepts its vertex.
struct SubgraphCountingQuery {
  LabeledGraph pattern;  // unlabeled, connected, at most kMaxPatternSize vertices
  std::vector<LabelPredicate> predicates;
};

namespace detail {

inline bool is_connected(const LabeledGraph& g) {
  int n = g.vertex_count();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : g.neighbors(v))
      if (!seen[u]) {
        seen[u] = 1;
        ++visited;
        stack.push_back(u);
      }
  }
  return visited == n;
}

}  // namespace detail

inline SubgraphCountingQuery make_subgraph_query(int t, std::vector<Edge> pattern_edges,
                                                 std::vector<LabelPredicate> predicates) {
  if (t < 1) throw std::invalid_argument("pattern must have at least one vertex");
  if (t > kMaxPatternSize)
    throw std::invalid_argument("pattern size exceeds the cap of " +
                                std::to_string(kMaxPatternSize));
  if (static_cast<int>(predicates.size()) != t)
    throw std::invalid_argument("need exactly one predicate per pattern vertex");
  LabeledGraph pattern = LabeledGraph::unlabeled(t, std::move(pattern_edges));
  if (!detail::is_connected(pattern)) throw std::invalid_argument("pattern must be connected");
  return SubgraphCountingQuery{std::move(pattern), std::move(predicates)};
}

inline long long count_subgraphs(const SubgraphCountingQuery& q, const LabeledGraph& g) {
  const int t = q.pattern.vertex_count();
  const int n = g.vertex_count();
  if (t > n) return 0;

  std::vector<int> subset(t);           // increasing vertex ids
  std::vector<int> assignment(t);       // permutation of 0..t-1
  const int pattern_edges = q.pattern.edge_count();

  long long count = 0;
  // Enumerate t-subsets in lexicographic order.
  std::iota(subset.begin(), subset.end(), 0);
  while (true) {
    // Cheap filter: induced edge count must match before trying assignments.
    int induced_edges = 0;
    for (int i = 0; i < t; ++i)
      for (int j = i + 1; j < t; ++j)
        if (g.has_edge(subset[i], subset[j])) ++induced_edges;
    if (induced_edges == pattern_edges) {
      std::iota(assignment.begin(), assignment.end(), 0);
      do {
        // assignment[p] = index into subset for pattern position p
        bool ok = true;
        for (int p = 0; p < t && ok; ++p)
          ok = q.predicates[p].matches(g.labels(subset[assignment[p]]));
        for (int p = 0; p < t && ok; ++p)
          for (int r = p + 1; r < t && ok; ++r)
            ok = q.pattern.has_edge(p, r) ==
                 g.has_edge(subset[assignment[p]], subset[assignment[r]]);
        if (ok) {
          ++count;
          break;  // subset counted once
        }
      } while (std::next_permutation(assignment.begin(), assignment.end()));
    }
    // Advance the subset.
    int i = t - 1;
    while (i >= 0 && subset[i] == n - t + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < t; ++j) subset[j] = subset[j - 1] + 1;
  }
  return count;
}

// A profile maps (closed-neighborhood subgraph, center position) to [0,1].
// The evaluator hands the profile only the induced subgraph on v and its
// neighbors, which enforces locality by construction.
using ProfileFn = std::function<double(const LabeledGraph& neighborhood, int center)>;

struct LocalProfileQuery {
  std::string name;
  ProfileFn profile;
};

// Induced labeled subgraph on {v} union N(v); `center` receives v's position.
inline LabeledGraph closed_neighborhood(const LabeledGraph& g, int v, int* center) {
  std::vector<int> verts = g.neighbors(v);
  verts.insert(std::lower_bound(verts.begin(), verts.end(), v), v);
  if (center)
    *center = static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  return g.induced(verts);
}

inline double evaluate_profile_query(const LocalProfileQuery& q, const LabeledGraph& g) {
  double total = 0.0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int center = 0;
    LabeledGraph neighborhood = closed_neighborhood(g, v, &center);
    total += std::clamp(q.profile(neighborhood, center), 0.0, 1.0);
  }
  return total;
}

using Query = std::variant<SubgraphCountingQuery, LocalProfileQuery>;

inline double evaluate(const Query& q, const LabeledGraph& g) {
  if (const auto* sub = std::get_if<SubgraphCountingQuery>(&q))
    return static_cast<double>(count_subgraphs(*sub, g));
  return evaluate_profile_query(std::get<LocalProfileQuery>(q), g);
}

// ---------------------------------------------------------------------------
// Built-in profiles. All return values in [0,1].

// 1 when some neighbor of the center satisfies the predicate.
inline ProfileFn profile_neighbor_label(LabelPredicate p) {
  return [p](const LabeledGraph& gv, int c) {
    for (int u : gv.neighbors(c))
      if (p.matches(gv.labels(u))) return 1.0;
    return 0.0;
  };
}

// Fraction of neighbor pairs that are themselves adjacent; 0 below degree 2.
inline ProfileFn profile_clustering_coefficient() {
  return [](const LabeledGraph& gv, int c) {
    const auto& nb = gv.neighbors(c);
    int d = static_cast<int>(nb.size());
    if (d < 2) return 0.0;
    int closed = 0;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        if (gv.has_edge(nb[i], nb[j])) ++closed;
    return static_cast<double>(closed) / (d * (d - 1) / 2);
  };
}

// Fraction of the center's edges whose endpoints share no common neighbor.
inline ProfileFn profile_local_bridge_fraction() {
  return [](const LabeledGraph& gv, int c) {
    const auto& nb = gv.neighbors(c);
    if (nb.empty()) return 0.0;
    int bridges = 0;
    for (int u : nb) {
      bool common = false;
      for (int w : nb)
        if (w != u && gv.has_edge(u, w)) {
          common = true;
          break;
        }
      if (!common) ++bridges;
    }
    return static_cast<double>(bridges) / static_cast<double>(nb.size());
  };
}

// Average, over nonadjacent neighbor pairs {x,y}, of the probability that a
// random shortest x-y path inside the closed neighborhood passes through the
// center. Such paths have length 2, so the probability is one over the
// number of common neighbors of x and y within the neighborhood subgraph
// (the center always being one of them).
inline ProfileFn profile_two_betweenness() {
  return [](const LabeledGraph& gv, int c) {
    const auto& nb = gv.neighbors(c);
    int d = static_cast<int>(nb.size());
    int pairs = 0;
    double total = 0.0;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        if (gv.has_edge(nb[i], nb[j])) continue;
        ++pairs;
        int midpoints = 0;
        for (int w = 0; w < gv.vertex_count(); ++w)
          if (gv.has_edge(nb[i], w) && gv.has_edge(w, nb[j])) ++midpoints;
        total += 1.0 / midpoints;
      }
    return pairs == 0 ? 0.0 : total / pairs;
  };
}

struct BuiltinProfile {
  std::string name;
  std::string description;
  bool takes_predicate = false;
  std::function<ProfileFn(const std::optional<LabelPredicate>&)> make;
};

// Registry of named profiles available to the query file format.
inline const std::vector<BuiltinProfile>& builtin_profiles() {
  static const std::vector<BuiltinProfile> registry = {
      {"neighbor_label", "1 iff some neighbor satisfies the predicate", true,
       [](const std::optional<LabelPredicate>& p) {
         return profile_neighbor_label(p.value_or(LabelPredicate::any()));
       }},
      {"clustering", "fraction of adjacent neighbor pairs", false,
       [](const std::optional<LabelPredicate>&) { return profile_clustering_coefficient(); }},
      {"local_bridge", "fraction of incident edges that are local bridges", false,
       [](const std::optional<LabelPredicate>&) { return profile_local_bridge_fraction(); }},
      {"two_betweenness",
       "chance a random shortest path between nonadjacent neighbors uses the center", false,
       [](const std::optional<LabelPredicate>&) { return profile_two_betweenness(); }},
  };
  return registry;
}

inline LocalProfileQuery make_builtin_profile_query(const std::string& name,
                                                    std::optional<LabelPredicate> p = {}) {
  for (const BuiltinProfile& entry : builtin_profiles())
    if (entry.name == name) return LocalProfileQuery{name, entry.make(p)};
  throw std::invalid_argument("unknown profile: " + name);
}

}  // namespace rsdp
