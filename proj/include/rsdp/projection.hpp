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

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "rsdp/graph.hpp"
#include "rsdp/simplex.hpp"

namespace rsdp {

// Solution of the fractional degree-reduction program
//
//   minimize sum_v x_v
//   s.t.     x_v >= 0,  w_uv >= 0
//            a_uv >= w_uv >= a_uv - x_u - x_v      (a_uv = edge indicator)
//            sum_{v != u} w_uv <= k                for every u.
//
// x_v says how strongly vertex v should be stripped of its edges; w_uv says
// how much of edge {u,v} survives.
struct LpSolution {
  std::vector<double> x;  // per vertex, in [0,1]
  std::vector<double> w;  // per unordered pair (pair_index layout), in [0,1]
  double objective = 0.0;
  double tolerance = 0.0;
};

// Objective accuracy contract for solve_degree_lp.
inline constexpr double kDegreeLpTolerance = 1e-7;

inline LpSolution solve_degree_lp(const LabeledGraph& g, int k) {
  if (k < 0) throw std::invalid_argument("solve_degree_lp: k must be non-negative");
  const int n = g.vertex_count();
  const auto& edges = g.edges();
  const int e = static_cast<int>(edges.size());

  // w variables only for actual edges: for a non-edge the constraints force
  // w_uv = 0, so those variables are dropped up front.
  LpDense lp;
  lp.num_vars = n + e;
  lp.objective.assign(lp.num_vars, 0.0);
  for (int v = 0; v < n; ++v) lp.objective[v] = 1.0;

  auto add_row = [&lp](std::vector<double> row, double rhs) {
    lp.rows.push_back(std::move(row));
    lp.rhs.push_back(rhs);
  };
  std::vector<std::vector<int>> incident(n);
  for (int ei = 0; ei < e; ++ei) {
    auto [u, v] = edges[ei];
    incident[u].push_back(ei);
    incident[v].push_back(ei);
    std::vector<double> upper(lp.num_vars, 0.0);
    upper[n + ei] = 1.0;  // w_e <= 1
    add_row(std::move(upper), 1.0);
    std::vector<double> lower(lp.num_vars, 0.0);
    lower[u] = -1.0;  // w_e >= 1 - x_u - x_v
    lower[v] = -1.0;
    lower[n + ei] = -1.0;
    add_row(std::move(lower), -1.0);
  }
  for (int u = 0; u < n; ++u) {
    std::vector<double> cap(lp.num_vars, 0.0);
    for (int ei : incident[u]) cap[n + ei] = 1.0;
    add_row(std::move(cap), static_cast<double>(k));  // sum_{e at u} w_e <= k
  }

  LpResult result = simplex_minimize(lp);
  if (result.status != LpStatus::kOptimal)
    throw ComputeError(std::string("degree LP did not converge: ") + to_string(result.status));

  LpSolution solution;
  solution.objective = result.objective;
  solution.tolerance = kDegreeLpTolerance;
  solution.x.assign(result.x.begin(), result.x.begin() + n);
  solution.w.assign(pair_count(n), 0.0);
  for (int ei = 0; ei < e; ++ei)
    solution.w[pair_index(n, edges[ei].first, edges[ei].second)] = result.x[n + ei];
  return solution;
}

// Largest violation of the LP constraints by a candidate solution; 0 means
// feasible. Exposed for tests.
inline double degree_lp_violation(const LpSolution& s, const LabeledGraph& g, int k) {
  const int n = g.vertex_count();
  double worst = 0.0;
  auto note = [&worst](double v) { worst = std::max(worst, v); };
  for (int v = 0; v < n; ++v) note(-s.x[v]);
  for (int u = 0; u < n; ++u) {
    double row = 0.0;
    for (int v = 0; v < n; ++v) {
      if (v == u) continue;
      double w = s.w[pair_index(n, u, v)];
      double a = g.has_edge(u, v) ? 1.0 : 0.0;
      note(-w);
      note(w - a);
      note(a - s.x[u] - s.x[v] - w);
      row += w;
    }
    note(row - k);
  }
  double objective = 0.0;
  for (int v = 0; v < n; ++v) objective += s.x[v];
  note(std::fabs(objective - s.objective));
  return worst;
}

struct GreedyTraceStep {
  int vertex = -1;
  int edges_removed = 0;
  bool forced = false;  // removed by the degree threshold rather than by potential
};

struct ProjectionCertificate {
  std::vector<Edge> removed_edges;
  std::optional<LpSolution> lp;
  std::vector<GreedyTraceStep> greedy_trace;
  std::optional<int> greedy_guess;
};

struct ProjectionOutcome {
  LabeledGraph graph;
  double d_hat = 0.0;
  int target_bound = 0;  // guaranteed max degree of `graph`
  ProjectionCertificate certificate;
};

// Keep, at every vertex, only the first k incident edges in the canonical
// (lexicographic) edge order; an edge survives only if it is kept at both
// endpoints. Identity on graphs of max degree <= k, and 3-smooth under edge
// adjacency.
inline ProjectionOutcome project_edge(const LabeledGraph& g, int k) {
  if (k < 0) throw std::invalid_argument("project_edge: k must be non-negative");
  const int n = g.vertex_count();
  std::vector<int> rank_count(n, 0);
  std::vector<Edge> removed;
  // edges() is already in canonical order, so a single sweep assigns ranks.
  for (const Edge& e : g.edges()) {
    int ru = ++rank_count[e.first];
    int rv = ++rank_count[e.second];
    if (ru > k || rv > k) removed.push_back(e);
  }
  ProjectionOutcome outcome{g.without_edges(removed), static_cast<double>(removed.size()), k, {}};
  outcome.certificate.removed_edges = std::move(removed);
  return outcome;
}

// LP rounding: drop every edge with an endpoint whose optimal x is >= 1/4.
// The result has max degree <= 2k and the estimate 4 * (LP objective) is a
// 4-smooth upper bound on the distance to the result.
inline ProjectionOutcome project_vertex_lp(const LabeledGraph& g, int k) {
  LpSolution lp = solve_degree_lp(g, k);
  const int n = g.vertex_count();
  std::vector<char> strip(n, 0);
  for (int v = 0; v < n; ++v) {
    double x = std::min(1.0, std::max(0.0, lp.x[v]));
    strip[v] = x >= 0.25 ? 1 : 0;
  }
  std::vector<Edge> removed;
  for (const Edge& e : g.edges())
    if (strip[e.first] || strip[e.second]) removed.push_back(e);
  ProjectionOutcome outcome{g.without_edges(removed), std::max(0.0, 4.0 * lp.objective), 2 * k, {}};
  outcome.certificate.removed_edges = std::move(removed);
  outcome.certificate.lp = std::move(lp);
  return outcome;
}

namespace detail {

// Potential: how far the degree sequence exceeds the cap k in total.
inline long long degree_potential(const std::vector<int>& degree, int k) {
  long long total = 0;
  for (int d : degree)
    if (d >= k) total += d - k;
  return total;
}

// Potential drop from clearing v's edges: v's own excess plus one unit for
// each neighbor currently above the cap.
inline long long potential_drop(const LabeledGraph& g, const std::vector<char>& gone,
                                const std::vector<int>& degree, int k, int v) {
  if (gone[v]) return 0;
  long long drop = degree[v] >= k ? degree[v] - k : 0;
  for (int u : g.neighbors(v))
    if (!gone[u] && degree[u] > k) ++drop;
  return drop;
}

}  // namespace detail

// Guess-and-verify greedy projection into max degree <= k. For each guessed
// distance d the vertices that would still exceed the cap after d deletions
// are cleared first, then the vertex with the largest potential drop is
// cleared until the potential hits zero. The first guess whose total
// clearings fit the budget d*ln(2d^2 + dk + d) + d is accepted.
inline ProjectionOutcome project_greedy(const LabeledGraph& g, int k) {
  if (k < 0) throw std::invalid_argument("project_greedy: k must be non-negative");
  const int n = g.vertex_count();

  std::vector<GreedyTraceStep> accepted_trace;
  int accepted_guess = 0;
  for (int guess = 1; guess <= std::max(1, n); ++guess) {
    std::vector<char> gone(n, 0);
    std::vector<int> degree(n);
    for (int v = 0; v < n; ++v) degree[v] = g.degree(v);
    std::vector<GreedyTraceStep> trace;

    auto clear_vertex = [&](int v, bool forced) {
      trace.push_back({v, degree[v], forced});
      for (int u : g.neighbors(v))
        if (!gone[u]) --degree[u];
      degree[v] = 0;
      gone[v] = 1;
    };

    // Forced clears go by degree in the input graph: such a vertex would
    // still exceed the cap after `guess` other deletions.
    for (int v = 0; v < n; ++v)
      if (g.degree(v) >= k + guess + 1) clear_vertex(v, /*forced=*/true);

    while (detail::degree_potential(degree, k) > 0) {
      int pick = -1;
      long long best = -1;
      for (int v = 0; v < n; ++v) {
        long long drop = detail::potential_drop(g, gone, degree, k, v);
        if (drop > best) {
          best = drop;
          pick = v;
        }
      }
      clear_vertex(pick, /*forced=*/false);
    }

    double d = guess;
    double budget = d * std::log(2 * d * d + d * k + d) + d;
    if (static_cast<double>(trace.size()) <= budget || guess >= n) {
      accepted_trace = std::move(trace);
      accepted_guess = guess;
      break;
    }
  }

  std::vector<Edge> removed;
  {
    std::vector<char> cleared(n, 0);
    for (const GreedyTraceStep& step : accepted_trace) cleared[step.vertex] = 1;
    for (const Edge& e : g.edges())
      if (cleared[e.first] || cleared[e.second]) removed.push_back(e);
  }
  ProjectionOutcome outcome{g.without_edges(removed), static_cast<double>(accepted_trace.size()),
                            k, {}};
  outcome.certificate.removed_edges = std::move(removed);
  outcome.certificate.greedy_trace = std::move(accepted_trace);
  outcome.certificate.greedy_guess = accepted_guess;
  return outcome;
}

}  // namespace rsdp
