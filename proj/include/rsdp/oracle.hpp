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
#include <cstdint>
#include <functional>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include "rsdp/graph.hpp"
#include "rsdp/projection.hpp"
#include "rsdp/query.hpp"
#include "rsdp/sensitivity.hpp"

namespace rsdp {

// Every labeled graph on n vertices with one attribute per vertex drawn from
// {0..alphabet-1}, together with exact pairwise distance matrices for both
// adjacency models. Dataset index = edge_mask * alphabet^n + label_code,
// where edge bit i stands for the i-th pair in canonical order and label
// digit v (base alphabet, vertex 0 least significant) is vertex v's label.
class Universe {
 public:
  int vertex_count() const { return n_; }
  int alphabet() const { return alphabet_; }
  int size() const { return static_cast<int>(datasets_.size()); }
  const LabeledGraph& dataset(int i) const { return datasets_.at(i); }
  const std::vector<LabeledGraph>& datasets() const { return datasets_; }

  const DistanceMatrix& distances(AdjacencyModel m) const {
    return m == AdjacencyModel::kEdge ? edge_dist_ : vertex_dist_;
  }
  int distance(AdjacencyModel m, int i, int j) const { return distances(m).at(i, j); }

  int index_of(const LabeledGraph& g) const {
    if (g.vertex_count() != n_ || g.label_dim() != 1)
      throw std::invalid_argument("dataset not in universe: wrong shape");
    std::uint32_t edge_mask = 0;
    for (const Edge& e : g.edges()) edge_mask |= 1u << pair_index(n_, e.first, e.second);
    int label_code = 0;
    for (int v = n_ - 1; v >= 0; --v) {
      int value = g.labels(v)[0];
      if (value < 0 || value >= alphabet_)
        throw std::invalid_argument("dataset not in universe: label out of alphabet");
      label_code = label_code * alphabet_ + value;
    }
    return static_cast<int>(edge_mask) * labelings_ + label_code;
  }

  std::vector<char> members(Hypothesis h) const {
    std::vector<char> flags(size());
    for (int i = 0; i < size(); ++i) flags[i] = in_hypothesis(datasets_[i], h) ? 1 : 0;
    return flags;
  }

  friend Universe enumerate_universe(int n, int alphabet);

 private:
  int n_ = 0;
  int alphabet_ = 1;
  int labelings_ = 1;
  std::vector<LabeledGraph> datasets_;
  DistanceMatrix edge_dist_;
  DistanceMatrix vertex_dist_;
};

inline Universe enumerate_universe(int n, int alphabet) {
  if (n < 1 || n > 4) throw ComputeError("enumerate_universe: n must be in 1..4");
  if (alphabet < 1 || alphabet > 2) throw ComputeError("enumerate_universe: alphabet must be 1 or 2");
  const int pairs = pair_count(n);
  const int edge_masks = 1 << pairs;
  int labelings = 1;
  for (int v = 0; v < n; ++v) labelings *= alphabet;
  const int total = edge_masks * labelings;
  if (total > 1024) throw ComputeError("enumerate_universe: universe exceeds 1024 datasets");

  Universe u;
  u.n_ = n;
  u.alphabet_ = alphabet;
  u.labelings_ = labelings;
  u.datasets_.reserve(total);

  std::vector<Edge> pair_list;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pair_list.emplace_back(a, b);

  std::vector<std::vector<int>> label_rows(labelings);
  for (int code = 0; code < labelings; ++code) {
    label_rows[code].resize(n);
    int rest = code;
    for (int v = 0; v < n; ++v) {
      label_rows[code][v] = rest % alphabet;
      rest /= alphabet;
    }
  }

  for (int mask = 0; mask < edge_masks; ++mask) {
    std::vector<Edge> edges;
    for (int b = 0; b < pairs; ++b)
      if (mask >> b & 1) edges.push_back(pair_list[b]);
    for (int code = 0; code < labelings; ++code) {
      std::vector<std::vector<int>> labels(n);
      for (int v = 0; v < n; ++v) labels[v] = {label_rows[code][v]};
      u.datasets_.emplace_back(n, edges, std::move(labels));
    }
  }

  // Per-vertex-set incidence masks and an exact vertex-cover table over edge
  // masks make each pairwise distance O(1).
  std::vector<std::uint32_t> touch(1 << n, 0);
  for (int vs = 0; vs < (1 << n); ++vs)
    for (int b = 0; b < pairs; ++b)
      if ((vs >> pair_list[b].first & 1) || (vs >> pair_list[b].second & 1)) touch[vs] |= 1u << b;
  std::vector<std::uint8_t> vc(edge_masks, 0);
  for (int mask = 1; mask < edge_masks; ++mask) {
    std::vector<Edge> edges;
    for (int b = 0; b < pairs; ++b)
      if (mask >> b & 1) edges.push_back(pair_list[b]);
    vc[mask] = static_cast<std::uint8_t>(min_vertex_cover_size(edges, /*edge_cap=*/pairs));
  }

  u.edge_dist_ = DistanceMatrix(total);
  u.vertex_dist_ = DistanceMatrix(total);
  for (int i = 0; i < total; ++i) {
    const int mask_i = i / labelings;
    const auto& labels_i = label_rows[i % labelings];
    for (int j = i; j < total; ++j) {
      const int mask_j = j / labelings;
      const auto& labels_j = label_rows[j % labelings];
      int relabeled_mask = 0;
      for (int v = 0; v < n; ++v)
        if (labels_i[v] != labels_j[v]) relabeled_mask |= 1 << v;
      const int relabeled = std::popcount(static_cast<unsigned>(relabeled_mask));
      const std::uint32_t diff = static_cast<std::uint32_t>(mask_i ^ mask_j);
      u.edge_dist_.set(i, j,
                       static_cast<std::uint16_t>(relabeled + std::popcount(diff)));
      u.vertex_dist_.set(i, j,
                         static_cast<std::uint16_t>(relabeled + vc[diff & ~touch[relabeled_mask]]));
    }
  }
  return u;
}

inline std::vector<double> map_universe(const Universe& u,
                                        const std::function<double(const LabeledGraph&)>& f) {
  std::vector<double> values(u.size());
  for (int i = 0; i < u.size(); ++i) values[i] = f(u.dataset(i));
  return values;
}

inline std::vector<double> evaluate_on_universe(const Query& q, const Universe& u) {
  return map_universe(u, [&q](const LabeledGraph& g) { return evaluate(q, g); });
}

// Largest one-step change of f at dataset `idx`.
inline double local_sensitivity_exact(const std::vector<double>& f, int idx, AdjacencyModel model,
                                      const Universe& u) {
  if (idx < 0 || idx >= u.size())
    throw std::invalid_argument("local_sensitivity_exact: dataset not in universe");
  const DistanceMatrix& dist = u.distances(model);
  double best = 0.0;
  for (int j = 0; j < u.size(); ++j)
    if (dist.at(idx, j) == 1) best = std::max(best, std::fabs(f[idx] - f[j]));
  return best;
}

inline double local_sensitivity_exact(const Query& q, const LabeledGraph& g, AdjacencyModel model,
                                      const Universe& u) {
  return local_sensitivity_exact(evaluate_on_universe(q, u), u.index_of(g), model, u);
}

inline double global_sensitivity_exact(const std::vector<double>& f, AdjacencyModel model,
                                       const Universe& u) {
  double best = 0.0;
  for (int i = 0; i < u.size(); ++i)
    best = std::max(best, local_sensitivity_exact(f, i, model, u));
  return best;
}

// Optimal beta-smooth upper bound on local sensitivity, computed exactly:
// S*(i) = max_j exp(-beta d(i,j)) LS(j).
inline std::vector<double> smooth_sensitivity_exact(const std::vector<double>& f, double beta,
                                                    AdjacencyModel model, const Universe& u) {
  if (beta < 0) throw std::invalid_argument("smooth_sensitivity_exact: beta must be >= 0");
  const int total = u.size();
  std::vector<double> local(total);
  for (int i = 0; i < total; ++i) local[i] = local_sensitivity_exact(f, i, model, u);
  const DistanceMatrix& dist = u.distances(model);
  std::vector<double> smooth(total, 0.0);
  for (int i = 0; i < total; ++i)
    for (int j = 0; j < total; ++j)
      smooth[i] = std::max(smooth[i], std::exp(-beta * dist.at(i, j)) * local[j]);
  return smooth;
}

struct NamedQuery {
  std::string id;
  Query query;
};

// Query set exercised by the verification suite: one subgraph query per small
// pattern (with and without an attribute filter) and every built-in profile.
inline std::vector<NamedQuery> default_verification_queries() {
  LabelPredicate spy = LabelPredicate::dim_in(0, {1});
  std::vector<NamedQuery> queries;
  queries.push_back({"edge_count", make_subgraph_query(2, {{0, 1}}, {LabelPredicate::any(),
                                                                     LabelPredicate::any()})});
  queries.push_back({"triangle", make_subgraph_query(3, {{0, 1}, {0, 2}, {1, 2}},
                                                     {LabelPredicate::any(), LabelPredicate::any(),
                                                      LabelPredicate::any()})});
  queries.push_back({"triangle_spy", make_subgraph_query(3, {{0, 1}, {0, 2}, {1, 2}},
                                                         {spy, LabelPredicate::any(),
                                                          LabelPredicate::any()})});
  queries.push_back({"path2", make_subgraph_query(3, {{0, 1}, {1, 2}},
                                                  {LabelPredicate::any(), LabelPredicate::any(),
                                                   LabelPredicate::any()})});
  queries.push_back({"spy_neighbor", make_builtin_profile_query("neighbor_label", spy)});
  queries.push_back({"clustering", make_builtin_profile_query("clustering")});
  queries.push_back({"local_bridge", make_builtin_profile_query("local_bridge")});
  queries.push_back({"two_betweenness", make_builtin_profile_query("two_betweenness")});
  return queries;
}

struct VerifyCheck {
  std::string name;
  bool pass = false;
  double lhs = 0.0;  // measured quantity
  double rhs = 0.0;  // bound it is compared against
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_pass() const {
    for (const VerifyCheck& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void print_table(std::ostream& out) const {
    for (const VerifyCheck& c : checks)
      out << (c.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(56) << c.name << ' '
          << std::setprecision(10) << c.lhs << (c.pass ? " <= " : " vs ") << c.rhs
          << (c.detail.empty() ? "" : "  [" + c.detail + "]") << '\n';
    out << (all_pass() ? "all checks passed" : "SOME CHECKS FAILED") << " (" << checks.size()
        << " checks)\n";
  }
};

// Re-derives every analytic guarantee on an enumerated universe: restricted
// sensitivity bounds per query, the smooth-vs-restricted gap direction, the
// general extension's global sensitivity, and the smoothness of all three
// projections.
inline VerifyReport verify_bounds(const Universe& u, const std::vector<NamedQuery>& queries,
                                  const std::vector<int>& ks, double beta = 0.5) {
  VerifyReport report;
  auto add = [&report](const std::string& name, double lhs, double rhs, bool pass,
                       std::string detail = "") {
    report.checks.push_back({name, pass, lhs, rhs, std::move(detail)});
  };
  auto le = [&add](const std::string& name, double lhs, double rhs, double tol = 1e-9) {
    add(name, lhs, rhs, lhs <= rhs + tol);
  };

  const int total = u.size();
  const DistanceMatrix& ed = u.distances(AdjacencyModel::kEdge);
  const DistanceMatrix& vd = u.distances(AdjacencyModel::kVertex);

  for (int k : ks) {
    const std::string kk = " k=" + std::to_string(k);
    std::vector<char> member = u.members(Hypothesis{k});

    // Projection smoothness and identity, independent of queries.
    std::vector<ProjectionOutcome> edge_proj, lp_proj, greedy_proj;
    edge_proj.reserve(total);
    lp_proj.reserve(total);
    greedy_proj.reserve(total);
    for (int i = 0; i < total; ++i) {
      edge_proj.push_back(project_edge(u.dataset(i), k));
      lp_proj.push_back(project_vertex_lp(u.dataset(i), k));
      greedy_proj.push_back(project_greedy(u.dataset(i), k));
    }

    double worst_pair = 0;
    for (int i = 0; i < total; ++i)
      for (int j = i + 1; j < total; ++j)
        if (ed.at(i, j) == 1)
          worst_pair = std::max(
              worst_pair,
              static_cast<double>(edge_distance(edge_proj[i].graph, edge_proj[j].graph)));
    le("edge projection 3-smooth" + kk, worst_pair, 3.0);

    double worst_degree = 0, worst_member_dhat = 0, worst_soundness = 0, worst_estimator = 0,
           worst_identity = 0, worst_greedy_degree = 0;
    for (int i = 0; i < total; ++i) {
      worst_degree = std::max(worst_degree, static_cast<double>(max_degree(lp_proj[i].graph)));
      worst_greedy_degree =
          std::max(worst_greedy_degree, static_cast<double>(max_degree(greedy_proj[i].graph)));
      double to_output = vertex_distance(u.dataset(i), lp_proj[i].graph);
      worst_soundness = std::max(worst_soundness, to_output - lp_proj[i].d_hat);
      if (member[i]) {
        worst_member_dhat = std::max({worst_member_dhat, lp_proj[i].d_hat, greedy_proj[i].d_hat,
                                      edge_proj[i].d_hat});
        if (edge_proj[i].graph != u.dataset(i) || lp_proj[i].graph != u.dataset(i) ||
            greedy_proj[i].graph != u.dataset(i))
          worst_identity = 1;
      }
    }
    le("lp projection degree cap 2k" + kk, worst_degree, 2.0 * k);
    le("greedy projection inside hypothesis" + kk, worst_greedy_degree, static_cast<double>(k));
    le("estimate zero on hypothesis" + kk, worst_member_dhat, 0.0, 1e-6);
    le("estimate covers removal distance" + kk, worst_soundness, 0.0, 1e-6);
    add("projections fix hypothesis members" + kk, worst_identity, 0.0, worst_identity == 0);
    for (int i = 0; i < total; ++i)
      for (int j = i + 1; j < total; ++j)
        if (vd.at(i, j) == 1)
          worst_estimator =
              std::max(worst_estimator, std::fabs(lp_proj[i].d_hat - lp_proj[j].d_hat));
    le("estimate 4-smooth across neighbors" + kk, worst_estimator, 4.0, 1e-5);

    for (const NamedQuery& nq : queries) {
      const std::string tag = nq.id + kk;
      std::vector<double> f = evaluate_on_universe(nq.query, u);

      double rs_edge = restricted_sensitivity_over(f, member, ed);
      double rs_vertex = restricted_sensitivity_over(f, member, vd);
      le("restricted within bound (edge) " + tag, rs_edge,
         rs_bound_for_query(nq.query, k, AdjacencyModel::kEdge).value);
      le("restricted within bound (vertex) " + tag, rs_vertex,
         rs_bound_for_query(nq.query, k, AdjacencyModel::kVertex).value);

      std::vector<double> smooth = smooth_sensitivity_exact(f, beta, AdjacencyModel::kVertex, u);
      double smooth_worst = 0.0;
      for (int i = 0; i < total; ++i)
        if (member[i]) smooth_worst = std::max(smooth_worst, smooth[i]);
      add("smooth at least restricted (vertex) " + tag, smooth_worst, rs_vertex,
          smooth_worst >= rs_vertex - 1e-9, "gap direction");

      std::vector<double> extension = construct_f_h(f, member, ed);
      double on_members = 0.0;
      for (int i = 0; i < total; ++i)
        if (member[i]) on_members = std::max(on_members, std::fabs(extension[i] - f[i]));
      le("extension agrees on members " + tag, on_members, 0.0, 0.0);
      double gs = global_sensitivity_exact(extension, AdjacencyModel::kEdge, u);
      add("extension global = restricted " + tag, gs, rs_edge, std::fabs(gs - rs_edge) <= 1e-9);
    }
  }
  return report;
}

}  // namespace rsdp
