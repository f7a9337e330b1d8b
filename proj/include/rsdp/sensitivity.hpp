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
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "rsdp/graph.hpp"
#include "rsdp/query.hpp"

namespace rsdp {

enum class SensitivityKind {
  kRestrictedBound,
  kRestrictedExact,
  kLocalExact,
  kGlobalExact,
  kSmoothExact,
  kSmoothUpper,
};

inline const char* to_string(SensitivityKind k) {
  switch (k) {
    case SensitivityKind::kRestrictedBound: return "restricted_bound";
    case SensitivityKind::kRestrictedExact: return "restricted_exact";
    case SensitivityKind::kLocalExact: return "local_exact";
    case SensitivityKind::kGlobalExact: return "global_exact";
    case SensitivityKind::kSmoothExact: return "smooth_exact";
    default: return "smooth_upper";
  }
}

struct SensitivityReport {
  double value = 0.0;
  SensitivityKind kind = SensitivityKind::kRestrictedBound;
  std::string provenance;
};

// Worst change of a local profile query between two max-degree-<=k graphs,
// per unit distance: a one-vertex change can touch the profiles of the
// vertex, its old neighbors and (vertex model only) its new neighbors.
inline SensitivityReport rs_bound_local_profile(int k, AdjacencyModel model) {
  if (k < 0) throw std::invalid_argument("rs_bound_local_profile: k must be non-negative");
  double value = model == AdjacencyModel::kEdge ? k + 1.0 : 2.0 * k + 1.0;
  std::string provenance = model == AdjacencyModel::kEdge
                               ? "analytic bound k+1 (edge adjacency, local profile)"
                               : "analytic bound 2k+1 (vertex adjacency, local profile)";
  return {value, SensitivityKind::kRestrictedBound, provenance};
}

// Every pattern copy gained or lost by a one-vertex change contains that
// vertex, and a connected t-pattern grows from it with at most k choices per
// further vertex: at most t * k^(t-1) copies per step, in both models.
inline SensitivityReport rs_bound_subgraph(int t, int k) {
  if (t < 1) throw std::invalid_argument("rs_bound_subgraph: t must be at least 1");
  if (k < 0) throw std::invalid_argument("rs_bound_subgraph: k must be non-negative");
  double value = t * std::pow(static_cast<double>(k), t - 1);
  return {value, SensitivityKind::kRestrictedBound,
          "analytic bound t*k^(t-1) (subgraph counting, t=" + std::to_string(t) + ")"};
}

inline SensitivityReport rs_bound_for_query(const Query& q, int k, AdjacencyModel model) {
  if (const auto* sub = std::get_if<SubgraphCountingQuery>(&q))
    return rs_bound_subgraph(sub->pattern.vertex_count(), k);
  return rs_bound_local_profile(k, model);
}

// Parameters of the smooth upper bound built from a c-smooth distance
// estimator: S(d_hat) = max over integers d >= d_hat of
// exp(-(beta/c)(d - d_hat)) * (2d + c + 1) * rs.
struct SmoothBoundParams {
  double beta = 0.0;   // smoothing rate, > 0
  double c = 0.0;      // estimator smoothness constant, > 0
  double rs = 0.0;     // restricted sensitivity over the relaxed class
  double d_hat = 0.0;  // distance estimate, >= 0
};

inline double smooth_upper_bound(const SmoothBoundParams& p) {
  if (p.beta <= 0) throw std::invalid_argument("smooth_upper_bound: beta must be positive");
  if (p.c <= 0) throw std::invalid_argument("smooth_upper_bound: c must be positive");
  if (p.rs < 0 || p.d_hat < 0)
    throw std::invalid_argument("smooth_upper_bound: rs and d_hat must be non-negative");
  const double rate = p.beta / p.c;
  auto term = [&](double d) { return std::exp(-rate * (d - p.d_hat)) * (2 * d + p.c + 1); };
  // The summand is unimodal in d with real peak at x0, so the integer maximum
  // sits at the first admissible integer or next to x0.
  double first = std::ceil(p.d_hat);
  double x0 = p.c / p.beta - (p.c + 1) / 2;
  double best = term(first);
  for (double candidate :
       {std::floor(x0) - 1, std::floor(x0), std::ceil(x0), std::ceil(x0) + 1, first + 1})
    if (candidate >= first) best = std::max(best, term(candidate));
  return best * p.rs;
}

// Envelope factor g(x) at x = beta/c: the real-valued maximum of
// exp(-x t) * (2t + c + 1) over t >= 0, up to the exp(x * d_hat) prefactor.
inline double g_envelope(double beta, double c) {
  if (beta <= 0 || c <= 0)
    throw std::invalid_argument("g_envelope: beta and c must be positive");
  double x = beta / c;
  if (x > 2.0 / (c + 1)) return c + 1;
  return (2.0 / x) * std::exp(-1.0 + (c + 1) * x / 2.0);
}

// Exact restricted sensitivity over an enumerated dataset list: the largest
// |f(i) - f(j)| / d(i, j) over member pairs. Zero when fewer than two members.
inline double restricted_sensitivity_over(const std::vector<double>& f,
                                          const std::vector<char>& member,
                                          const DistanceMatrix& dist) {
  const int n = dist.size();
  if (static_cast<int>(f.size()) != n || static_cast<int>(member.size()) != n)
    throw std::invalid_argument("restricted_sensitivity_over: arity mismatch");
  double best = 0.0;
  for (int i = 0; i < n; ++i) {
    if (!member[i]) continue;
    for (int j = i + 1; j < n; ++j) {
      if (!member[j]) continue;
      int d = dist.at(i, j);
      if (d > 0) best = std::max(best, std::fabs(f[i] - f[j]) / d);
    }
  }
  return best;
}

inline SensitivityReport restricted_sensitivity_exact(const std::vector<double>& f,
                                                      const std::vector<char>& member,
                                                      const DistanceMatrix& dist,
                                                      const std::string& context = "") {
  double value = restricted_sensitivity_over(f, member, dist);
  return {value, SensitivityKind::kRestrictedExact,
          "exhaustive member-pair scan" + (context.empty() ? "" : " (" + context + ")")};
}

// Extends f from the member set to the whole enumerated universe so that the
// extension's global sensitivity equals the restricted sensitivity of f over
// the members. Non-members are filled in ascending (distance to the member
// set, index) order; each value is the midpoint of the interval every
// already-valued dataset allows, which a metric distance guarantees to be
// nonempty.
inline std::vector<double> construct_f_h(const std::vector<double>& f,
                                         const std::vector<char>& member,
                                         const DistanceMatrix& dist) {
  const int n = dist.size();
  if (static_cast<int>(f.size()) != n || static_cast<int>(member.size()) != n)
    throw std::invalid_argument("construct_f_h: arity mismatch");
  std::vector<int> members, outsiders;
  for (int i = 0; i < n; ++i) (member[i] ? members : outsiders).push_back(i);
  if (members.empty()) throw std::invalid_argument("construct_f_h: member set is empty");

  const double delta = restricted_sensitivity_over(f, member, dist);

  std::vector<int> dist_to_members(n, 0);
  for (int i : outsiders) {
    int best = dist.at(i, members[0]);
    for (int j : members) best = std::min<int>(best, dist.at(i, j));
    dist_to_members[i] = best;
  }
  std::sort(outsiders.begin(), outsiders.end(), [&](int a, int b) {
    return std::pair(dist_to_members[a], a) < std::pair(dist_to_members[b], b);
  });

  std::vector<double> values = f;
  std::vector<int> placed = members;
  for (int next : outsiders) {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (int j : placed) {
      double radius = delta * dist.at(next, j);
      lo = std::max(lo, values[j] - radius);
      hi = std::min(hi, values[j] + radius);
    }
    if (lo > hi + 1e-9)
      throw ComputeError("construct_f_h: empty interval at dataset " + std::to_string(next) +
                         "; the distance matrix is not a metric");
    values[next] = (lo + hi) / 2;
    placed.push_back(next);
  }
  return values;
}

}  // namespace rsdp
