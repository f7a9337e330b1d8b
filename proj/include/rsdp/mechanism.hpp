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
#include <mutex>
#include <random>
#include <string>

#include "rsdp/graph.hpp"
#include "rsdp/projection.hpp"
#include "rsdp/query.hpp"
#include "rsdp/rng.hpp"
#include "rsdp/sensitivity.hpp"

namespace rsdp {

struct PrivacyParams {
  double epsilon = 1.0;
  double delta = 0.0;  // must be positive for the vertex mechanism
  std::uint64_t seed = 0;
};

enum class Mechanism { kEdge, kVertex };

inline const char* to_string(Mechanism m) {
  return m == Mechanism::kEdge ? "edge" : "vertex";
}

// Inverse-CDF Laplace draw: u uniform in (-1/2, 1/2), result
// -scale * sign(u) * ln(1 - 2|u|).
inline double laplace_sample(double scale, std::mt19937_64& rng) {
  if (scale <= 0) throw std::invalid_argument("laplace_sample: scale must be positive");
  double u = uniform_open01(rng) - 0.5;
  double sign = u > 0 ? 1.0 : (u < 0 ? -1.0 : 0.0);
  return -scale * sign * std::log1p(-2 * std::fabs(u));
}

// Smoothing rate for (epsilon, delta)-privacy via a smooth sensitivity bound.
inline double smooth_beta(double epsilon, double delta) {
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  if (delta <= 0 || delta >= 1)
    throw std::invalid_argument(
        "delta must lie in (0,1): the smoothing rate beta = epsilon / (2 ln(1/delta)) "
        "is undefined otherwise");
  return epsilon / (2 * std::log(1.0 / delta));
}

// A released answer. Only noisy_value and the public parameters are part of
// the private interface; the projected value and the distance estimate stay
// behind MechanismTestAccess, which the answer-emitting paths never use (the
// estimate is itself data-dependent).
class MechanismAnswer {
 public:
  MechanismAnswer(double noisy, double projected, double noise_scale, Mechanism mechanism,
                  PrivacyParams params, int k, double d_hat)
      : noisy_value_(noisy),
        noise_scale_(noise_scale),
        mechanism_(mechanism),
        params_(params),
        k_(k),
        true_projected_value_(projected),
        d_hat_(d_hat) {}

  double noisy_value() const { return noisy_value_; }
  double noise_scale() const { return noise_scale_; }
  Mechanism mechanism() const { return mechanism_; }
  const PrivacyParams& params() const { return params_; }
  int degree_bound() const { return k_; }

 private:
  friend struct MechanismTestAccess;
  double noisy_value_;
  double noise_scale_;
  Mechanism mechanism_;
  PrivacyParams params_;
  int k_;
  double true_projected_value_;
  double d_hat_;
};

struct MechanismTestAccess {
  static double true_projected_value(const MechanismAnswer& a) { return a.true_projected_value_; }
  static double d_hat(const MechanismAnswer& a) { return a.d_hat_; }
};

namespace detail {

inline void check_common_params(const PrivacyParams& p) {
  if (p.epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  if (p.delta < 0 || p.delta >= 1) throw std::invalid_argument("delta must lie in [0,1)");
}

// A restricted sensitivity of zero means the projected query is globally
// constant, so releasing it exactly is private; no noise is drawn then.
inline double noisy(double value, double scale, std::uint64_t seed) {
  if (scale == 0) return value;
  std::mt19937_64 rng(seed);
  return value + laplace_sample(scale, rng);
}

}  // namespace detail

// Parameter validation shared with callers that must reject a request before
// doing anything else (the CLI checks this ahead of debiting a budget).
inline void validate_mechanism_params(Mechanism mechanism, const PrivacyParams& params) {
  detail::check_common_params(params);
  if (mechanism == Mechanism::kVertex) smooth_beta(params.epsilon, params.delta);
}

// (epsilon, 0)-private answer under edge adjacency: evaluate on the canonical
// degree-capped projection and add Laplace(3 RS / epsilon) noise, with RS the
// analytic restricted-sensitivity bound for the query class (never the
// data-dependent exact value).
inline MechanismAnswer answer_edge_dp(const Query& q, const LabeledGraph& g, int k,
                                      const PrivacyParams& params) {
  detail::check_common_params(params);
  ProjectionOutcome projection = project_edge(g, k);
  double value = evaluate(q, projection.graph);
  double rs = rs_bound_for_query(q, k, AdjacencyModel::kEdge).value;
  double scale = 3.0 * rs / params.epsilon;
  return MechanismAnswer(detail::noisy(value, scale, params.seed), value, scale, Mechanism::kEdge,
                         params, k, projection.d_hat);
}

// (epsilon, delta)-private answer under vertex adjacency: evaluate on the LP
// projection and calibrate noise to the smooth upper bound built from the
// 4-smooth distance estimate and the restricted sensitivity over the doubled
// degree cap.
inline MechanismAnswer answer_vertex_dp(const Query& q, const LabeledGraph& g, int k,
                                        const PrivacyParams& params) {
  detail::check_common_params(params);
  double beta = smooth_beta(params.epsilon, params.delta);
  ProjectionOutcome projection = project_vertex_lp(g, k);
  double value = evaluate(q, projection.graph);
  double rs = rs_bound_for_query(q, 2 * k, AdjacencyModel::kVertex).value;
  double bound = rs == 0 ? 0.0
                         : smooth_upper_bound({beta, /*c=*/4.0, rs, projection.d_hat});
  double scale = 2.0 * bound / params.epsilon;
  return MechanismAnswer(detail::noisy(value, scale, params.seed), value, scale,
                         Mechanism::kVertex, params, k, projection.d_hat);
}

// Radius within which the mechanism's answer lands with probability >= 2/3
// for datasets already inside the hypothesis (estimate zero), using the
// two-sided Laplace tail: r = scale * ln 3.
inline double utility_radius(const Query& q, int k, const PrivacyParams& params,
                             AdjacencyModel model) {
  detail::check_common_params(params);
  double scale = 0.0;
  if (model == AdjacencyModel::kEdge) {
    scale = 3.0 * rs_bound_for_query(q, k, AdjacencyModel::kEdge).value / params.epsilon;
  } else {
    double beta = smooth_beta(params.epsilon, params.delta);
    double rs = rs_bound_for_query(q, 2 * k, AdjacencyModel::kVertex).value;
    scale = rs == 0 ? 0.0
                    : 2.0 * smooth_upper_bound({beta, 4.0, rs, 0.0}) / params.epsilon;
  }
  return scale * std::log(3.0);
}

struct PrivacyBudget {
  double epsilon = 0.0;
  double delta = 0.0;
};

// Sequential-composition accountant: epsilon and delta add across answers on
// the same dataset. Spends are atomic check-and-debit.
class BudgetLedger {
 public:
  explicit BudgetLedger(PrivacyBudget limit, PrivacyBudget already_spent = {})
      : limit_(limit), spent_(already_spent) {}

  void spend(double epsilon, double delta) {
    if (epsilon < 0 || delta < 0) throw std::invalid_argument("negative budget spend");
    std::lock_guard<std::mutex> lock(mu_);
    constexpr double kSlack = 1e-12;
    if (spent_.epsilon + epsilon > limit_.epsilon + kSlack ||
        spent_.delta + delta > limit_.delta + kSlack)
      throw BudgetExhaustedError(
          "privacy budget exhausted: spent (" + std::to_string(spent_.epsilon) + ", " +
          std::to_string(spent_.delta) + ") of (" + std::to_string(limit_.epsilon) + ", " +
          std::to_string(limit_.delta) + "), request (" + std::to_string(epsilon) + ", " +
          std::to_string(delta) + ")");
    spent_.epsilon += epsilon;
    spent_.delta += delta;
  }

  PrivacyBudget spent() const {
    std::lock_guard<std::mutex> lock(mu_);
    return spent_;
  }
  PrivacyBudget limit() const { return limit_; }

 private:
  PrivacyBudget limit_;
  PrivacyBudget spent_;
  mutable std::mutex mu_;
};

}  // namespace rsdp
