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
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "rsdp/generators.hpp"
#include "rsdp/mechanism.hpp"
#include "rsdp/oracle.hpp"
#include "rsdp/sensitivity.hpp"

namespace rsdp {

// One gap-table run: compare the analytic restricted-sensitivity bound (and,
// at oracle scale, the exact restricted and worst-case smooth sensitivities)
// against the noise scales both mechanisms would actually use on a concrete
// graph from the chosen family.
struct ExperimentConfig {
  std::string family = "star";
  int n = 4;
  double prob = 0.5;  // uniform_random
  int attach = 2;     // preferential_attachment
  int left = 1;       // complete_bipartite
  int k = 1;
  NamedQuery query;
  double epsilon = 1.0;
  double delta = std::exp(-2.0);
  int trials = 100;
  std::uint64_t seed = 0;
  bool exact = false;  // add oracle columns (requires n <= 4)
};

struct GapRow {
  std::string query_id;
  std::string model;
  int k = 0;
  int n = 0;
  std::string family;
  double epsilon = 0.0;
  double delta = 0.0;
  int trials = 0;
  double rs_bound = 0.0;
  std::optional<double> rs_exact;
  std::optional<double> smooth_worst_exact;  // max over hypothesis members
  std::optional<double> smooth_lower_bound;  // exp(-2 beta) (n - 2), vertex model
  double noise_scale = 0.0;
  double mean_abs_error = 0.0;
};

inline std::vector<GapRow> run_gap_experiment(const ExperimentConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("experiment needs at least one trial");
  LabeledGraph base = generate_family(cfg.family, cfg.n, cfg.prob, cfg.attach, cfg.left, cfg.seed);
  std::mt19937_64 label_rng(cfg.seed ^ 0x9e3779b97f4a7c15ull);
  LabeledGraph g = with_random_labels(base, 2, label_rng);

  std::optional<Universe> universe;
  if (cfg.exact) universe = enumerate_universe(cfg.n, 2);

  // The closed-form smooth-sensitivity floor exp(-2 beta)(n-2) is a statement
  // about unrestricted triangle counting only.
  bool triangle_all_true = false;
  if (const auto* sub = std::get_if<SubgraphCountingQuery>(&cfg.query.query)) {
    triangle_all_true = sub->pattern.vertex_count() == 3 && sub->pattern.edge_count() == 3;
    for (const LabelPredicate& p : sub->predicates)
      triangle_all_true = triangle_all_true && p.is_any();
  }

  std::vector<GapRow> rows;
  for (AdjacencyModel model : {AdjacencyModel::kEdge, AdjacencyModel::kVertex}) {
    GapRow row;
    row.query_id = cfg.query.id;
    row.model = to_string(model);
    row.k = cfg.k;
    row.n = cfg.n;
    row.family = cfg.family;
    row.epsilon = cfg.epsilon;
    row.delta = cfg.delta;
    row.trials = cfg.trials;
    row.rs_bound = rs_bound_for_query(cfg.query.query, cfg.k, model).value;

    const double beta = smooth_beta(cfg.epsilon, cfg.delta);
    if (model == AdjacencyModel::kVertex && triangle_all_true)
      row.smooth_lower_bound = std::exp(-2.0 * beta) * (cfg.n - 2);
    if (universe) {
      std::vector<double> f = evaluate_on_universe(cfg.query.query, *universe);
      std::vector<char> member = universe->members(Hypothesis{cfg.k});
      row.rs_exact = restricted_sensitivity_over(f, member, universe->distances(model));
      std::vector<double> smooth = smooth_sensitivity_exact(f, beta, model, *universe);
      double worst = 0.0;
      for (int i = 0; i < universe->size(); ++i)
        if (member[i]) worst = std::max(worst, smooth[i]);
      row.smooth_worst_exact = worst;
    }

    double truth = evaluate(cfg.query.query, g);
    double abs_error = 0.0;
    for (int trial = 0; trial < cfg.trials; ++trial) {
      PrivacyParams params{cfg.epsilon, cfg.delta, cfg.seed + static_cast<std::uint64_t>(trial)};
      MechanismAnswer answer = model == AdjacencyModel::kEdge
                                   ? answer_edge_dp(cfg.query.query, g, cfg.k, params)
                                   : answer_vertex_dp(cfg.query.query, g, cfg.k, params);
      row.noise_scale = answer.noise_scale();
      abs_error += std::fabs(answer.noisy_value() - truth);
    }
    row.mean_abs_error = abs_error / cfg.trials;
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace detail {
inline std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}
inline std::string csv_number(const std::optional<double>& v) {
  return v ? csv_number(*v) : std::string();
}
}  // namespace detail

inline void write_gap_csv(std::ostream& out, const std::vector<GapRow>& rows) {
  out << "query_id,model,k,n,family,epsilon,delta,trials,rs_bound,rs_exact,"
         "smooth_worst_exact,smooth_lower_bound,noise_scale,mean_abs_error\n";
  for (const GapRow& r : rows) {
    out << r.query_id << ',' << r.model << ',' << r.k << ',' << r.n << ',' << r.family << ','
        << detail::csv_number(r.epsilon) << ',' << detail::csv_number(r.delta) << ',' << r.trials
        << ',' << detail::csv_number(r.rs_bound) << ',' << detail::csv_number(r.rs_exact) << ','
        << detail::csv_number(r.smooth_worst_exact) << ','
        << detail::csv_number(r.smooth_lower_bound) << ',' << detail::csv_number(r.noise_scale)
        << ',' << detail::csv_number(r.mean_abs_error) << '\n';
  }
}

}  // namespace rsdp
