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

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rsdp/mechanism.hpp"
#include "rsdp/oracle.hpp"
#include "rsdp/projection.hpp"
#include "rsdp/query.hpp"
#include "rsdp/sensitivity.hpp"

namespace rsdp {

using nlohmann::json;

// --------------------------------------------------------------------------
// Query files.
//
//   {"type":"subgraph","pattern_edges":[[0,1],...],
//    "predicates":[{"dim":0,"in":[1]} | "any", ...]}
//   {"type":"profile","profile":"clustering"|"neighbor_label"|"local_bridge"
//    |"two_betweenness","params":{...}}
//
// An optional "id" names the query; otherwise a content hash is used.

inline LabelPredicate predicate_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "any") return LabelPredicate::any();
  if (j.is_object() && j.contains("dim") && j.contains("in"))
    return LabelPredicate::dim_in(j.at("dim").get<int>(), j.at("in").get<std::vector<int>>());
  throw std::invalid_argument("predicate must be \"any\" or {\"dim\":d,\"in\":[...]}");
}

inline json predicate_to_json(const LabelPredicate& p) {
  if (p.is_any()) return "any";
  return json{{"dim", p.dim()}, {"in", p.allowed()}};
}

namespace detail {
inline std::string fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}
}  // namespace detail

inline json query_to_json(const Query& q) {
  if (const auto* sub = std::get_if<SubgraphCountingQuery>(&q)) {
    json edges = json::array();
    for (const Edge& e : sub->pattern.edges()) edges.push_back({e.first, e.second});
    json preds = json::array();
    for (const LabelPredicate& p : sub->predicates) preds.push_back(predicate_to_json(p));
    return json{{"type", "subgraph"}, {"pattern_edges", edges}, {"predicates", preds}};
  }
  const auto& profile = std::get<LocalProfileQuery>(q);
  return json{{"type", "profile"}, {"profile", profile.name}};
}

inline NamedQuery query_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type"))
    throw std::invalid_argument("query file must be an object with a \"type\" field");
  std::string type = j.at("type").get<std::string>();
  Query query = [&]() -> Query {
    if (type == "subgraph") {
      std::vector<Edge> pattern_edges;
      for (const json& e : j.at("pattern_edges"))
        pattern_edges.push_back(make_edge(e.at(0).get<int>(), e.at(1).get<int>()));
      std::vector<LabelPredicate> predicates;
      for (const json& p : j.at("predicates")) predicates.push_back(predicate_from_json(p));
      int t = static_cast<int>(predicates.size());
      return make_subgraph_query(t, std::move(pattern_edges), std::move(predicates));
    }
    if (type == "profile") {
      std::string name = j.at("profile").get<std::string>();
      std::optional<LabelPredicate> predicate;
      if (j.contains("params") && j.at("params").is_object() && !j.at("params").empty())
        predicate = predicate_from_json(j.at("params"));
      return make_builtin_profile_query(name, predicate);
    }
    throw std::invalid_argument("unknown query type: " + type);
  }();
  std::string id =
      j.contains("id") ? j.at("id").get<std::string>() : "q" + detail::fnv1a(j.dump());
  return NamedQuery{std::move(id), std::move(query)};
}

inline NamedQuery load_query_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open query file: " + path);
  json j = json::parse(in);
  return query_from_json(j);
}

// --------------------------------------------------------------------------
// Reports.

inline json lp_solution_to_json(const LpSolution& s) {
  return json{{"x", s.x}, {"objective", s.objective}, {"tolerance", s.tolerance}};
}

inline json projection_to_json(const ProjectionOutcome& outcome, const std::string& model,
                               int k) {
  json removed = json::array();
  for (const Edge& e : outcome.certificate.removed_edges)
    removed.push_back({e.first, e.second});
  json j{{"model", model},
         {"k", k},
         {"d_hat", outcome.d_hat},
         {"target_bound", outcome.target_bound},
         {"removed_edges", removed},
         {"output_max_degree", max_degree(outcome.graph)}};
  if (outcome.certificate.lp) {
    j["objective"] = outcome.certificate.lp->objective;
    j["x"] = outcome.certificate.lp->x;
  }
  if (!outcome.certificate.greedy_trace.empty() || outcome.certificate.greedy_guess) {
    json trace = json::array();
    for (const GreedyTraceStep& step : outcome.certificate.greedy_trace)
      trace.push_back({{"vertex", step.vertex},
                       {"edges_removed", step.edges_removed},
                       {"forced", step.forced}});
    j["greedy_trace"] = trace;
    if (outcome.certificate.greedy_guess) j["greedy_guess"] = *outcome.certificate.greedy_guess;
  }
  return j;
}

inline json sensitivity_report_to_json(const SensitivityReport& r) {
  return json{{"value", r.value}, {"kind", to_string(r.kind)}, {"provenance", r.provenance}};
}

inline json verify_report_to_json(const VerifyReport& r) {
  json checks = json::array();
  for (const VerifyCheck& c : r.checks)
    checks.push_back({{"name", c.name},
                      {"pass", c.pass},
                      {"measured", c.lhs},
                      {"bound", c.rhs},
                      {"detail", c.detail}});
  return json{{"all_pass", r.all_pass()}, {"checks", checks}};
}

// Answer record. The noise scale is always public on the edge path; on the
// vertex path it is derived from the data-dependent distance estimate and is
// emitted only when explicitly requested.
inline json answer_record_to_json(const MechanismAnswer& a, const std::string& query_id,
                                  bool emit_scale) {
  json j{{"query_id", query_id},
         {"mechanism", to_string(a.mechanism())},
         {"epsilon", a.params().epsilon},
         {"delta", a.params().delta},
         {"k", a.degree_bound()},
         {"noisy_value", a.noisy_value()},
         {"seed", a.params().seed}};
  if (a.mechanism() == Mechanism::kEdge || emit_scale) j["noise_scale"] = a.noise_scale();
  return j;
}

// --------------------------------------------------------------------------
// Budget files: a small JSON ledger persisted next to a dataset.

inline json budget_to_json(const BudgetLedger& ledger) {
  return json{{"epsilon_limit", ledger.limit().epsilon},
              {"delta_limit", ledger.limit().delta},
              {"epsilon_spent", ledger.spent().epsilon},
              {"delta_spent", ledger.spent().delta}};
}

inline BudgetLedger budget_from_json(const json& j) {
  PrivacyBudget limit{j.at("epsilon_limit").get<double>(), j.at("delta_limit").get<double>()};
  PrivacyBudget spent{j.value("epsilon_spent", 0.0), j.value("delta_spent", 0.0)};
  return BudgetLedger(limit, spent);
}

inline BudgetLedger load_budget_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open budget file: " + path);
  return budget_from_json(json::parse(in));
}

inline void save_budget_file(const std::string& path, const BudgetLedger& ledger) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write budget file: " + path);
  out << budget_to_json(ledger).dump(2) << '\n';
}

}  // namespace rsdp
