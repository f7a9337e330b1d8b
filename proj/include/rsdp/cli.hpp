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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rsdp/experiment.hpp"
#include "rsdp/generators.hpp"
#include "rsdp/graph_io.hpp"
#include "rsdp/mechanism.hpp"
#include "rsdp/oracle.hpp"
#include "rsdp/serialize.hpp"

namespace rsdp {

// Exit codes: 0 success, 1 usage error, 2 computational failure (LP
// non-convergence, oracle caps, exhausted budget, failed verification).
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCompute = 2;

namespace cli_detail {

inline void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw std::invalid_argument("cannot write output file: " + out_path);
  file << text;
}

inline AdjacencyModel parse_model(const std::string& name) {
  if (name == "edge") return AdjacencyModel::kEdge;
  if (name == "vertex") return AdjacencyModel::kVertex;
  throw std::invalid_argument("model must be 'edge' or 'vertex'");
}

}  // namespace cli_detail

// Dispatches one command-line invocation. All data outputs are deterministic
// functions of the arguments (timestamps never enter data files), so a rerun
// with the same seed reproduces byte-identical files.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"differentially private graph queries with degree-bounded restricted sensitivity"};
  app.require_subcommand(1);

  // --- gen ---------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate a graph family and write graph+labels files");
  std::string gen_family = "star";
  int gen_n = 8, gen_attach = 2, gen_left = 1, gen_label_dim = 1, gen_alphabet = 2;
  double gen_prob = 0.5;
  std::uint64_t gen_seed = 0;
  std::string gen_out_graph, gen_out_labels;
  gen->add_option("--family", gen_family,
                  "star|complete|complete_bipartite|cycle|uniform_random|preferential_attachment");
  gen->add_option("-n,--n", gen_n, "vertex count")->required();
  gen->add_option("--prob", gen_prob, "edge probability (uniform_random)");
  gen->add_option("--attach", gen_attach, "attachments per vertex (preferential_attachment)");
  gen->add_option("--left", gen_left, "left side size (complete_bipartite)");
  gen->add_option("--label-dim", gen_label_dim, "attribute dimensions per vertex");
  gen->add_option("--alphabet", gen_alphabet, "attribute alphabet size");
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--out-graph", gen_out_graph, "edge list output path")->required();
  gen->add_option("--out-labels", gen_out_labels, "labels CSV output path")->required();

  // --- project -----------------------------------------------------------
  auto* project = app.add_subcommand("project", "project a graph toward max degree k");
  std::string proj_graph, proj_labels, proj_model = "edge", proj_out;
  int proj_k = 0;
  project->add_option("--graph", proj_graph, "edge list file")->required();
  project->add_option("--labels", proj_labels, "labels CSV file")->required();
  project->add_option("--model", proj_model, "edge|vertex|greedy");
  project->add_option("-k,--k", proj_k, "degree cap")->required();
  project->add_option("--out", proj_out, "JSON report path (default: stdout)");

  // --- sensitivity -------------------------------------------------------
  auto* sens = app.add_subcommand("sensitivity", "sensitivity bounds and oracle values");
  std::string sens_query, sens_out;
  int sens_k = 0, sens_n = 3, sens_alphabet = 2;
  bool sens_exact = false;
  sens->add_option("--query", sens_query, "query JSON file")->required();
  sens->add_option("-k,--k", sens_k, "degree cap")->required();
  sens->add_flag("--exact", sens_exact, "add exact oracle values on an enumerated universe");
  sens->add_option("--n", sens_n, "universe vertex count (exact mode)");
  sens->add_option("--alphabet", sens_alphabet, "universe alphabet (exact mode)");
  sens->add_option("--out", sens_out, "JSON output path (default: stdout)");

  // --- answer ------------------------------------------------------------
  auto* answer = app.add_subcommand("answer", "answer a query with differential privacy");
  std::string ans_graph, ans_labels, ans_query, ans_model = "edge", ans_budget, ans_out;
  int ans_k = 0;
  double ans_epsilon = 1.0, ans_delta = 0.0;
  std::uint64_t ans_seed = 0;
  bool ans_emit_scale = false;
  answer->add_option("--graph", ans_graph, "edge list file")->required();
  answer->add_option("--labels", ans_labels, "labels CSV file")->required();
  answer->add_option("--query", ans_query, "query JSON file")->required();
  answer->add_option("--model", ans_model, "edge|vertex");
  answer->add_option("-k,--k", ans_k, "degree cap of the hypothesis")->required();
  answer->add_option("--epsilon", ans_epsilon, "privacy parameter epsilon")->required();
  answer->add_option("--delta", ans_delta, "privacy parameter delta");
  answer->add_option("--seed", ans_seed, "noise RNG seed");
  answer->add_option("--budget", ans_budget, "JSON budget ledger path (check and debit)");
  answer->add_flag("--emit-scale", ans_emit_scale,
                   "include the noise scale in the vertex-model record; the vertex scale "
                   "depends on the data-dependent distance estimate");
  answer->add_option("--out", ans_out, "answer record path (default: stdout)");

  // --- verify ------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run the exhaustive oracle verification suite");
  int verify_n = 3, verify_alphabet = 2;
  double verify_beta = 0.5;
  std::vector<int> verify_ks = {0, 1, 2};
  std::string verify_out;
  verify->add_option("--n", verify_n, "universe vertex count (<= 4)");
  verify->add_option("--alphabet", verify_alphabet, "attribute alphabet (1 or 2)");
  verify->add_option("--beta", verify_beta, "smoothing rate for the gap checks");
  verify->add_option("--k", verify_ks, "degree caps to check");
  verify->add_option("--out", verify_out, "machine-readable JSON report path");

  // --- experiment --------------------------------------------------------
  auto* experiment = app.add_subcommand("experiment", "restricted-vs-smooth gap table (CSV)");
  std::string exp_family = "star", exp_query, exp_out;
  int exp_n = 4, exp_attach = 2, exp_left = 1, exp_k = 1, exp_trials = 100;
  double exp_prob = 0.5, exp_epsilon = 1.0, exp_delta = std::exp(-2.0);
  std::uint64_t exp_seed = 0;
  bool exp_exact = false;
  experiment->add_option("--family", exp_family, "graph family");
  experiment->add_option("-n,--n", exp_n, "vertex count");
  experiment->add_option("--prob", exp_prob, "edge probability (uniform_random)");
  experiment->add_option("--attach", exp_attach, "attachments (preferential_attachment)");
  experiment->add_option("--left", exp_left, "left side (complete_bipartite)");
  experiment->add_option("-k,--k", exp_k, "degree cap")->required();
  experiment->add_option("--query", exp_query, "query JSON file")->required();
  experiment->add_option("--epsilon", exp_epsilon, "epsilon");
  experiment->add_option("--delta", exp_delta, "delta (must be in (0,1))");
  experiment->add_option("--trials", exp_trials, "Monte Carlo trials");
  experiment->add_option("--seed", exp_seed, "base seed; trial i uses seed+i");
  experiment->add_flag("--exact", exp_exact, "add oracle columns (n <= 4)");
  experiment->add_option("--out", exp_out, "CSV path (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) {
      LabeledGraph structure =
          generate_family(gen_family, gen_n, gen_prob, gen_attach, gen_left, gen_seed,
                          gen_label_dim);
      std::mt19937_64 label_rng(gen_seed ^ 0x9e3779b97f4a7c15ull);
      LabeledGraph g = with_random_labels(structure, gen_alphabet, label_rng);
      write_labeled_graph(gen_out_graph, gen_out_labels, g);
      out << "wrote " << gen_out_graph << " (" << g.edge_count() << " edges) and "
          << gen_out_labels << " (" << g.vertex_count() << " vertices)\n";
    } else if (*project) {
      LabeledGraph g = read_labeled_graph(proj_graph, proj_labels);
      ProjectionOutcome outcome = [&] {
        if (proj_model == "edge") return project_edge(g, proj_k);
        if (proj_model == "vertex") return project_vertex_lp(g, proj_k);
        if (proj_model == "greedy") return project_greedy(g, proj_k);
        throw std::invalid_argument("model must be edge, vertex or greedy");
      }();
      cli_detail::emit(projection_to_json(outcome, proj_model, proj_k).dump(2) + "\n", proj_out,
                       out);
    } else if (*sens) {
      NamedQuery q = load_query_file(sens_query);
      json reports = json::array();
      for (AdjacencyModel model : {AdjacencyModel::kEdge, AdjacencyModel::kVertex}) {
        json entry{{"query_id", q.id}, {"model", to_string(model)}, {"k", sens_k}};
        entry["bound"] = sensitivity_report_to_json(rs_bound_for_query(q.query, sens_k, model));
        if (sens_exact) {
          Universe u = enumerate_universe(sens_n, sens_alphabet);
          std::vector<double> f = evaluate_on_universe(q.query, u);
          entry["exact"] = sensitivity_report_to_json(
              restricted_sensitivity_exact(f, u.members(Hypothesis{sens_k}), u.distances(model),
                                           "n=" + std::to_string(sens_n)));
        }
        reports.push_back(entry);
      }
      cli_detail::emit(reports.dump(2) + "\n", sens_out, out);
    } else if (*answer) {
      AdjacencyModel model = cli_detail::parse_model(ans_model);
      LabeledGraph g = read_labeled_graph(ans_graph, ans_labels);
      NamedQuery q = load_query_file(ans_query);
      PrivacyParams params{ans_epsilon, ans_delta, ans_seed};
      validate_mechanism_params(
          model == AdjacencyModel::kEdge ? Mechanism::kEdge : Mechanism::kVertex, params);
      if (!ans_budget.empty()) {
        BudgetLedger ledger = load_budget_file(ans_budget);
        ledger.spend(ans_epsilon, ans_delta);  // throws when exhausted
        save_budget_file(ans_budget, ledger);
      }
      MechanismAnswer a = model == AdjacencyModel::kEdge
                              ? answer_edge_dp(q.query, g, ans_k, params)
                              : answer_vertex_dp(q.query, g, ans_k, params);
      cli_detail::emit(answer_record_to_json(a, q.id, ans_emit_scale).dump(2) + "\n", ans_out,
                       out);
    } else if (*verify) {
      Universe u = enumerate_universe(verify_n, verify_alphabet);
      VerifyReport report =
          verify_bounds(u, default_verification_queries(), verify_ks, verify_beta);
      report.print_table(out);
      if (!verify_out.empty())
        cli_detail::emit(verify_report_to_json(report).dump(2) + "\n", verify_out, out);
      return report.all_pass() ? kExitOk : kExitCompute;
    } else if (*experiment) {
      ExperimentConfig cfg;
      cfg.family = exp_family;
      cfg.n = exp_n;
      cfg.prob = exp_prob;
      cfg.attach = exp_attach;
      cfg.left = exp_left;
      cfg.k = exp_k;
      cfg.query = load_query_file(exp_query);
      cfg.epsilon = exp_epsilon;
      cfg.delta = exp_delta;
      cfg.trials = exp_trials;
      cfg.seed = exp_seed;
      cfg.exact = exp_exact;
      std::ostringstream csv;
      write_gap_csv(csv, run_gap_experiment(cfg));
      cli_detail::emit(csv.str(), exp_out, out);
    }
  } catch (const ComputeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCompute;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace rsdp
