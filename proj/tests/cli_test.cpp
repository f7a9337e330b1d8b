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

#include "rsdp/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

namespace rsdp {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::path(::testing::TempDir()) / ("rsdp_cli_" + std::to_string(counter_++));
    fs::create_directories(dir_);
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int run(const std::vector<std::string>& args) {
    out_.str("");
    err_.str("");
    return run_cli(args, out_, err_);
  }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }

  void write_query(const std::string& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
  }

  void make_star_files(const std::string& graph, const std::string& labels) {
    ASSERT_EQ(run({"gen", "--family", "star", "-n", "5", "--seed", "4", "--out-graph", graph,
                   "--out-labels", labels}),
              kExitOk);
  }

  fs::path dir_;
  std::ostringstream out_, err_;
  static int counter_;
};

int CliTest::counter_ = 0;

TEST_F(CliTest, GenWritesDeterministicFiles) {
  std::string g1 = path("a.edges"), l1 = path("a.labels");
  std::string g2 = path("b.edges"), l2 = path("b.labels");
  ASSERT_EQ(run({"gen", "--family", "uniform_random", "-n", "9", "--prob", "0.5", "--seed", "11",
                 "--out-graph", g1, "--out-labels", l1}),
            kExitOk);
  ASSERT_EQ(run({"gen", "--family", "uniform_random", "-n", "9", "--prob", "0.5", "--seed", "11",
                 "--out-graph", g2, "--out-labels", l2}),
            kExitOk);
  EXPECT_EQ(slurp(g1), slurp(g2));
  EXPECT_EQ(slurp(l1), slurp(l2));
  LabeledGraph g = read_labeled_graph(g1, l1);
  EXPECT_EQ(g.vertex_count(), 9);
}

TEST_F(CliTest, ProjectVertexReportsEstimate) {
  std::string graph = path("star.edges"), labels = path("star.labels");
  make_star_files(graph, labels);
  std::string report = path("proj.json");
  ASSERT_EQ(run({"project", "--graph", graph, "--labels", labels, "--model", "vertex", "-k", "2",
                 "--out", report}),
            kExitOk);
  json j = json::parse(slurp(report));
  EXPECT_NEAR(j.at("d_hat").get<double>(), 2.0, 1e-6);
  EXPECT_EQ(j.at("target_bound").get<int>(), 4);
  EXPECT_EQ(j.at("removed_edges").size(), 4u);
  EXPECT_EQ(j.at("x").size(), 5u);
  EXPECT_NEAR(j.at("objective").get<double>(), 0.5, 1e-7);
}

TEST_F(CliTest, ProjectGreedyEmitsTrace) {
  std::string graph = path("star.edges"), labels = path("star.labels");
  make_star_files(graph, labels);
  ASSERT_EQ(run({"project", "--graph", graph, "--labels", labels, "--model", "greedy", "-k", "1"}),
            kExitOk);
  json j = json::parse(out_.str());
  EXPECT_EQ(j.at("d_hat").get<double>(), 1.0);
  EXPECT_EQ(j.at("greedy_trace").size(), 1u);
}

TEST_F(CliTest, SensitivityReportsBoundsAndExact) {
  std::string query = path("spy.json");
  write_query(query,
              R"({"type":"profile","profile":"neighbor_label","params":{"dim":0,"in":[1]}})");
  ASSERT_EQ(run({"sensitivity", "--query", query, "-k", "2", "--exact", "--n", "3"}), kExitOk);
  json reports = json::parse(out_.str());
  ASSERT_EQ(reports.size(), 2u);
  EXPECT_DOUBLE_EQ(reports[0].at("bound").at("value").get<double>(), 3.0);   // edge k+1
  EXPECT_DOUBLE_EQ(reports[1].at("bound").at("value").get<double>(), 5.0);   // vertex 2k+1
  EXPECT_LE(reports[1].at("exact").at("value").get<double>(), 5.0);
}

TEST_F(CliTest, AnswerEdgeIsDeterministicAndCarriesScale) {
  std::string graph = path("g.edges"), labels = path("g.labels"), query = path("q.json");
  make_star_files(graph, labels);
  write_query(query,
              R"({"id":"spy","type":"profile","profile":"neighbor_label","params":{"dim":0,"in":[1]}})");
  std::string out1 = path("a1.json"), out2 = path("a2.json");
  ASSERT_EQ(run({"answer", "--graph", graph, "--labels", labels, "--query", query, "--model",
                 "edge", "-k", "2", "--epsilon", "1", "--seed", "5", "--out", out1}),
            kExitOk);
  ASSERT_EQ(run({"answer", "--graph", graph, "--labels", labels, "--query", query, "--model",
                 "edge", "-k", "2", "--epsilon", "1", "--seed", "5", "--out", out2}),
            kExitOk);
  EXPECT_EQ(slurp(out1), slurp(out2));
  json j = json::parse(slurp(out1));
  EXPECT_DOUBLE_EQ(j.at("noise_scale").get<double>(), 9.0);
  EXPECT_EQ(j.at("query_id").get<std::string>(), "spy");
  EXPECT_FALSE(j.contains("d_hat"));
}

TEST_F(CliTest, VertexAnswerHidesScaleUnlessRequested) {
  std::string graph = path("g.edges"), labels = path("g.labels"), query = path("q.json");
  make_star_files(graph, labels);
  write_query(query, R"({"type":"profile","profile":"clustering"})");
  ASSERT_EQ(run({"answer", "--graph", graph, "--labels", labels, "--query", query, "--model",
                 "vertex", "-k", "2", "--epsilon", "1", "--delta", "0.1", "--seed", "5"}),
            kExitOk);
  json hidden = json::parse(out_.str());
  EXPECT_FALSE(hidden.contains("noise_scale"));
  EXPECT_FALSE(hidden.contains("d_hat"));

  ASSERT_EQ(run({"answer", "--graph", graph, "--labels", labels, "--query", query, "--model",
                 "vertex", "-k", "2", "--epsilon", "1", "--delta", "0.1", "--seed", "5",
                 "--emit-scale"}),
            kExitOk);
  json shown = json::parse(out_.str());
  EXPECT_TRUE(shown.contains("noise_scale"));
}

TEST_F(CliTest, VertexAnswerWithZeroDeltaFailsWithBetaMessage) {
  std::string graph = path("g.edges"), labels = path("g.labels"), query = path("q.json");
  make_star_files(graph, labels);
  write_query(query, R"({"type":"profile","profile":"clustering"})");
  int code = run({"answer", "--graph", graph, "--labels", labels, "--query", query, "--model",
                  "vertex", "-k", "2", "--epsilon", "1", "--delta", "0"});
  EXPECT_EQ(code, kExitUsage);
  EXPECT_NE(err_.str().find("beta"), std::string::npos);
}

TEST_F(CliTest, BudgetLedgerDebitsAndRefuses) {
  std::string graph = path("g.edges"), labels = path("g.labels"), query = path("q.json");
  make_star_files(graph, labels);
  write_query(query, R"({"type":"profile","profile":"clustering"})");
  std::string budget = path("budget.json");
  {
    std::ofstream b(budget);
    b << R"({"epsilon_limit":1.5,"delta_limit":0.0})";
  }
  std::vector<std::string> answer_args = {"answer", "--graph",   graph, "--labels", labels,
                                          "--query", query,      "--model", "edge",  "-k", "2",
                                          "--epsilon", "1",      "--budget", budget};
  ASSERT_EQ(run(answer_args), kExitOk);
  json after = json::parse(slurp(budget));
  EXPECT_DOUBLE_EQ(after.at("epsilon_spent").get<double>(), 1.0);
  // Second answer would need 1.0 more; only 0.5 remains.
  EXPECT_EQ(run(answer_args), kExitCompute);
  EXPECT_NE(err_.str().find("budget"), std::string::npos);
  // A refused request must not debit the ledger.
  json unchanged = json::parse(slurp(budget));
  EXPECT_DOUBLE_EQ(unchanged.at("epsilon_spent").get<double>(), 1.0);

  // Invalid mechanism parameters are rejected before any debit happens.
  EXPECT_EQ(run({"answer", "--graph", graph, "--labels", labels, "--query", query, "--model",
                 "vertex", "-k", "2", "--epsilon", "0.1", "--delta", "0", "--budget", budget}),
            kExitUsage);
  json still = json::parse(slurp(budget));
  EXPECT_DOUBLE_EQ(still.at("epsilon_spent").get<double>(), 1.0);
}

TEST_F(CliTest, VerifySmallUniversePasses) {
  std::string report = path("verify.json");
  ASSERT_EQ(run({"verify", "--n", "2", "--alphabet", "2", "--out", report}), kExitOk);
  EXPECT_NE(out_.str().find("all checks passed"), std::string::npos);
  json j = json::parse(slurp(report));
  EXPECT_TRUE(j.at("all_pass").get<bool>());
}

TEST_F(CliTest, ExperimentEmitsDeterministicCsv) {
  std::string query = path("triangle.json");
  write_query(query,
              R"({"id":"triangle","type":"subgraph","pattern_edges":[[0,1],[0,2],[1,2]],)"
              R"("predicates":["any","any","any"]})");
  std::string csv1 = path("gap1.csv"), csv2 = path("gap2.csv");
  std::vector<std::string> args = {"experiment", "--family", "star", "-n", "6", "-k", "5",
                                   "--query", query, "--trials", "20", "--seed", "3",
                                   "--out", csv1};
  ASSERT_EQ(run(args), kExitOk);
  args.back() = csv2;
  ASSERT_EQ(run(args), kExitOk);
  EXPECT_EQ(slurp(csv1), slurp(csv2));

  std::istringstream csv(slurp(csv1));
  std::string header, edge_row, vertex_row;
  std::getline(csv, header);
  std::getline(csv, edge_row);
  std::getline(csv, vertex_row);
  EXPECT_NE(header.find("rs_bound"), std::string::npos);
  EXPECT_NE(edge_row.find("triangle,edge,5,6,star"), std::string::npos);
  EXPECT_NE(edge_row.find(",75,"), std::string::npos);    // 3 * 5^2
  EXPECT_NE(vertex_row.find(",75,"), std::string::npos);
}

TEST_F(CliTest, ConstantQueryExperimentGivesZeroColumns) {
  // A never-matching triangle query at k=0: bound, exact values, noise scale
  // and error are all zero.
  std::string query = path("never.json");
  write_query(query,
              R"({"id":"never","type":"subgraph","pattern_edges":[[0,1],[0,2],[1,2]],)"
              R"("predicates":[{"dim":0,"in":[9]},"any","any"]})");
  ASSERT_EQ(run({"experiment", "--family", "complete", "-n", "4", "-k", "0", "--query", query,
                 "--trials", "5", "--seed", "1", "--exact"}),
            kExitOk);
  std::istringstream csv(out_.str());
  std::string line;
  std::getline(csv, line);  // header
  while (std::getline(csv, line)) {
    EXPECT_NE(line.find("never"), std::string::npos);
    EXPECT_NE(line.find(",0,0,0,"), std::string::npos) << line;
  }
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({"frobnicate"}), kExitUsage);
  EXPECT_EQ(run({"gen", "--family", "star", "--out-graph", path("x"), "--out-labels", path("y")}),
            kExitUsage);  // missing -n
  EXPECT_EQ(run({"project", "--graph", path("missing.edges"), "--labels", path("missing.labels"),
                 "-k", "1"}),
            kExitUsage);
}

TEST_F(CliTest, HelpExitsZero) {
  EXPECT_EQ(run({"--help"}), kExitOk);
  EXPECT_NE(out_.str().find("Usage"), std::string::npos);
}

}  // namespace
}  // namespace rsdp
