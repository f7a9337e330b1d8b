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

#include "rsdp/graph.hpp"

#include <queue>
#include <sstream>

#include <gtest/gtest.h>

#include "rsdp/generators.hpp"
#include "rsdp/graph_io.hpp"
#include "rsdp/oracle.hpp"
#include "test_util.hpp"

namespace rsdp {
namespace {

TEST(LabeledGraph, RejectsInvalidConstruction) {
  std::vector<std::vector<int>> labels(3, {0});
  EXPECT_THROW(LabeledGraph(3, {{0, 0}}, labels), std::invalid_argument);
  EXPECT_THROW(LabeledGraph(3, {{0, 1}, {0, 1}}, labels), std::invalid_argument);
  EXPECT_THROW(LabeledGraph(3, {{0, 3}}, labels), std::invalid_argument);
  EXPECT_THROW(LabeledGraph(3, {{1, 0}}, labels), std::invalid_argument);  // unnormalized
  EXPECT_THROW(LabeledGraph(2, {}, labels), std::invalid_argument);
  EXPECT_THROW(LabeledGraph(3, {}, {{0}, {0, 1}, {0}}), std::invalid_argument);
  EXPECT_THROW(LabeledGraph(3, {}, {{0}, {-1}, {0}}), std::invalid_argument);
  EXPECT_THROW(make_edge(2, 2), std::invalid_argument);
}

TEST(LabeledGraph, MaxDegree) {
  EXPECT_EQ(max_degree(make_empty(4)), 0);
  EXPECT_EQ(max_degree(make_complete(4)), 3);
  EXPECT_EQ(max_degree(make_star(5)), 4);  // K_{1,4}
}

TEST(LabeledGraph, HypothesisMembership) {
  EXPECT_TRUE(in_hypothesis(make_empty(4), Hypothesis{0}));
  EXPECT_FALSE(in_hypothesis(make_complete(4), Hypothesis{2}));
  EXPECT_TRUE(in_hypothesis(make_cycle(5), Hypothesis{2}));
}

TEST(LabeledGraph, LabelDiffSet) {
  LabeledGraph g = make_empty(3);
  EXPECT_TRUE(label_diff_set(g, g).empty());
  LabeledGraph h = g.with_vertex_labels(1, {7});
  EXPECT_EQ(label_diff_set(g, h), (std::vector<int>{1}));
  LabeledGraph all = LabeledGraph(3, {}, {{1}, {2}, {3}});
  EXPECT_EQ(label_diff_set(g, all), (std::vector<int>{0, 1, 2}));
  EXPECT_THROW(label_diff_set(g, make_empty(4)), std::invalid_argument);
}

TEST(Distance, EdgeModel) {
  LabeledGraph triangle = make_complete(3);
  EXPECT_EQ(edge_distance(triangle, triangle), 0);
  EXPECT_EQ(edge_distance(make_empty(3), triangle), 3);
  LabeledGraph g = make_empty(3);
  LabeledGraph h = g.with_toggled_edge(0, 1).with_vertex_labels(2, {1});
  EXPECT_EQ(edge_distance(g, h), 2);
}

TEST(Distance, VertexModel) {
  LabeledGraph star = make_star(5);
  EXPECT_EQ(vertex_distance(star, star), 0);
  EXPECT_EQ(vertex_distance(star, make_empty(5)), 1);  // center covers all
  // A 4-cycle needs two cover vertices, found by exhaustive search below.
  LabeledGraph c4 = make_cycle(4);
  EXPECT_EQ(vertex_distance(c4, make_empty(4)), 2);
}

TEST(Distance, VertexModelCombinesRelabelAndRewire) {
  // Relabeling a vertex and rewiring it count as a single step.
  LabeledGraph g = make_star(4);
  LabeledGraph h = g.with_rewired_vertex(0, {}).with_vertex_labels(0, {1});
  EXPECT_EQ(vertex_distance(g, h), 1);
  EXPECT_TRUE(is_vertex_adjacent(g, h));
  EXPECT_FALSE(is_edge_adjacent(g, h));
}

TEST(Distance, ExactCoverCapIsEnforced) {
  LabeledGraph big = make_complete(9, 1);  // 36 difference edges
  EXPECT_THROW(vertex_distance(big, make_empty(9), 24), ComputeError);
  EXPECT_THROW(min_vertex_cover_size({{0, 1}}, 40), std::invalid_argument);
}

// Independent oracle: minimum vertex cover by scanning all vertex subsets.
int brute_force_cover(int n, const std::vector<Edge>& edges) {
  int best = n;
  for (int mask = 0; mask < (1 << n); ++mask) {
    bool covers = true;
    for (const Edge& e : edges)
      covers = covers && (((mask >> e.first) | (mask >> e.second)) & 1);
    if (covers) best = std::min(best, std::popcount(static_cast<unsigned>(mask)));
  }
  return best;
}

TEST(VertexCover, MatchesBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 3 + static_cast<int>(uniform_index(rng, 7));
    LabeledGraph g = test::random_graph(rng, n, 0.4, 1);
    if (g.edge_count() > 24) continue;
    EXPECT_EQ(min_vertex_cover_size(g.edges()), brute_force_cover(n, g.edges()));
  }
}

TEST(Adjacency, PredicatesMatchDistanceOne) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    LabeledGraph g = test::random_graph(rng, 5, 0.4);
    LabeledGraph e = test::random_edge_neighbor(g, rng);
    EXPECT_TRUE(is_edge_adjacent(g, e));
    EXPECT_EQ(edge_distance(g, e), 1);
    EXPECT_TRUE(is_vertex_adjacent(g, e)) << "edge steps are also vertex steps";
    LabeledGraph v = test::random_vertex_neighbor(g, rng);
    if (v != g) {
      EXPECT_TRUE(is_vertex_adjacent(g, v));
      EXPECT_EQ(vertex_distance(g, v), 1);
    }
  }
}

// Both distance formulas must equal shortest-path length in the step graph
// over all labeled datasets; checked by breadth-first search on the n <= 3
// universes.
TEST(Distance, EqualsShortestPathOnSmallUniverses) {
  for (int n : {2, 3}) {
    Universe u = enumerate_universe(n, 2);
    const int total = u.size();
    for (AdjacencyModel model : {AdjacencyModel::kEdge, AdjacencyModel::kVertex}) {
      std::vector<std::vector<int>> steps(total);
      for (int i = 0; i < total; ++i)
        for (int j = 0; j < total; ++j) {
          if (i == j) continue;
          bool adjacent = model == AdjacencyModel::kEdge
                              ? is_edge_adjacent(u.dataset(i), u.dataset(j))
                              : is_vertex_adjacent(u.dataset(i), u.dataset(j));
          if (adjacent) steps[i].push_back(j);
        }
      for (int source = 0; source < total; ++source) {
        std::vector<int> dist(total, -1);
        std::queue<int> frontier;
        dist[source] = 0;
        frontier.push(source);
        while (!frontier.empty()) {
          int at = frontier.front();
          frontier.pop();
          for (int next : steps[at])
            if (dist[next] < 0) {
              dist[next] = dist[at] + 1;
              frontier.push(next);
            }
        }
        for (int target = 0; target < total; ++target)
          ASSERT_EQ(u.distance(model, source, target), dist[target])
              << "model=" << to_string(model) << " n=" << n << " pair (" << source << ","
              << target << ")";
      }
    }
  }
}

TEST(Distance, VertexNeverExceedsEdge) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    LabeledGraph a = test::random_graph(rng, 5, 0.4);
    LabeledGraph b = test::random_graph(rng, 5, 0.4);
    EXPECT_LE(vertex_distance(a, b), edge_distance(a, b));
  }
}

TEST(GraphIo, RoundTripsThroughFiles) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    LabeledGraph g = test::random_graph(rng, 6, 0.5, 3, 2);
    std::ostringstream graph_text, labels_text;
    write_edge_list(graph_text, g);
    write_labels_csv(labels_text, g);
    std::istringstream graph_in(graph_text.str()), labels_in(labels_text.str());
    std::vector<std::vector<int>> labels = parse_labels_csv(labels_in);
    LabeledGraph back(static_cast<int>(labels.size()), parse_edge_list(graph_in), labels);
    EXPECT_EQ(back, g);
  }
}

TEST(GraphIo, IsolatedVerticesComeFromLabelRows) {
  std::istringstream graph_in("0 1\n");
  std::istringstream labels_in("vertex,l0\n0,1\n1,0\n2,1\n");
  std::vector<std::vector<int>> labels = parse_labels_csv(labels_in);
  LabeledGraph g(static_cast<int>(labels.size()), parse_edge_list(graph_in), labels);
  EXPECT_EQ(g.vertex_count(), 3);
  EXPECT_EQ(g.degree(2), 0);
  EXPECT_EQ(g.labels(2), std::vector<int>{1});
}

TEST(GraphIo, RejectsMalformedFiles) {
  {
    std::istringstream labels_in("wrong,l0\n0,1\n");
    EXPECT_THROW(parse_labels_csv(labels_in), std::invalid_argument);
  }
  {
    std::istringstream labels_in("vertex,l0\n0,1\n0,0\n");
    EXPECT_THROW(parse_labels_csv(labels_in), std::invalid_argument);
  }
  {
    std::istringstream graph_in("0\n");
    EXPECT_THROW(parse_edge_list(graph_in), std::invalid_argument);
  }
}

}  // namespace
}  // namespace rsdp
