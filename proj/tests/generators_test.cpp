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

#include "rsdp/generators.hpp"

#include <gtest/gtest.h>

namespace rsdp {
namespace {

TEST(Families, FixedShapes) {
  LabeledGraph star = make_star(5);
  EXPECT_EQ(star.edge_count(), 4);
  EXPECT_EQ(star.degree(0), 4);

  LabeledGraph k4 = make_complete(4);
  EXPECT_EQ(k4.edge_count(), 6);

  LabeledGraph c5 = make_cycle(5);
  for (int v = 0; v < 5; ++v) EXPECT_EQ(c5.degree(v), 2);

  LabeledGraph b = make_complete_bipartite(2, 3);
  EXPECT_EQ(b.edge_count(), 6);
  EXPECT_EQ(b.degree(0), 3);
  EXPECT_EQ(b.degree(2), 2);
  EXPECT_FALSE(b.has_edge(0, 1));

  EXPECT_THROW(make_cycle(2), std::invalid_argument);
}

TEST(Families, UniformRandomEndpoints) {
  std::mt19937_64 rng(1);
  EXPECT_EQ(gen_uniform_random(6, 0.0, rng).edge_count(), 0);
  EXPECT_EQ(gen_uniform_random(6, 1.0, rng).edge_count(), 15);
}

TEST(Families, UniformRandomIsSeedDeterministic) {
  std::mt19937_64 a(9), b(9), c(10);
  LabeledGraph g1 = gen_uniform_random(10, 0.5, a);
  LabeledGraph g2 = gen_uniform_random(10, 0.5, b);
  LabeledGraph g3 = gen_uniform_random(10, 0.5, c);
  EXPECT_EQ(g1, g2);
  EXPECT_NE(g1, g3);
}

TEST(Families, PreferentialAttachmentShape) {
  std::mt19937_64 rng(7);
  LabeledGraph g = gen_preferential_attachment(200, 2, rng);
  // One edge from the second vertex, two from each later one.
  EXPECT_EQ(g.edge_count(), 1 + 2 * 198);
  // Heavy-tailed but far below a hub of size n.
  EXPECT_LT(max_degree(g), 100);
  EXPECT_GE(max_degree(g), 5);
}

TEST(Families, RandomLabelsRespectAlphabet) {
  std::mt19937_64 rng(3);
  LabeledGraph g = with_random_labels(make_complete(6), 3, rng);
  bool saw_nonzero = false;
  for (int v = 0; v < 6; ++v) {
    ASSERT_GE(g.labels(v)[0], 0);
    ASSERT_LT(g.labels(v)[0], 3);
    saw_nonzero = saw_nonzero || g.labels(v)[0] != 0;
  }
  EXPECT_TRUE(saw_nonzero);
}

TEST(Families, DispatchByName) {
  EXPECT_EQ(generate_family("star", 5, 0, 0, 0, 0).degree(0), 4);
  EXPECT_EQ(generate_family("complete_bipartite", 5, 0, 0, 2, 0).edge_count(), 6);
  LabeledGraph r1 = generate_family("uniform_random", 8, 0.4, 0, 0, 123);
  LabeledGraph r2 = generate_family("uniform_random", 8, 0.4, 0, 0, 123);
  EXPECT_EQ(r1, r2);
  EXPECT_THROW(generate_family("moebius", 5, 0, 0, 0, 0), std::invalid_argument);
}

}  // namespace
}  // namespace rsdp
