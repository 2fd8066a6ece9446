// Copyright 2026 The unipm Authors
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

#include "graph.h"

#include <gtest/gtest.h>

#include "atlas.h"
#include "errors.h"
#include "random.h"

namespace unipm {
namespace {

TEST(ParseGraph, K2) {
  Graph g = ParseGraph("2 1\n0 1");
  EXPECT_EQ(g.LiveCount(), 2);
  EXPECT_EQ(g.EdgeCount(), 1);
  EXPECT_TRUE(g.Adjacent(0, 1));
}

TEST(ParseGraph, PathP4) {
  Graph g = ParseGraph("4 3\n0 1\n1 2\n2 3");
  EXPECT_EQ(g.LiveCount(), 4);
  EXPECT_EQ(g.LiveEdges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
}

TEST(ParseGraph, OutOfRangeNamesLine) {
  try {
    ParseGraph("2 1\n0 2");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_STREQ(e.what(), "vertex 2 out of range at line 2");
  }
}

TEST(ParseGraph, SelfLoopAndMalformed) {
  EXPECT_THROW(ParseGraph("2 1\n1 1"), ParseError);
  EXPECT_THROW(ParseGraph("2 x\n0 1"), ParseError);
  EXPECT_THROW(ParseGraph("2 1\n0"), ParseError);
  EXPECT_THROW(ParseGraph("3 1\n0 1\n1 2"), ParseError);
  EXPECT_THROW(ParseGraph("3 2\n0 1"), ParseError);
  EXPECT_THROW(ParseGraph("# only a comment\n"), ParseError);
}

TEST(ParseGraph, CommentsAndDuplicates) {
  Graph g = ParseGraph("# c\n3 3\n\n0 1\n# mid\n1 0\n1 2\n");
  EXPECT_EQ(g.EdgeCount(), 2);
  EXPECT_TRUE(g.CheckInvariants());
}

TEST(ParseGraph, EmptyGraph) {
  Graph g = ParseGraph("0 0\n");
  EXPECT_EQ(g.LiveCount(), 0);
  EXPECT_EQ(g.EdgeCount(), 0);
}

TEST(Graph, AddEdgeRejectsBadInput) {
  Graph g(3);
  EXPECT_TRUE(g.AddEdge(0, 1));
  EXPECT_FALSE(g.AddEdge(1, 0));
  EXPECT_THROW(g.AddEdge(2, 2), UsageError);
  EXPECT_THROW(g.AddEdge(0, 3), UsageError);
  g.RemoveVertex(2);
  EXPECT_THROW(g.AddEdge(0, 2), UsageError);
}

TEST(Graph, LazyRemovalKeepsIdsAndCounts) {
  Graph g = ParseGraph("4 4\n0 1\n0 2\n1 2\n0 3");
  g.RemoveVertex(0);
  EXPECT_EQ(g.TotalCount(), 4);
  EXPECT_EQ(g.LiveCount(), 3);
  EXPECT_EQ(g.EdgeCount(), 1);
  EXPECT_FALSE(g.IsLive(0));
  EXPECT_EQ(g.Adjacency(1).size(), 2u);  // dead neighbour still listed
  EXPECT_EQ(g.LiveDegree(1), 1);
  EXPECT_EQ(g.LiveDegree(3), 0);
  EXPECT_TRUE(g.CheckInvariants());
  EXPECT_EQ(g.AddVertex(), 4);
  EXPECT_EQ(g.LiveCount(), 4);
}

TEST(Graph, SerializeRoundTrip) {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = atlas::RandomConnected(7, rng);
    Graph r = atlas::Relabel(g, rng);
    Graph back = ParseGraph(SerializeGraph(r));
    EXPECT_EQ(back.LiveEdges(), r.LiveEdges());
    EXPECT_EQ(SerializeGraph(back), SerializeGraph(r));
    EXPECT_TRUE(back.CheckInvariants());
  }
}

TEST(Graph, InducedSubgraphRenumbersInKeepOrder) {
  Graph g = ParseGraph("4 4\n0 1\n0 2\n1 2\n0 3");
  std::vector<VertexId> keep{3, 0, 1};
  Graph h = InducedSubgraph(g, keep);
  EXPECT_EQ(h.LiveCount(), 3);
  EXPECT_EQ(h.LiveEdges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

}  // namespace
}  // namespace unipm
