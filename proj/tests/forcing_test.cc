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

#include "forcing.h"

#include <gtest/gtest.h>

#include "atlas.h"
#include "errors.h"
#include "reference.h"
#include "structure.h"
#include "uniqueness.h"

namespace unipm {
namespace {

const char* kPaw = "4 4\n0 1\n0 2\n1 2\n0 3\n";

TEST(FindForcingSet, PathP4) {
  auto cert = FindForcingSet(ParseGraph("4 3\n0 1\n1 2\n2 3\n"));
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->forced, (std::vector<Edge>{{0, 1}, {2, 3}}));
  Matching m;
  m.Add(0, 1);
  m.Add(2, 3);
  EXPECT_EQ(cert->matching, m);
}

TEST(FindForcingSet, CycleC4HasNone) {
  EXPECT_FALSE(FindForcingSet(ParseGraph("4 4\n0 1\n1 2\n2 3\n3 0\n")));
}

TEST(FindForcingSet, Paw) {
  auto cert = FindForcingSet(ParseGraph(kPaw));
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->forced, (std::vector<Edge>{{3, 0}, {1, 2}}));
  EXPECT_EQ(FormatMatching(cert->matching), "0 3\n1 2\n");
}

TEST(FindForcingSet, DegenerateInputs) {
  EXPECT_FALSE(FindForcingSet(ParseGraph("3 2\n0 1\n1 2\n")));
  EXPECT_FALSE(FindForcingSet(ParseGraph("4 3\n0 1\n0 2\n1 2\n")));
  auto empty = FindForcingSet(ParseGraph("0 0\n"));
  ASSERT_TRUE(empty);
  EXPECT_TRUE(empty->forced.empty());
}

TEST(FindForcingSet, DisconnectedHandledGlobally) {
  auto cert = FindForcingSet(ParseGraph("6 4\n0 1\n2 3\n3 4\n4 5\n"));
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->forced.size(), 3u);
}

TEST(SplitBalance, Examples) {
  Graph paw = ParseGraph(kPaw);
  std::vector<VertexId> s{3};
  std::vector<VertexId> c{0, 1, 2};
  EXPECT_TRUE(SplitBalance(paw, s, c));
  std::vector<VertexId> none;
  std::vector<VertexId> k2{0, 1};
  EXPECT_TRUE(SplitBalance(ParseGraph("2 1\n0 1\n"), none, k2));
  std::vector<VertexId> k4{0, 1, 2, 3};
  EXPECT_FALSE(SplitBalance(
      ParseGraph("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"), none, k4));
}

TEST(SplitBalance, RejectsInvalidPartition) {
  Graph paw = ParseGraph(kPaw);
  std::vector<VertexId> s{1, 2};
  std::vector<VertexId> c{0, 3};
  EXPECT_THROW(SplitBalance(paw, s, c), UsageError);  // 1-2 is an edge

  std::vector<VertexId> s2{3};
  std::vector<VertexId> c2{0, 1};
  EXPECT_THROW(SplitBalance(paw, s2, c2), UsageError);  // 2 missing
  std::vector<VertexId> s3{2, 3};
  std::vector<VertexId> c3{0, 1, 2};
  EXPECT_THROW(SplitBalance(paw, s3, c3), UsageError);  // overlap
}

// Sound everywhere; complete on cographs and split graphs.
TEST(FindForcingSet, SoundAndCompleteOnCographsAndSplit) {
  int complete_checked = 0;
  for (int n = 2; n <= 8; n += 2) {
    for (atlas::Code code : atlas::Unlabeled(n)) {
      Graph g = atlas::FromCode(n, code);
      const std::uint64_t count = ref::CountPerfectMatchings(g);
      auto cert = FindForcingSet(g);
      if (cert) {
        ASSERT_EQ(count, 1u) << SerializeGraph(g);
        ASSERT_TRUE(VerifyForcingCertificate(g, *cert));
        ASSERT_FALSE(FindAlternatingCycle(g, cert->matching));
      }
      if (!ref::IsConnected(g)) continue;
      auto split = IsSplitBruteforce(g);
      const bool cograph = IsCographBruteforce(g);
      if ((cograph || split) && count == 1) {
        ++complete_checked;
        ASSERT_TRUE(cert) << SerializeGraph(g);
        ASSERT_EQ(cert->matching, EnumeratePerfectMatchings(g, 2).at(0));
        if (split) {
          ASSERT_TRUE(SplitBalance(g, split->independent, split->clique));
        }
      }
    }
  }
  EXPECT_GT(complete_checked, 30);
}

TEST(VerifyForcingCertificate, DetectsTampering) {
  Graph g = ParseGraph(kPaw);
  auto cert = FindForcingSet(g);
  ASSERT_TRUE(cert);
  ForcingCertificate bad = *cert;
  std::swap(bad.forced[0], bad.forced[1]);  // 1 has degree 2 at the start
  EXPECT_FALSE(VerifyForcingCertificate(g, bad));
}

// A unique perfect matching with minimum degree 2: elimination cannot start.
TEST(FindForcingSet, IncompleteOnGeneralGraphs) {
  int found = 0;
  for (int n = 2; n <= 8; n += 2) {
    for (atlas::Code code : atlas::Unlabeled(n)) {
      Graph g = atlas::FromCode(n, code);
      if (ref::MinDegree(g) < 2) continue;
      if (ref::CountPerfectMatchings(g) != 1) continue;
      EXPECT_FALSE(FindForcingSet(g));
      ++found;
    }
  }
  EXPECT_GT(found, 0);
  Graph twins = ParseGraph("6 7\n0 1\n0 2\n1 2\n3 4\n3 5\n4 5\n0 3\n");
  EXPECT_EQ(ref::CountPerfectMatchings(twins), 1u);
  EXPECT_FALSE(FindForcingSet(twins));
}

}  // namespace
}  // namespace unipm
