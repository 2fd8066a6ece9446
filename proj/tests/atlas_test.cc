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

#include "atlas.h"

#include <gtest/gtest.h>

#include "reference.h"

namespace unipm {
namespace {

// Counts of graphs and connected graphs up to isomorphism (OEIS A000088,
// A001349).
TEST(Atlas, ClassCountsMatchKnownSequences) {
  const int total[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346};
  const int connected[] = {1, 1, 1, 2, 6, 21, 112, 853, 11117};
  for (int n = 1; n <= 8; ++n) {
    const auto& codes = atlas::Unlabeled(n);
    EXPECT_EQ(static_cast<int>(codes.size()), total[n]) << n;
    int c = 0;
    for (atlas::Code code : codes) c += ref::IsConnected(atlas::FromCode(n, code));
    EXPECT_EQ(c, connected[n]) << n;
  }
}

TEST(Atlas, LabeledCount) {
  int graphs = 0;
  int connected = 0;
  atlas::ForEachLabeled(4, [&](const Graph& g) {
    ++graphs;
    connected += ref::IsConnected(g);
  });
  EXPECT_EQ(graphs, 64);
  EXPECT_EQ(connected, 38);
}

TEST(Atlas, RelabelPreservesShape) {
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    Graph g = atlas::RandomConnected(8, rng);
    Graph h = atlas::Relabel(g, rng);
    EXPECT_EQ(h.EdgeCount(), g.EdgeCount());
    EXPECT_TRUE(ref::IsConnected(h));
    EXPECT_EQ(ref::CountPerfectMatchings(h), ref::CountPerfectMatchings(g));
  }
}

}  // namespace
}  // namespace unipm
