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

#include "generators.h"

#include <numeric>
#include <vector>

#include "errors.h"
#include "gclass.h"

namespace unipm {

std::optional<Family> ParseFamily(std::string_view name) {
  if (name == "gclass") return Family::kGClass;
  if (name == "cograph") return Family::kCograph;
  if (name == "split") return Family::kSplit;
  if (name == "interval") return Family::kInterval;
  if (name == "clique-chain") return Family::kCliqueChain;
  return std::nullopt;
}

std::string_view FamilyName(Family family) {
  switch (family) {
    case Family::kGClass:
      return "gclass";
    case Family::kCograph:
      return "cograph";
    case Family::kSplit:
      return "split";
    case Family::kInterval:
      return "interval";
    case Family::kCliqueChain:
      return "clique-chain";
  }
  return "unknown";
}

namespace {

std::vector<VertexId> RandomLabels(VertexId n, Rng& rng) {
  std::vector<VertexId> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  rng.Shuffle(std::span<VertexId>(labels));
  return labels;
}

}  // namespace

Graph RandomCograph(VertexId n, Rng& rng) {
  Graph g(n);
  if (n == 0) return g;
  std::vector<VertexId> labels = RandomLabels(n, rng);
  // Each work item is a contiguous range of leaves under one cotree node.
  struct Node {
    VertexId begin, end;
  };
  std::vector<Node> work{{0, n}};
  while (!work.empty()) {
    Node node = work.back();
    work.pop_back();
    if (node.end - node.begin < 2) continue;
    const auto mid = static_cast<VertexId>(rng.Between(node.begin + 1, node.end - 1));
    if (rng.Chance(0.5)) {
      for (VertexId a = node.begin; a < mid; ++a) {
        for (VertexId b = mid; b < node.end; ++b) {
          g.AddEdge(labels[a], labels[b]);
        }
      }
    }
    work.push_back({node.begin, mid});
    work.push_back({mid, node.end});
  }
  return g;
}

Graph RandomSplit(VertexId n, bool unique_pm, Rng& rng,
                  SplitPartition* partition) {
  if (unique_pm && n % 2 != 0) {
    throw UsageError("unique split instances need even order");
  }
  VertexId independent;
  if (unique_pm) {
    independent = (n >= 2 && rng.Chance(0.5)) ? n / 2 - 1 : n / 2;
  } else {
    independent = static_cast<VertexId>(rng.Between(0, n));
  }
  const VertexId clique = n - independent;
  std::vector<VertexId> labels = RandomLabels(n, rng);
  // Positions [0, independent) are S, the rest C.
  auto s = [&](VertexId i) { return labels[i]; };
  auto c = [&](VertexId j) { return labels[independent + j]; };
  Graph g(n);
  for (VertexId a = 0; a < clique; ++a) {
    for (VertexId b = a + 1; b < clique; ++b) g.AddEdge(c(a), c(b));
  }
  for (VertexId i = 0; i < independent; ++i) {
    if (unique_pm) {
      // s_i sees c_i and possibly c_j for i < j < |S|; eliminating s_last
      // first peels the staircase.
      g.AddEdge(s(i), c(i));
      for (VertexId j = i + 1; j < independent; ++j) {
        if (rng.Chance(0.5)) g.AddEdge(s(i), c(j));
      }
    } else {
      for (VertexId j = 0; j < clique; ++j) {
        if (rng.Chance(0.5)) g.AddEdge(s(i), c(j));
      }
    }
  }
  if (partition) {
    partition->independent.assign(labels.begin(), labels.begin() + independent);
    partition->clique.assign(labels.begin() + independent, labels.end());
  }
  return g;
}

IntervalRep RandomIntervals(VertexId n, Rng& rng) {
  std::vector<std::int64_t> ends(2 * static_cast<std::size_t>(n));
  std::iota(ends.begin(), ends.end(), 1);
  rng.Shuffle(std::span<std::int64_t>(ends));
  std::vector<Interval> intervals(n);
  for (VertexId v = 0; v < n; ++v) {
    const std::int64_t a = ends[2 * v];
    const std::int64_t b = ends[2 * v + 1];
    intervals[v] = {std::min(a, b), std::max(a, b)};
  }
  return IntervalRep(std::move(intervals));
}

Instance GenerateInstance(Family family, VertexId size, std::uint64_t seed,
                          bool unique_pm) {
  if (size < 0 || size % 2 != 0) {
    throw UsageError("instance size must be a non-negative even number");
  }
  Rng rng(seed);
  switch (family) {
    case Family::kGClass: {
      if (size < 2) throw UsageError("gclass instances have at least 2 vertices");
      GClassMember member = RandomGClass((size - 2) / 2, 0.5, seed);
      return {SerializeGraph(member.graph), FormatTrace(member.trace)};
    }
    case Family::kCliqueChain: {
      if (size < 2) {
        throw UsageError("clique-chain instances have at least 2 vertices");
      }
      GClassMember member = CliqueChain((size - 2) / 2);
      return {SerializeGraph(member.graph), FormatTrace(member.trace)};
    }
    case Family::kCograph:
      return {SerializeGraph(RandomCograph(size, rng)), std::nullopt};
    case Family::kSplit:
      return {SerializeGraph(RandomSplit(size, unique_pm, rng)), std::nullopt};
    case Family::kInterval:
      return {SerializeIntervals(RandomIntervals(size, rng)), std::nullopt};
  }
  throw UsageError("unknown family");
}

}  // namespace unipm
