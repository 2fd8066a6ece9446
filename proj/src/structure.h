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

#ifndef UNIPM_STRUCTURE_H_
#define UNIPM_STRUCTURE_H_

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "graph.h"

// Structural primitives over the live part of a Graph.

namespace unipm {

struct Claw {
  VertexId center = kNoVertex;
  std::array<VertexId, 3> leaves{};
};

// Returns an induced K_{1,3} if one exists.
std::optional<Claw> FindClaw(const Graph& g);

// Throws UsageError when u is not live.
bool IsSimplicial(const Graph& g, VertexId u);

// True iff every pair of `vertices` is adjacent. Empty sets and singletons
// are cliques.
bool IsClique(const Graph& g, std::span<const VertexId> vertices);

// Bridges of the live graph in canonical sorted order (lowpoint DFS).
std::vector<Edge> FindBridges(const Graph& g);

// Connected components of the live graph, each sorted, ordered by smallest
// member.
std::vector<std::vector<VertexId>> ConnectedComponents(const Graph& g);
bool IsConnected(const Graph& g);

// Blocks (maximal 2-connected subgraphs and bridges) of the live graph, each
// as a sorted vertex set, in DFS discovery order. Isolated vertices form no
// block.
std::vector<std::vector<VertexId>> Blocks(const Graph& g);

struct Endblock {
  std::vector<VertexId> vertices;
  std::optional<VertexId> cutvertex;
};

// Blocks with at most one cutvertex. Requires a connected live graph with at
// least two vertices; throws UsageError otherwise.
std::vector<Endblock> Endblocks(const Graph& g);

// Test-scale recognizers with no complexity guarantee.
bool IsCographBruteforce(const Graph& g);

struct SplitPartition {
  std::vector<VertexId> independent;
  std::vector<VertexId> clique;
};

// Searches independent-set masks in increasing numeric order and returns the
// first valid partition. At most 24 live vertices.
std::optional<SplitPartition> IsSplitBruteforce(const Graph& g);

}  // namespace unipm

#endif  // UNIPM_STRUCTURE_H_
