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

#ifndef UNIPM_UNIQUENESS_H_
#define UNIPM_UNIQUENESS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "graph.h"
#include "matching.h"

namespace unipm {

// Closed walk c_0 c_1 ... c_L with c_L == c_0, L even, the inner vertices
// distinct, and edges alternating between the matching and its complement.
// Normalized to start at its smallest vertex and to leave it along its
// matched edge.
struct AlternatingCycle {
  std::vector<VertexId> vertices;
};

// Exhaustive backtracking: the lowest-id unmatched live vertex is matched to
// each unmatched live neighbor in adjacency order. Stops after `cap`
// matchings. Intended for small graphs only.
std::vector<Matching> EnumeratePerfectMatchings(const Graph& g,
                                                std::size_t cap);

struct UniquenessStats {
  bool digraph_has_cycle = false;
  bool used_exact_search = false;
  std::size_t blossom_searches = 0;
};

// Returns an M-alternating cycle, or nullopt iff `m` is the unique perfect
// matching of `g`. Throws UsageError if `m` is not a perfect matching.
//
// The fast path builds the digraph with arcs x -> m(y) for every non-matching
// edge xy. Every alternating cycle shows up as a directed cycle there, so an
// acyclic digraph proves uniqueness in linear time. The converse fails
// outside bipartite graphs (a directed cycle may expand to a closed walk that
// uses a matched edge twice), so when the first directed cycle found does not
// expand to a simple cycle, an exact blossom search is run for every matched
// edge inside the nontrivial strongly connected part of the digraph.
std::optional<AlternatingCycle> FindAlternatingCycle(
    const Graph& g, const Matching& m, UniquenessStats* stats = nullptr);

// Repeatedly removes the endpoints of matched bridges. True iff the graph
// empties, which holds iff `m` is the unique perfect matching.
// Throws UsageError if `m` is not a perfect matching.
bool KotzigPeel(const Graph& g, const Matching& m,
                std::size_t* bridge_recomputations = nullptr);

bool IsValidAlternatingCycle(const Graph& g, const Matching& m,
                             const AlternatingCycle& cycle);

// The second perfect matching m xor cycle.
Matching SwapAlongCycle(const Graph& g, const Matching& m,
                        const AlternatingCycle& cycle);

}  // namespace unipm

#endif  // UNIPM_UNIQUENESS_H_
