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

#ifndef UNIPM_CLAWFREE_PM_H_
#define UNIPM_CLAWFREE_PM_H_

#include <cstdint>
#include <optional>
#include <string>

#include "graph.h"
#include "matching.h"
#include "uniqueness.h"

namespace unipm {

struct PmincfStats {
  std::uint64_t cursor_advances = 0;
  std::uint64_t lm_nb_updates = 0;
  std::uint64_t end_extensions = 0;
  std::uint64_t swap_extensions = 0;
  std::uint64_t reseeds = 0;
  std::uint64_t audited_commits = 0;
  // Sum of adjacency-list lengths of the live vertices; equals 2m when the
  // input has no removed vertices. cursor_advances never exceeds it.
  std::uint64_t adjacency_total = 0;
};

struct PmincfOptions {
  // At every commit, re-check by direct scans that the path admits neither an
  // end- nor a swap-extension, that the cached lm_nb of the last vertex is
  // exact, and that the commit did not split a component. O(n + m) per
  // commit; throws InvariantError on a violation.
  bool audit = false;
};

// Greedy path-based perfect matching for claw-free graphs. The path
// u_1..u_k is grown by end-extensions and swap-extensions until neither
// applies; then u_{k-1}u_k is matched and both are deleted. Every adjacency
// list is scanned at most once through a monotone per-vertex cursor, so the
// run is O(n + m).
//
// Requires even order (AlgorithmError "odd order"). Claw-freeness and
// connectivity are promises; if the path dies out with vertices left and no
// edge to continue from, AlgorithmError "disconnected input" is thrown.
// Disconnected graphs whose components all admit the greedy are handled by
// reseeding in each component.
Matching Pmincf(const Graph& g, const PmincfOptions& options = {},
                PmincfStats* stats = nullptr);

enum class ClawfreeVerdict { kUnique, kNotUnique, kNoPerfectMatching };

struct ClawfreeDecision {
  ClawfreeVerdict verdict = ClawfreeVerdict::kNoPerfectMatching;
  std::optional<Matching> matching;
  std::optional<AlternatingCycle> witness;
  PmincfStats stats;
};

// Linear-time unique perfect matching decision for claw-free graphs (claw
// freeness is a promise): odd components mean no perfect matching; otherwise
// PMinCF's matching is checked with FindAlternatingCycle.
ClawfreeDecision DecideClawfree(const Graph& g);

// The matching iff the claw-free graph has a unique perfect matching.
std::optional<Matching> DecideUniqueClawfree(const Graph& g);

}  // namespace unipm

#endif  // UNIPM_CLAWFREE_PM_H_
