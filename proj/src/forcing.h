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

#ifndef UNIPM_FORCING_H_
#define UNIPM_FORCING_H_

#include <optional>
#include <span>
#include <vector>

#include "graph.h"
#include "matching.h"

namespace unipm {

// u_1 v_1, ..., u_k v_k: u_i has degree exactly one once u_1..u_{i-1} and
// their partners are deleted, and v_i is that single neighbor.
struct ForcingCertificate {
  std::vector<Edge> forced;  // {u_i, v_i} in elimination order
  Matching matching;
};

// Degree-one elimination. Succeeds iff some vertex set forces a unique
// perfect matching; on cographs and split graphs that is equivalent to the
// graph having a unique perfect matching. Among several degree-one vertices
// the lowest id is eliminated first.
std::optional<ForcingCertificate> FindForcingSet(const Graph& g);

// Recomputes degrees along the recorded order and checks every step.
bool VerifyForcingCertificate(const Graph& g, const ForcingCertificate& cert);

// |clique| - |independent| is 0 or 2. Throws UsageError unless the two sets
// partition the live vertices into an independent set and a clique.
bool SplitBalance(const Graph& g, std::span<const VertexId> independent,
                  std::span<const VertexId> clique);

}  // namespace unipm

#endif  // UNIPM_FORCING_H_
