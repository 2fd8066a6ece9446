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

#ifndef UNIPM_GENERATORS_H_
#define UNIPM_GENERATORS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "graph.h"
#include "interval_pm.h"
#include "random.h"
#include "structure.h"

namespace unipm {

enum class Family { kGClass, kCograph, kSplit, kInterval, kCliqueChain };

std::optional<Family> ParseFamily(std::string_view name);
std::string_view FamilyName(Family family);

// Random cotree: every internal node is a disjoint union or a join, with the
// leaves relabelled by a random permutation.
Graph RandomCograph(VertexId n, Rng& rng);

// Random clique plus independent set with random S-C edges. With
// `unique_pm`, n must be even, |C| - |S| is 0 or 2 and the S-C edges form a
// staircase that forces a unique perfect matching.
Graph RandomSplit(VertexId n, bool unique_pm, Rng& rng,
                  SplitPartition* partition = nullptr);

// Endpoints are a random permutation of 1..2n paired up.
IntervalRep RandomIntervals(VertexId n, Rng& rng);

struct Instance {
  std::string text;                 // graph or interval file
  std::optional<std::string> trace;  // gclass and clique-chain only
};

// `size` is the vertex count and must be even. Throws UsageError otherwise.
Instance GenerateInstance(Family family, VertexId size, std::uint64_t seed,
                          bool unique_pm = false);

}  // namespace unipm

#endif  // UNIPM_GENERATORS_H_
