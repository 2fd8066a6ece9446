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

#ifndef UNIPM_INTERVAL_PM_H_
#define UNIPM_INTERVAL_PM_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "graph.h"
#include "matching.h"

namespace unipm {

struct Interval {
  std::int64_t left = 0;
  std::int64_t right = 0;
};

// Closed intervals indexed by vertex. Every left < right and all 2n endpoint
// values are pairwise distinct.
class IntervalRep {
 public:
  IntervalRep() = default;
  // Throws UsageError if the invariants do not hold.
  explicit IntervalRep(std::vector<Interval> intervals);

  VertexId Order() const { return static_cast<VertexId>(intervals_.size()); }
  const Interval& operator[](VertexId v) const { return intervals_[v]; }
  const std::vector<Interval>& Intervals() const { return intervals_; }

 private:
  std::vector<Interval> intervals_;
};

// Header "n", then one line "v l r" per vertex. Rejects repeated endpoint
// values and l >= r with a ParseError.
IntervalRep ParseIntervals(std::string_view text);
std::string SerializeIntervals(const IntervalRep& rep);

// Rank-remaps endpoints to 1..2n. Ties are broken left-before-right and then
// by vertex id, which keeps touching closed intervals adjacent.
IntervalRep NormalizeEndpoints(const std::vector<Interval>& intervals);

// Edge uv iff max(l_u, l_v) < min(r_u, r_v).
Graph IntersectionGraph(const IntervalRep& rep);

struct IntervalSweepTrace {
  std::vector<std::int64_t> thresholds;  // r of the chosen u* per round
};

// Repeatedly matches the unmatched vertex u* of smallest right endpoint with
// its unmatched neighbor v* of smallest right endpoint. When the
// intersection graph has a unique perfect matching this returns it; otherwise
// it either throws AlgorithmError ("odd order", "stuck at vertex u") or
// returns some matching the caller has to verify.
Matching IntervalPerfectMatching(const IntervalRep& rep,
                                 IntervalSweepTrace* trace = nullptr);

}  // namespace unipm

#endif  // UNIPM_INTERVAL_PM_H_
