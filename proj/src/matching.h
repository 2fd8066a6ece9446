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

#ifndef UNIPM_MATCHING_H_
#define UNIPM_MATCHING_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graph.h"

namespace unipm {

// Set of vertex-disjoint pairs with O(1) partner lookup.
class Matching {
 public:
  Matching() = default;
  explicit Matching(VertexId order) : partner_(order, kNoVertex) {}

  // Throws UsageError if either endpoint is already matched or u == v.
  void Add(VertexId u, VertexId v);

  std::optional<VertexId> Partner(VertexId u) const {
    if (u < 0 || u >= static_cast<VertexId>(partner_.size()) ||
        partner_[u] == kNoVertex) {
      return std::nullopt;
    }
    return partner_[u];
  }
  bool IsMatched(VertexId u) const { return Partner(u).has_value(); }

  std::span<const Edge> Pairs() const { return pairs_; }
  std::size_t Size() const { return pairs_.size(); }

  // Pairs in canonical form sorted by smaller endpoint.
  std::vector<Edge> SortedPairs() const;

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.SortedPairs() == b.SortedPairs();
  }

 private:
  std::vector<Edge> pairs_;
  std::vector<VertexId> partner_;
};

// One "u v" line per pair, sorted.
std::string FormatMatching(const Matching& m);

// True iff every pair is a live edge and every live vertex is covered
// exactly once.
bool VerifyPerfectMatching(const Graph& g, const Matching& m);

}  // namespace unipm

#endif  // UNIPM_MATCHING_H_
