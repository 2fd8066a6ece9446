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

#include "matching.h"

#include <algorithm>
#include <sstream>

#include "errors.h"

namespace unipm {

void Matching::Add(VertexId u, VertexId v) {
  if (u < 0 || v < 0 || u == v) throw UsageError("invalid matching pair");
  const VertexId need = std::max(u, v) + 1;
  if (static_cast<VertexId>(partner_.size()) < need) {
    partner_.resize(need, kNoVertex);
  }
  if (partner_[u] != kNoVertex || partner_[v] != kNoVertex) {
    throw UsageError("vertex already matched in pair " + std::to_string(u) +
                     " " + std::to_string(v));
  }
  partner_[u] = v;
  partner_[v] = u;
  pairs_.push_back({u, v});
}

std::vector<Edge> Matching::SortedPairs() const {
  std::vector<Edge> out;
  out.reserve(pairs_.size());
  for (const Edge& e : pairs_) out.push_back(e.Canonical());
  std::sort(out.begin(), out.end());
  return out;
}

std::string FormatMatching(const Matching& m) {
  std::ostringstream out;
  for (const Edge& e : m.SortedPairs()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

bool VerifyPerfectMatching(const Graph& g, const Matching& m) {
  std::vector<char> covered(g.TotalCount(), 0);
  for (const Edge& e : m.Pairs()) {
    if (!g.Adjacent(e.u, e.v)) return false;
    if (covered[e.u] || covered[e.v]) return false;
    covered[e.u] = covered[e.v] = 1;
  }
  for (VertexId u = 0; u < g.TotalCount(); ++u) {
    if (g.IsLive(u) && !covered[u]) return false;
  }
  return true;
}

}  // namespace unipm
