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

#include "forcing.h"

#include <functional>
#include <queue>

#include "errors.h"
#include "structure.h"

namespace unipm {

std::optional<ForcingCertificate> FindForcingSet(const Graph& g) {
  if (g.LiveCount() % 2 != 0) return std::nullopt;
  const VertexId n = g.TotalCount();
  std::vector<int> degree(n, 0);
  std::vector<char> gone(n, 1);
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ones;
  for (VertexId u = 0; u < n; ++u) {
    if (!g.IsLive(u)) continue;
    gone[u] = 0;
    degree[u] = g.LiveDegree(u);
    if (degree[u] == 0) return std::nullopt;
    if (degree[u] == 1) ones.push(u);
  }

  ForcingCertificate cert;
  cert.matching = Matching(n);
  VertexId remaining = g.LiveCount();
  // Deleting x lowers its neighbors' degrees; returns false when some
  // neighbor becomes isolated and can never be matched.
  auto remove = [&](VertexId x) {
    gone[x] = 1;
    bool ok = true;
    for (VertexId w : g.Adjacency(x)) {
      if (gone[w]) continue;
      if (--degree[w] == 1) ones.push(w);
      if (degree[w] == 0) ok = false;
    }
    return ok;
  };
  while (!ones.empty()) {
    const VertexId u = ones.top();
    ones.pop();
    if (gone[u]) continue;
    if (degree[u] != 1) return std::nullopt;
    VertexId v = kNoVertex;
    for (VertexId w : g.Adjacency(u)) {
      if (!gone[w]) {
        v = w;
        break;
      }
    }
    cert.forced.push_back({u, v});
    cert.matching.Add(u, v);
    gone[u] = 1;
    if (!remove(v)) return std::nullopt;
    remaining -= 2;
  }
  if (remaining != 0) return std::nullopt;
  return cert;
}

bool VerifyForcingCertificate(const Graph& g, const ForcingCertificate& cert) {
  if (2 * static_cast<VertexId>(cert.forced.size()) != g.LiveCount()) {
    return false;
  }
  Graph h = g;
  Matching expected(g.TotalCount());
  for (const Edge& step : cert.forced) {
    if (!h.IsLive(step.u)) return false;
    std::vector<VertexId> nbrs = h.LiveNeighbors(step.u);
    if (nbrs.size() != 1 || nbrs[0] != step.v) return false;
    expected.Add(step.u, step.v);
    h.RemoveVertex(step.u);
    h.RemoveVertex(step.v);
  }
  return expected == cert.matching;
}

bool SplitBalance(const Graph& g, std::span<const VertexId> independent,
                  std::span<const VertexId> clique) {
  std::vector<int> hits(g.TotalCount(), 0);
  for (auto part : {independent, clique}) {
    for (VertexId x : part) {
      if (!g.IsLive(x)) throw UsageError("partition contains a dead vertex");
      if (++hits[x] > 1) throw UsageError("partition sets overlap");
    }
  }
  if (static_cast<VertexId>(independent.size() + clique.size()) !=
      g.LiveCount()) {
    throw UsageError("partition does not cover the live vertices");
  }
  for (std::size_t i = 0; i < independent.size(); ++i) {
    for (std::size_t j = i + 1; j < independent.size(); ++j) {
      if (g.Adjacent(independent[i], independent[j])) {
        throw UsageError("independent side contains an edge");
      }
    }
  }
  if (!IsClique(g, clique)) throw UsageError("clique side is not a clique");
  const auto diff = static_cast<long>(clique.size()) -
                    static_cast<long>(independent.size());
  return diff == 0 || diff == 2;
}

}  // namespace unipm
