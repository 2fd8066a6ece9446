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

#include "structure.h"

#include <algorithm>
#include <cstdint>

#include "errors.h"

namespace unipm {

std::optional<Claw> FindClaw(const Graph& g) {
  const VertexId n = g.TotalCount();
  // Stamps: mark_a[w] == a means w is adjacent to the current first leaf.
  std::vector<VertexId> mark_a(n, kNoVertex);
  std::vector<VertexId> mark_b(n, kNoVertex);
  for (VertexId c = 0; c < n; ++c) {
    if (!g.IsLive(c)) continue;
    std::vector<VertexId> leaves = g.LiveNeighbors(c);
    const std::size_t d = leaves.size();
    if (d < 3) continue;
    for (std::size_t i = 0; i + 2 < d; ++i) {
      const VertexId a = leaves[i];
      for (VertexId w : g.Adjacency(a)) mark_a[w] = a;
      for (std::size_t j = i + 1; j + 1 < d; ++j) {
        const VertexId b = leaves[j];
        if (mark_a[b] == a) continue;
        for (VertexId w : g.Adjacency(b)) mark_b[w] = b;
        for (std::size_t k = j + 1; k < d; ++k) {
          const VertexId x = leaves[k];
          if (mark_a[x] != a && mark_b[x] != b) return Claw{c, {a, b, x}};
        }
      }
    }
  }
  return std::nullopt;
}

bool IsSimplicial(const Graph& g, VertexId u) {
  if (!g.IsLive(u)) {
    throw UsageError("vertex " + std::to_string(u) + " is not live");
  }
  std::vector<VertexId> nbrs = g.LiveNeighbors(u);
  return IsClique(g, nbrs);
}

bool IsClique(const Graph& g, std::span<const VertexId> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!g.Adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

namespace {

struct Frame {
  VertexId v;
  VertexId parent;
  std::size_t next;
};

}  // namespace

std::vector<Edge> FindBridges(const Graph& g) {
  const VertexId n = g.TotalCount();
  std::vector<VertexId> tin(n, -1);
  std::vector<VertexId> low(n, -1);
  std::vector<Edge> bridges;
  std::vector<Frame> stack;
  VertexId timer = 0;
  for (VertexId root = 0; root < n; ++root) {
    if (!g.IsLive(root) || tin[root] != -1) continue;
    tin[root] = low[root] = timer++;
    stack.push_back({root, kNoVertex, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto adj = g.Adjacency(f.v);
      if (f.next < adj.size()) {
        const VertexId w = adj[f.next++];
        if (!g.IsLive(w) || w == f.parent) continue;
        if (tin[w] != -1) {
          low[f.v] = std::min(low[f.v], tin[w]);
        } else {
          tin[w] = low[w] = timer++;
          stack.push_back({w, f.v, 0});
        }
        continue;
      }
      const VertexId v = f.v;
      const VertexId p = f.parent;
      stack.pop_back();
      if (p == kNoVertex) continue;
      low[p] = std::min(low[p], low[v]);
      if (low[v] > tin[p]) bridges.push_back(Edge{p, v}.Canonical());
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

std::vector<std::vector<VertexId>> ConnectedComponents(const Graph& g) {
  const VertexId n = g.TotalCount();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> queue;
  for (VertexId s = 0; s < n; ++s) {
    if (!g.IsLive(s) || seen[s]) continue;
    queue.assign(1, s);
    seen[s] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (VertexId w : g.Adjacency(queue[head])) {
        if (g.IsLive(w) && !seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    out.push_back(queue);
  }
  return out;
}

bool IsConnected(const Graph& g) {
  return ConnectedComponents(g).size() <= 1;
}

std::vector<std::vector<VertexId>> Blocks(const Graph& g) {
  const VertexId n = g.TotalCount();
  std::vector<VertexId> tin(n, -1);
  std::vector<VertexId> low(n, -1);
  std::vector<Edge> edge_stack;
  std::vector<Frame> stack;
  std::vector<std::vector<VertexId>> blocks;
  std::vector<VertexId> stamp(n, -1);
  VertexId timer = 0;
  for (VertexId root = 0; root < n; ++root) {
    if (!g.IsLive(root) || tin[root] != -1) continue;
    tin[root] = low[root] = timer++;
    stack.push_back({root, kNoVertex, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto adj = g.Adjacency(f.v);
      if (f.next < adj.size()) {
        const VertexId w = adj[f.next++];
        if (!g.IsLive(w) || w == f.parent) continue;
        if (tin[w] != -1) {
          if (tin[w] < tin[f.v]) {
            edge_stack.push_back({f.v, w});
            low[f.v] = std::min(low[f.v], tin[w]);
          }
        } else {
          edge_stack.push_back({f.v, w});
          tin[w] = low[w] = timer++;
          stack.push_back({w, f.v, 0});
        }
        continue;
      }
      const VertexId v = f.v;
      const VertexId p = f.parent;
      stack.pop_back();
      if (p == kNoVertex) continue;
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= tin[p]) {
        const VertexId id = static_cast<VertexId>(blocks.size());
        std::vector<VertexId> block;
        while (true) {
          Edge e = edge_stack.back();
          edge_stack.pop_back();
          for (VertexId x : {e.u, e.v}) {
            if (stamp[x] != id) {
              stamp[x] = id;
              block.push_back(x);
            }
          }
          if (e.u == p && e.v == v) break;
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
      }
    }
  }
  return blocks;
}

std::vector<Endblock> Endblocks(const Graph& g) {
  if (g.LiveCount() < 2) throw UsageError("endblocks need at least 2 vertices");
  if (!IsConnected(g)) throw UsageError("endblocks need a connected graph");
  std::vector<std::vector<VertexId>> blocks = Blocks(g);
  std::vector<int> membership(g.TotalCount(), 0);
  for (const auto& b : blocks) {
    for (VertexId x : b) ++membership[x];
  }
  std::vector<Endblock> out;
  for (auto& b : blocks) {
    std::optional<VertexId> cut;
    int cuts = 0;
    for (VertexId x : b) {
      if (membership[x] >= 2) {
        ++cuts;
        cut = x;
      }
    }
    if (cuts <= 1) out.push_back({std::move(b), cut});
  }
  return out;
}

bool IsCographBruteforce(const Graph& g) {
  const std::vector<VertexId> vs = g.LiveVertices();
  const std::size_t n = vs.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        for (std::size_t d = c + 1; d < n; ++d) {
          const std::array<VertexId, 4> q{vs[a], vs[b], vs[c], vs[d]};
          std::array<int, 4> deg{};
          int edges = 0;
          for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
              if (g.Adjacent(q[i], q[j])) {
                ++deg[i];
                ++deg[j];
                ++edges;
              }
            }
          }
          // Three edges with degree multiset {1,1,2,2} is exactly P4.
          std::sort(deg.begin(), deg.end());
          if (edges == 3 && deg == std::array<int, 4>{1, 1, 2, 2}) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

std::optional<SplitPartition> IsSplitBruteforce(const Graph& g) {
  const std::vector<VertexId> vs = g.LiveVertices();
  const std::size_t n = vs.size();
  if (n > 24) throw UsageError("split brute force limited to 24 vertices");
  std::vector<std::uint32_t> adj(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && g.Adjacent(vs[i], vs[j])) adj[i] |= 1u << j;
    }
  }
  const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
  for (std::uint32_t s = 0; s <= all; ++s) {
    const std::uint32_t c = all & ~s;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      const std::uint32_t bit = 1u << i;
      if (s & bit) {
        ok = (adj[i] & s) == 0;
      } else {
        ok = ((adj[i] | bit) & c) == c;
      }
    }
    if (ok) {
      SplitPartition part;
      for (std::size_t i = 0; i < n; ++i) {
        ((s >> i) & 1u ? part.independent : part.clique).push_back(vs[i]);
      }
      return part;
    }
    if (s == all) break;
  }
  return std::nullopt;
}

}  // namespace unipm
