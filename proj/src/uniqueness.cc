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

#include "uniqueness.h"

#include <algorithm>
#include <deque>
#include <functional>

#include "errors.h"
#include "structure.h"

namespace unipm {

std::vector<Matching> EnumeratePerfectMatchings(const Graph& g,
                                                std::size_t cap) {
  std::vector<Matching> found;
  if (cap == 0 || g.LiveCount() % 2 != 0) return found;
  const VertexId n = g.TotalCount();
  std::vector<VertexId> mate(n, kNoVertex);
  std::vector<Edge> chosen;

  std::function<void(VertexId)> extend = [&](VertexId from) {
    while (from < n && (!g.IsLive(from) || mate[from] != kNoVertex)) ++from;
    if (from == n) {
      Matching m(n);
      for (const Edge& e : chosen) m.Add(e.u, e.v);
      found.push_back(std::move(m));
      return;
    }
    for (VertexId w : g.Adjacency(from)) {
      if (!g.IsLive(w) || mate[w] != kNoVertex) continue;
      mate[from] = w;
      mate[w] = from;
      chosen.push_back({from, w});
      extend(from + 1);
      chosen.pop_back();
      mate[from] = mate[w] = kNoVertex;
      if (found.size() >= cap) return;
    }
  };
  extend(0);
  return found;
}

namespace {

// Rotates a closed alternating walk so that it starts at its smallest vertex
// and continues along that vertex's matched edge.
AlternatingCycle Normalize(std::vector<VertexId> open,
                           const std::vector<VertexId>& mate) {
  std::size_t r = std::min_element(open.begin(), open.end()) - open.begin();
  std::rotate(open.begin(), open.begin() + r, open.end());
  if (mate[open[0]] != open[1]) std::reverse(open.begin() + 1, open.end());
  open.push_back(open[0]);
  return AlternatingCycle{std::move(open)};
}

// Augmenting-path search (Edmonds, with blossom shrinking by base relabel)
// restricted to the vertices flagged in `in_sub`. Only `root` and `target`
// are exposed in `mate`; the edge {root, target} is ignored.
class BlossomSearch {
 public:
  BlossomSearch(const Graph& g, std::vector<VertexId>& mate,
                const std::vector<char>& in_sub,
                const std::vector<VertexId>& sub)
      : g_(g),
        mate_(mate),
        in_sub_(in_sub),
        sub_(sub),
        parent_(g.TotalCount(), kNoVertex),
        base_(g.TotalCount(), kNoVertex),
        used_(g.TotalCount(), 0),
        blossom_(g.TotalCount(), 0),
        lca_mark_(g.TotalCount(), 0) {}

  // Returns the path target, ..., root or an empty vector.
  std::vector<VertexId> Find(VertexId root, VertexId target) {
    root_ = root;
    target_ = target;
    for (VertexId x : sub_) {
      parent_[x] = kNoVertex;
      base_[x] = x;
      used_[x] = 0;
    }
    std::deque<VertexId> queue{root};
    used_[root] = 1;
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (VertexId to : g_.Adjacency(v)) {
        if (!in_sub_[to] || !g_.IsLive(to) || Forbidden(v, to)) continue;
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root ||
            (mate_[to] != kNoVertex && parent_[mate_[to]] != kNoVertex)) {
          const VertexId cur = Lca(v, to);
          for (VertexId x : sub_) blossom_[x] = 0;
          MarkPath(v, cur, to);
          MarkPath(to, cur, v);
          for (VertexId x : sub_) {
            if (blossom_[base_[x]]) {
              base_[x] = cur;
              if (!used_[x]) {
                used_[x] = 1;
                queue.push_back(x);
              }
            }
          }
        } else if (parent_[to] == kNoVertex) {
          parent_[to] = v;
          if (mate_[to] == kNoVertex) return Trace(to);
          used_[mate_[to]] = 1;
          queue.push_back(mate_[to]);
        }
      }
    }
    return {};
  }

 private:
  bool Forbidden(VertexId v, VertexId to) const {
    return (v == root_ && to == target_) || (v == target_ && to == root_);
  }

  VertexId Lca(VertexId a, VertexId b) {
    ++lca_stamp_;
    while (true) {
      a = base_[a];
      lca_mark_[a] = lca_stamp_;
      if (mate_[a] == kNoVertex) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (lca_mark_[b] == lca_stamp_) return b;
      b = parent_[mate_[b]];
    }
  }

  void MarkPath(VertexId v, VertexId b, VertexId child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  std::vector<VertexId> Trace(VertexId end) const {
    std::vector<VertexId> path;
    VertexId v = end;
    while (v != kNoVertex) {
      const VertexId pv = parent_[v];
      path.push_back(v);
      path.push_back(pv);
      v = mate_[pv];
    }
    return path;
  }

  const Graph& g_;
  std::vector<VertexId>& mate_;
  const std::vector<char>& in_sub_;
  const std::vector<VertexId>& sub_;
  std::vector<VertexId> parent_;
  std::vector<VertexId> base_;
  std::vector<char> used_;
  std::vector<char> blossom_;
  std::vector<std::uint32_t> lca_mark_;
  std::uint32_t lca_stamp_ = 0;
  VertexId root_ = kNoVertex;
  VertexId target_ = kNoVertex;
};

// Iterative Tarjan SCC over the alternating digraph. Marks vertices whose
// component has at least two members.
std::vector<char> NontrivialComponents(const Graph& g,
                                       const std::vector<VertexId>& mate) {
  const VertexId n = g.TotalCount();
  std::vector<VertexId> index(n, -1);
  std::vector<VertexId> low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<VertexId> scc_stack;
  std::vector<char> result(n, 0);
  struct Frame {
    VertexId v;
    std::size_t next;
  };
  std::vector<Frame> stack;
  VertexId counter = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (!g.IsLive(s) || index[s] != -1) continue;
    index[s] = low[s] = counter++;
    scc_stack.push_back(s);
    on_stack[s] = 1;
    stack.push_back({s, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const VertexId v = f.v;
      auto adj = g.Adjacency(v);
      if (f.next < adj.size()) {
        const VertexId y = adj[f.next++];
        if (!g.IsLive(y) || y == mate[v]) continue;
        const VertexId w = mate[y];
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          scc_stack.push_back(w);
          on_stack[w] = 1;
          stack.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      stack.pop_back();
      if (!stack.empty()) {
        const VertexId p = stack.back().v;
        low[p] = std::min(low[p], low[v]);
      }
      if (low[v] == index[v]) {
        std::size_t start = scc_stack.size();
        do {
          --start;
        } while (scc_stack[start] != v);
        const bool big = scc_stack.size() - start >= 2;
        for (std::size_t i = start; i < scc_stack.size(); ++i) {
          on_stack[scc_stack[i]] = 0;
          result[scc_stack[i]] = big ? 1 : 0;
        }
        scc_stack.resize(start);
      }
    }
  }
  return result;
}

// Finds some directed cycle x_1 -> ... -> x_t -> x_1 of the alternating
// digraph, or returns an empty vector.
std::vector<VertexId> FindDigraphCycle(const Graph& g,
                                       const std::vector<VertexId>& mate) {
  const VertexId n = g.TotalCount();
  enum : char { kWhite, kGray, kBlack };
  std::vector<char> color(n, kWhite);
  struct Frame {
    VertexId v;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (!g.IsLive(s) || color[s] != kWhite) continue;
    color[s] = kGray;
    stack.push_back({s, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const VertexId v = f.v;
      auto adj = g.Adjacency(v);
      if (f.next < adj.size()) {
        const VertexId y = adj[f.next++];
        if (!g.IsLive(y) || y == mate[v]) continue;
        const VertexId w = mate[y];
        if (color[w] == kWhite) {
          color[w] = kGray;
          stack.push_back({w, 0});
        } else if (color[w] == kGray) {
          std::vector<VertexId> cycle;
          std::size_t i = stack.size();
          do {
            --i;
          } while (stack[i].v != w);
          for (; i < stack.size(); ++i) cycle.push_back(stack[i].v);
          return cycle;
        }
        continue;
      }
      color[v] = kBlack;
      stack.pop_back();
    }
  }
  return {};
}

}  // namespace

std::optional<AlternatingCycle> FindAlternatingCycle(const Graph& g,
                                                     const Matching& m,
                                                     UniquenessStats* stats) {
  if (!VerifyPerfectMatching(g, m)) {
    throw UsageError("matching is not a perfect matching of the graph");
  }
  UniquenessStats local;
  UniquenessStats& st = stats ? *stats : local;
  st = UniquenessStats{};
  const VertexId n = g.TotalCount();
  std::vector<VertexId> mate(n, kNoVertex);
  for (const Edge& e : m.Pairs()) {
    mate[e.u] = e.v;
    mate[e.v] = e.u;
  }

  std::vector<VertexId> dcycle = FindDigraphCycle(g, mate);
  if (dcycle.empty()) return std::nullopt;
  st.digraph_has_cycle = true;

  // Expansion x_1, m(x_2), x_2, m(x_3), ..., x_t, m(x_1).
  std::vector<VertexId> walk;
  walk.reserve(2 * dcycle.size());
  for (std::size_t i = 0; i < dcycle.size(); ++i) {
    walk.push_back(dcycle[i]);
    walk.push_back(mate[dcycle[(i + 1) % dcycle.size()]]);
  }
  std::vector<VertexId> sorted = walk;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) {
    return Normalize(std::move(walk), mate);
  }

  st.used_exact_search = true;
  std::vector<char> in_sub = NontrivialComponents(g, mate);
  std::vector<VertexId> sub;
  for (VertexId x = 0; x < n; ++x) {
    if (in_sub[x]) sub.push_back(x);
  }
  BlossomSearch search(g, mate, in_sub, sub);
  for (VertexId a : sub) {
    const VertexId b = mate[a];
    if (b < a || !in_sub[b]) continue;
    mate[a] = mate[b] = kNoVertex;
    ++st.blossom_searches;
    std::vector<VertexId> path = search.Find(a, b);
    mate[a] = b;
    mate[b] = a;
    if (!path.empty()) {
      // path runs b ... a; closing it with the matched edge a b gives the
      // alternating cycle.
      AlternatingCycle cycle = Normalize(std::move(path), mate);
      if (!IsValidAlternatingCycle(g, m, cycle)) {
        throw InvariantError("blossom search produced an invalid cycle");
      }
      return cycle;
    }
  }
  return std::nullopt;
}

bool KotzigPeel(const Graph& g, const Matching& m,
                std::size_t* bridge_recomputations) {
  if (!VerifyPerfectMatching(g, m)) {
    throw UsageError("matching is not a perfect matching of the graph");
  }
  Graph h = g;
  std::size_t rounds = 0;
  bool unique = true;
  while (h.LiveCount() > 0) {
    std::vector<Edge> bridges = FindBridges(h);
    ++rounds;
    std::vector<Edge> matched;
    for (const Edge& e : bridges) {
      if (m.Partner(e.u) == e.v) matched.push_back(e);
    }
    if (matched.empty()) {
      unique = false;
      break;
    }
    // Deleting vertices never creates cycles, so every matched bridge found
    // in this round stays a bridge while the others are peeled.
    for (const Edge& e : matched) {
      h.RemoveVertex(e.u);
      h.RemoveVertex(e.v);
    }
  }
  if (bridge_recomputations) *bridge_recomputations = rounds;
  return unique;
}

bool IsValidAlternatingCycle(const Graph& g, const Matching& m,
                             const AlternatingCycle& cycle) {
  const auto& c = cycle.vertices;
  if (c.size() < 5 || c.size() % 2 == 0 || c.front() != c.back()) return false;
  std::vector<VertexId> inner(c.begin(), c.end() - 1);
  std::sort(inner.begin(), inner.end());
  if (std::adjacent_find(inner.begin(), inner.end()) != inner.end()) {
    return false;
  }
  const bool first_matched = m.Partner(c[0]) == c[1];
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    if (!g.Adjacent(c[i], c[i + 1])) return false;
    const bool matched = m.Partner(c[i]) == c[i + 1];
    if (matched != (first_matched == (i % 2 == 0))) return false;
  }
  return true;
}

Matching SwapAlongCycle(const Graph& g, const Matching& m,
                        const AlternatingCycle& cycle) {
  if (!IsValidAlternatingCycle(g, m, cycle)) {
    throw UsageError("not an alternating cycle of the matching");
  }
  const auto& c = cycle.vertices;
  std::vector<char> on_cycle(g.TotalCount(), 0);
  for (VertexId x : c) on_cycle[x] = 1;
  Matching out(g.TotalCount());
  for (const Edge& e : m.Pairs()) {
    if (!on_cycle[e.u]) out.Add(e.u, e.v);
  }
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    if (m.Partner(c[i]) != c[i + 1]) out.Add(c[i], c[i + 1]);
  }
  return out;
}

}  // namespace unipm
