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

#include "clawfree_pm.h"

#include <span>
#include <utility>
#include <vector>

#include "errors.h"
#include "structure.h"

namespace unipm {
namespace {

class PathRunner {
 public:
  PathRunner(const Graph& g, const PmincfOptions& options, PmincfStats& stats)
      : g_(g), options_(options), stats_(stats), state_(g.TotalCount()) {
    // Flat copy of the adjacency; the walk is dominated by cache misses on
    // large inputs.
    offset_.reserve(g.TotalCount() + 1);
    offset_.push_back(0);
    flat_.reserve(2 * g.EdgeCount());
    for (VertexId u = 0; u < g.TotalCount(); ++u) {
      auto adj = g.Adjacency(u);
      flat_.insert(flat_.end(), adj.begin(), adj.end());
      offset_.push_back(static_cast<std::uint32_t>(flat_.size()));
      if (g.IsLive(u)) {
        stats_.adjacency_total += adj.size();
      } else {
        state_[u].removed = 1;
      }
    }
  }

  Matching Run() {
    VertexId live = g_.LiveCount();
    if (live % 2 != 0) throw AlgorithmError("odd order");
    Matching m(g_.TotalCount());
    if (options_.audit) components_ = ConnectedComponents(g_).size();
    VertexId seed = 0;
    while (live >= 2) {
      if (path_.empty()) {
        while (state_[seed].removed) ++seed;
        const VertexId next = NextFree(seed);
        if (next == kNoVertex) {
          throw AlgorithmError("disconnected input: vertex " +
                               std::to_string(seed) + " has no live neighbor");
        }
        Push(seed);
        Push(next);
        ++stats_.reseeds;
      }
      Extend();
      if (path_.size() < 2) {
        throw AlgorithmError("disconnected input: vertex " +
                             std::to_string(path_.back()) +
                             " has no live neighbor");
      }
      if (options_.audit) AuditBeforeCommit();
      const VertexId b = path_.back();
      path_.pop_back();
      const VertexId a = path_.back();
      path_.pop_back();
      m.Add(a, b);
      for (VertexId x : {a, b}) {
        state_[x].removed = 1;
        state_[x].on_path = 0;
      }
      live -= 2;
      if (options_.audit) AuditAfterCommit();
    }
    if (stats_.cursor_advances > stats_.adjacency_total) {
      throw InvariantError("cursor advanced past the adjacency total");
    }
    return m;
  }

 private:
  struct VertexState {
    std::uint32_t cursor = 0;
    std::uint32_t mark = 0;
    int lm_nb = -1;
    char removed = 0;
    char on_path = 0;
  };

  std::span<const VertexId> Adj(VertexId u) const {
    return {flat_.data() + offset_[u], flat_.data() + offset_[u + 1]};
  }
  bool Free(VertexId x) const {
    return !state_[x].removed && !state_[x].on_path;
  }

  void Push(VertexId v) {
    path_.push_back(v);
    state_[v].on_path = 1;
  }

  // First live off-path neighbor of w at or after its cursor. Entries that
  // are removed or on the path are consumed for good: a vertex leaves the
  // path only by being deleted.
  VertexId NextFree(VertexId w) {
    auto adj = Adj(w);
    std::uint32_t& c = state_[w].cursor;
    while (c < adj.size()) {
      const VertexId x = adj[c];
      if (Free(x)) return x;
      ++c;
      ++stats_.cursor_advances;
    }
    return kNoVertex;
  }

  // Largest l such that the last vertex is adjacent to the l vertices right
  // before it on the path. O(deg) of the last vertex.
  int LongestAdjacentRun() {
    const VertexId last = path_.back();
    ++stamp_;
    for (VertexId w : Adj(last)) state_[w].mark = stamp_;
    int run = 0;
    for (std::size_t i = path_.size() - 1; i-- > 0;) {
      if (state_[path_[i]].mark != stamp_) break;
      ++run;
    }
    return run;
  }

  // Applies end- and swap-extensions until neither is possible.
  void Extend() {
    bool extended = true;
    while (extended) {
      extended = false;
      const VertexId last = path_.back();
      if (VertexId v = NextFree(last); v != kNoVertex) {
        Push(v);
        ++stats_.end_extensions;
        extended = true;
        continue;
      }
      // With a single vertex only an end-extension can exist.
      if (path_.size() < 2) return;
      if (state_[last].lm_nb == -1) {
        state_[last].lm_nb = LongestAdjacentRun();
        ++stats_.lm_nb_updates;
      }
      if (state_[last].lm_nb < 2) return;
      const std::size_t k = path_.size();
      const VertexId prev = path_[k - 2];
      const VertexId v = NextFree(prev);
      if (v == kNoVertex) return;
      // u_1..u_{k-2} u_k u_{k-1} v: the old last vertex loses u_{k-1} from
      // its run, the old second-to-last gains u_k.
      --state_[last].lm_nb;
      ++stats_.lm_nb_updates;
      if (state_[prev].lm_nb != -1) {
        ++state_[prev].lm_nb;
        ++stats_.lm_nb_updates;
      }
      std::swap(path_[k - 2], path_[k - 1]);
      Push(v);
      ++stats_.swap_extensions;
      extended = true;
    }
  }

  bool HasFreeNeighbor(VertexId w) const {
    for (VertexId x : Adj(w)) {
      if (Free(x)) return true;
    }
    return false;
  }

  bool LiveAdjacent(VertexId a, VertexId b) const {
    if (state_[a].removed || state_[b].removed) return false;
    for (VertexId x : Adj(a)) {
      if (x == b) return true;
    }
    return false;
  }

  void AuditBeforeCommit() {
    ++stats_.audited_commits;
    const std::size_t k = path_.size();
    const VertexId last = path_[k - 1];
    const VertexId prev = path_[k - 2];
    for (std::size_t i = 0; i + 1 < k; ++i) {
      if (!LiveAdjacent(path_[i], path_[i + 1])) {
        throw InvariantError("path has a non-edge at position " +
                             std::to_string(i));
      }
    }
    if (HasFreeNeighbor(last)) {
      throw InvariantError("commit while an end-extension exists");
    }
    if (k >= 3 && LiveAdjacent(last, path_[k - 3]) && HasFreeNeighbor(prev)) {
      throw InvariantError("commit while a swap-extension exists");
    }
    int run = 0;
    for (std::size_t i = k - 1; i-- > 0;) {
      if (!LiveAdjacent(last, path_[i])) break;
      ++run;
    }
    if (state_[last].lm_nb != run) {
      throw InvariantError("lm_nb of vertex " + std::to_string(last) +
                           " is " + std::to_string(state_[last].lm_nb) +
                           ", expected " + std::to_string(run));
    }
  }

  void AuditAfterCommit() {
    Graph view = g_;
    for (VertexId u = 0; u < g_.TotalCount(); ++u) {
      if (state_[u].removed && view.IsLive(u)) view.RemoveVertex(u);
    }
    const std::size_t now = ConnectedComponents(view).size();
    if (now > components_) {
      throw InvariantError("commit disconnected the remaining graph");
    }
    components_ = now;
  }

  const Graph& g_;
  const PmincfOptions& options_;
  PmincfStats& stats_;
  std::vector<VertexState> state_;
  std::vector<std::uint32_t> offset_;
  std::vector<VertexId> flat_;
  std::uint32_t stamp_ = 0;
  std::vector<VertexId> path_;
  std::size_t components_ = 0;
};

}  // namespace

Matching Pmincf(const Graph& g, const PmincfOptions& options,
                PmincfStats* stats) {
  PmincfStats local;
  PmincfStats& st = stats ? *stats : local;
  st = PmincfStats{};
  return PathRunner(g, options, st).Run();
}

ClawfreeDecision DecideClawfree(const Graph& g) {
  ClawfreeDecision out;
  for (const auto& component : ConnectedComponents(g)) {
    if (component.size() % 2 != 0) return out;
  }
  // Paths never leave a component, so one run reseeding per component is the
  // same as running per component.
  Matching m = Pmincf(g, {}, &out.stats);
  out.witness = FindAlternatingCycle(g, m);
  out.verdict = out.witness ? ClawfreeVerdict::kNotUnique
                            : ClawfreeVerdict::kUnique;
  out.matching = std::move(m);
  return out;
}

std::optional<Matching> DecideUniqueClawfree(const Graph& g) {
  ClawfreeDecision d = DecideClawfree(g);
  if (d.verdict != ClawfreeVerdict::kUnique) return std::nullopt;
  return std::move(d.matching);
}

}  // namespace unipm
