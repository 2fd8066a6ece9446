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

#include "graph.h"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_set>

#include "errors.h"

namespace unipm {

Graph::Graph(VertexId order) {
  if (order < 0) throw UsageError("negative graph order");
  adjacency_.resize(order);
  removed_.assign(order, 0);
  live_count_ = order;
}

VertexId Graph::AddVertex() {
  adjacency_.emplace_back();
  removed_.push_back(0);
  ++live_count_;
  return static_cast<VertexId>(adjacency_.size()) - 1;
}

bool Graph::AddEdge(VertexId u, VertexId v) {
  if (!Contains(u) || !Contains(v)) {
    throw UsageError("edge endpoint out of range");
  }
  if (u == v) throw UsageError("self-loop at vertex " + std::to_string(u));
  if (removed_[u] || removed_[v]) {
    throw UsageError("edge endpoint is a removed vertex");
  }
  if (Adjacent(u, v)) return false;
  AppendEdge(u, v);
  return true;
}

void Graph::RemoveVertex(VertexId u) {
  if (!IsLive(u)) throw UsageError("vertex " + std::to_string(u) + " is not live");
  edge_count_ -= LiveDegree(u);
  removed_[u] = 1;
  --live_count_;
}

int Graph::LiveDegree(VertexId u) const {
  int d = 0;
  for (VertexId w : adjacency_[u]) d += removed_[w] ? 0 : 1;
  return d;
}

bool Graph::Adjacent(VertexId u, VertexId v) const {
  if (!IsLive(u) || !IsLive(v)) return false;
  const auto& shorter = adjacency_[u].size() <= adjacency_[v].size()
                            ? adjacency_[u]
                            : adjacency_[v];
  VertexId other = adjacency_[u].size() <= adjacency_[v].size() ? v : u;
  return std::find(shorter.begin(), shorter.end(), other) != shorter.end();
}

std::vector<VertexId> Graph::LiveVertices() const {
  std::vector<VertexId> out;
  out.reserve(live_count_);
  for (VertexId u = 0; u < TotalCount(); ++u) {
    if (!removed_[u]) out.push_back(u);
  }
  return out;
}

std::vector<VertexId> Graph::LiveNeighbors(VertexId u) const {
  std::vector<VertexId> out;
  for (VertexId w : adjacency_[u]) {
    if (!removed_[w]) out.push_back(w);
  }
  return out;
}

std::vector<Edge> Graph::LiveEdges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < TotalCount(); ++u) {
    if (removed_[u]) continue;
    for (VertexId w : adjacency_[u]) {
      if (u < w && !removed_[w]) out.push_back({u, w});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Graph::CheckInvariants() const {
  const VertexId n = TotalCount();
  if (static_cast<VertexId>(removed_.size()) != n) return false;
  std::vector<VertexId> seen(n, kNoVertex);
  VertexId live = 0;
  std::int64_t ends = 0;
  for (VertexId u = 0; u < n; ++u) {
    if (!removed_[u]) ++live;
    for (VertexId w : adjacency_[u]) {
      if (w < 0 || w >= n || w == u || seen[w] == u) return false;
      seen[w] = u;
      const auto& back = adjacency_[w];
      if (std::find(back.begin(), back.end(), u) == back.end()) return false;
      if (!removed_[u] && !removed_[w]) ++ends;
    }
  }
  return live == live_count_ && ends == 2 * edge_count_;
}

namespace {

// Splits a line into whitespace separated integer tokens. Returns false on
// anything that is not a non-negative integer.
bool ParseInts(std::string_view line, std::vector<std::int64_t>& out) {
  out.clear();
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r') {
      ++j;
    }
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc() || ptr != line.data() + j || value < 0) return false;
    out.push_back(value);
    i = j;
  }
  return true;
}

bool IsBlankOrComment(std::string_view line) {
  auto first = line.find_first_not_of(" \t\r");
  return first == std::string_view::npos || line[first] == '#';
}

}  // namespace

Graph ParseGraph(std::string_view text) {
  std::vector<std::int64_t> ints;
  Graph g;
  bool have_header = false;
  std::int64_t n = 0;
  std::int64_t expected_edges = 0;
  std::int64_t edges_read = 0;
  std::unordered_set<std::uint64_t> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (IsBlankOrComment(line)) continue;
    const std::string where = " at line " + std::to_string(line_no);
    if (!ParseInts(line, ints)) {
      throw ParseError((have_header ? "malformed edge" : "malformed header") +
                       where);
    }
    if (!have_header) {
      if (ints.size() != 2 || ints[0] > INT32_MAX - 1) {
        throw ParseError("malformed header" + where);
      }
      n = ints[0];
      expected_edges = ints[1];
      g = Graph(static_cast<VertexId>(n));
      seen.reserve(static_cast<std::size_t>(
          std::min<std::int64_t>(expected_edges, 1 << 24)));
      have_header = true;
      continue;
    }
    if (ints.size() != 2) throw ParseError("malformed edge" + where);
    for (std::int64_t x : ints) {
      if (x >= n) {
        throw ParseError("vertex " + std::to_string(x) + " out of range" +
                         where);
      }
    }
    if (ints[0] == ints[1]) throw ParseError("self-loop" + where);
    if (++edges_read > expected_edges) {
      throw ParseError("more edges than declared in header" + where);
    }
    auto a = static_cast<VertexId>(std::min(ints[0], ints[1]));
    auto b = static_cast<VertexId>(std::max(ints[0], ints[1]));
    std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) |
                        static_cast<std::uint32_t>(b);
    if (!seen.insert(key).second) continue;
    g.AppendEdge(a, b);
  }
  if (!have_header) throw ParseError("missing header line");
  if (edges_read != expected_edges) {
    throw ParseError("expected " + std::to_string(expected_edges) +
                     " edges, found " + std::to_string(edges_read));
  }
  return g;
}

std::string SerializeGraph(const Graph& g) {
  std::vector<Edge> edges = g.LiveEdges();
  std::ostringstream out;
  out << g.TotalCount() << ' ' << edges.size() << '\n';
  for (const Edge& e : edges) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph InducedSubgraph(const Graph& g, std::span<const VertexId> keep) {
  std::vector<VertexId> index(g.TotalCount(), kNoVertex);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (!g.IsLive(keep[i])) throw UsageError("induced subgraph on dead vertex");
    index[keep[i]] = static_cast<VertexId>(i);
  }
  Graph h(static_cast<VertexId>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (VertexId w : g.Adjacency(keep[i])) {
      VertexId j = index[w];
      if (j != kNoVertex && static_cast<VertexId>(i) < j && g.IsLive(w)) {
        h.AppendEdge(static_cast<VertexId>(i), j);
      }
    }
  }
  return h;
}

}  // namespace unipm
