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

#ifndef UNIPM_GRAPH_H_
#define UNIPM_GRAPH_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace unipm {

// Dense vertex index in [0, TotalCount()). Ids are never reused; removed
// vertices keep their id.
using VertexId = std::int32_t;

inline constexpr VertexId kNoVertex = -1;

// Unordered vertex pair. Canonical form has u < v.
struct Edge {
  VertexId u = kNoVertex;
  VertexId v = kNoVertex;

  Edge Canonical() const { return u < v ? Edge{u, v} : Edge{v, u}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected simple graph stored as per-vertex neighbor lists in insertion
// order. Vertex removal is lazy: the removed flag is set and the adjacency
// lists are left untouched, so a neighbor list may contain dead entries.
class Graph {
 public:
  Graph() = default;
  explicit Graph(VertexId order);

  // Appends a fresh live vertex and returns its id.
  VertexId AddVertex();

  // Adds edge {u,v} between live vertices. Returns false if it already
  // existed. Throws UsageError on self-loops and bad ids.
  bool AddEdge(VertexId u, VertexId v);

  // Marks u removed. Its live incident edges stop counting toward EdgeCount.
  void RemoveVertex(VertexId u);

  bool Contains(VertexId u) const {
    return u >= 0 && u < static_cast<VertexId>(adjacency_.size());
  }
  bool IsLive(VertexId u) const { return Contains(u) && !removed_[u]; }

  VertexId TotalCount() const {
    return static_cast<VertexId>(adjacency_.size());
  }
  VertexId LiveCount() const { return live_count_; }
  std::int64_t EdgeCount() const { return edge_count_; }

  // Raw neighbor list including removed neighbors.
  std::span<const VertexId> Adjacency(VertexId u) const {
    return adjacency_[u];
  }

  int LiveDegree(VertexId u) const;
  bool Adjacent(VertexId u, VertexId v) const;

  std::vector<VertexId> LiveVertices() const;
  std::vector<VertexId> LiveNeighbors(VertexId u) const;
  // Live edges in canonical form, sorted.
  std::vector<Edge> LiveEdges() const;

  // Checks symmetry, absence of loops/duplicates and the cached counters.
  bool CheckInvariants() const;

 private:
  friend Graph ParseGraph(std::string_view text);
  friend Graph InducedSubgraph(const Graph& g, std::span<const VertexId> keep);

  // Appends {u,v}; the caller guarantees the pair is new and valid.
  void AppendEdge(VertexId u, VertexId v) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    ++edge_count_;
  }

  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<char> removed_;
  VertexId live_count_ = 0;
  std::int64_t edge_count_ = 0;
};

// Parses the edge-list format: comment lines start with '#', the first other
// line is "n m", followed by m lines "u v". Duplicate edges collapse.
// Throws ParseError naming the offending line.
Graph ParseGraph(std::string_view text);

// Writes live edges in canonical sorted order with header "n m" where n is
// TotalCount().
std::string SerializeGraph(const Graph& g);

// Builds the graph induced on the live vertices of `g` listed in `keep`,
// relabelled 0..keep.size()-1 in the given order.
Graph InducedSubgraph(const Graph& g, std::span<const VertexId> keep);

}  // namespace unipm

#endif  // UNIPM_GRAPH_H_
