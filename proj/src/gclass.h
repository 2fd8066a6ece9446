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

#ifndef UNIPM_GCLASS_H_
#define UNIPM_GCLASS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "graph.h"
#include "random.h"

// The class of graphs built from K2 by
//   Operation 1: new x, y with edges xy, xu, yu for a simplicial vertex u;
//   Operation 2: new x, y with edge xy and x joined to a non-empty clique C
//                such that N(c) \ C is a clique for every c in C.
// These are exactly the connected claw-free graphs with a unique perfect
// matching.

namespace unipm {

struct InitStep {
  VertexId u = kNoVertex;
  VertexId v = kNoVertex;
  friend bool operator==(const InitStep&, const InitStep&) = default;
};

struct Op1Step {
  VertexId u = kNoVertex;
  VertexId x = kNoVertex;
  VertexId y = kNoVertex;
  friend bool operator==(const Op1Step&, const Op1Step&) = default;
};

struct Op2Step {
  VertexId x = kNoVertex;
  VertexId y = kNoVertex;
  std::vector<VertexId> clique;
  friend bool operator==(const Op2Step&, const Op2Step&) = default;
};

using TraceStep = std::variant<InitStep, Op1Step, Op2Step>;

// Step 0 is an InitStep; every later step introduces two new labels x, y.
// Labels are vertex ids of the final graph.
struct ConstructionTrace {
  std::vector<TraceStep> steps;
  friend bool operator==(const ConstructionTrace&,
                         const ConstructionTrace&) = default;
};

// "INIT u v", "OP1 u x y", "OP2 x y c1 c2 ..." one per line.
std::string FormatTrace(const ConstructionTrace& trace);
ConstructionTrace ParseTrace(std::string_view text);

// Describes why Operation 1 / 2 may not be applied, or nullopt if it may.
std::optional<std::string> Op1Violation(const Graph& g, VertexId u);
std::optional<std::string> Op2Violation(const Graph& g,
                                        std::span<const VertexId> clique);

// Apply the operation in place and return the new (x, y). Throw
// ValidationError with the violation text when the precondition fails.
std::pair<VertexId, VertexId> ApplyOp1(Graph& g, VertexId u);
std::pair<VertexId, VertexId> ApplyOp2(Graph& g,
                                       std::span<const VertexId> clique);

// Rebuilds the labelled graph, validating every step. Throws
// ValidationError naming the failing step index.
Graph Replay(const ConstructionTrace& trace);

// Peels endblocks (a pendant edge undoes Operation 2, a pendant triangle
// undoes Operation 1) down to K2, validating each undone operation against
// the remainder. Returns a trace whose replay reproduces g with identical
// vertex ids, or nullopt iff g is not connected, claw-free and uniquely
// perfectly matchable.
std::optional<ConstructionTrace> Decompose(const Graph& g);

// Seeded random construction. Operation 1 uses a uniformly random simplicial
// vertex; Operation 2 grows candidate cliques from random vertices and falls
// back to the most recent y.
class GClassBuilder {
 public:
  GClassBuilder(std::uint64_t seed, double op2_bias);

  void Step();

  const Graph& graph() const { return graph_; }
  const ConstructionTrace& trace() const { return trace_; }
  // Current simplicial vertices, maintained incrementally.
  std::vector<VertexId> SimplicialVertices() const { return simplicial_; }

 private:
  void DoOp1(VertexId u);
  void DoOp2(std::span<const VertexId> clique);
  std::vector<VertexId> SampleClique();
  void DropSimplicial(VertexId u);
  void AddSimplicial(VertexId u);

  Rng rng_;
  double op2_bias_;
  Graph graph_;
  ConstructionTrace trace_;
  std::vector<VertexId> simplicial_;
  std::vector<std::int64_t> simplicial_pos_;
  VertexId last_y_ = 1;
};

struct GClassMember {
  Graph graph;
  ConstructionTrace trace;
};

GClassMember RandomGClass(int steps, double op2_bias, std::uint64_t seed);

// Deterministic chain of Operation 2 steps. Each step uses
// C = {previous x} + (previous C) when that has at most three vertices and is
// valid, and C = {previous x, previous y} otherwise.
class CliqueChainBuilder {
 public:
  CliqueChainBuilder();
  void Step();
  const Graph& graph() const { return graph_; }
  const ConstructionTrace& trace() const { return trace_; }

 private:
  Graph graph_;
  ConstructionTrace trace_;
  VertexId last_x_ = 0;
  VertexId last_y_ = 1;
  std::vector<VertexId> last_clique_;
};

GClassMember CliqueChain(int steps);

}  // namespace unipm

#endif  // UNIPM_GCLASS_H_
