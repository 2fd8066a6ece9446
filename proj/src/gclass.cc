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

#include "gclass.h"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

#include "errors.h"
#include "structure.h"

namespace unipm {

namespace {

std::string Name(VertexId v) { return std::to_string(v); }

// First non-adjacent pair among `vs`, if any.
std::optional<std::pair<VertexId, VertexId>> NonAdjacentPair(
    const Graph& g, std::span<const VertexId> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!g.Adjacent(vs[i], vs[j])) return std::make_pair(vs[i], vs[j]);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> Op1Violation(const Graph& g, VertexId u) {
  if (!g.IsLive(u)) return "vertex " + Name(u) + " is not live";
  std::vector<VertexId> nbrs = g.LiveNeighbors(u);
  if (auto bad = NonAdjacentPair(g, nbrs)) {
    return "vertex " + Name(u) + " is not simplicial: neighbors " +
           Name(bad->first) + " and " + Name(bad->second) +
           " are not adjacent";
  }
  return std::nullopt;
}

std::optional<std::string> Op2Violation(const Graph& g,
                                        std::span<const VertexId> clique) {
  if (clique.empty()) return "clique is empty";
  std::vector<VertexId> sorted(clique.begin(), clique.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return "clique lists a vertex twice";
  }
  for (VertexId c : clique) {
    if (!g.IsLive(c)) return "vertex " + Name(c) + " is not live";
  }
  if (auto bad = NonAdjacentPair(g, clique)) {
    return "C is not a clique: " + Name(bad->first) + " and " +
           Name(bad->second) + " are not adjacent";
  }
  std::vector<VertexId> outside;
  for (VertexId c : clique) {
    outside.clear();
    for (VertexId w : g.Adjacency(c)) {
      if (g.IsLive(w) && !std::binary_search(sorted.begin(), sorted.end(), w)) {
        outside.push_back(w);
      }
    }
    if (auto bad = NonAdjacentPair(g, outside)) {
      return "N(" + Name(c) + ") \\ C is not a clique: " + Name(bad->first) +
             " and " + Name(bad->second) + " are not adjacent";
    }
  }
  return std::nullopt;
}

std::pair<VertexId, VertexId> ApplyOp1(Graph& g, VertexId u) {
  if (auto why = Op1Violation(g, u)) throw ValidationError(*why);
  const VertexId x = g.AddVertex();
  const VertexId y = g.AddVertex();
  g.AddEdge(x, u);
  g.AddEdge(y, u);
  g.AddEdge(x, y);
  return {x, y};
}

std::pair<VertexId, VertexId> ApplyOp2(Graph& g,
                                       std::span<const VertexId> clique) {
  if (auto why = Op2Violation(g, clique)) throw ValidationError(*why);
  const VertexId x = g.AddVertex();
  const VertexId y = g.AddVertex();
  for (VertexId c : clique) g.AddEdge(x, c);
  g.AddEdge(x, y);
  return {x, y};
}

std::string FormatTrace(const ConstructionTrace& trace) {
  std::ostringstream out;
  for (const TraceStep& step : trace.steps) {
    if (const auto* s = std::get_if<InitStep>(&step)) {
      out << "INIT " << s->u << ' ' << s->v << '\n';
    } else if (const auto* s = std::get_if<Op1Step>(&step)) {
      out << "OP1 " << s->u << ' ' << s->x << ' ' << s->y << '\n';
    } else {
      const auto& s2 = std::get<Op2Step>(step);
      out << "OP2 " << s2.x << ' ' << s2.y;
      for (VertexId c : s2.clique) out << ' ' << c;
      out << '\n';
    }
  }
  return out.str();
}

ConstructionTrace ParseTrace(std::string_view text) {
  ConstructionTrace trace;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const std::string where = " at line " + std::to_string(line_no);
    std::istringstream fields(line);
    std::string kind;
    fields >> kind;
    std::vector<std::int64_t> ids;
    std::string token;
    while (fields >> token) {
      try {
        std::size_t used = 0;
        long long value = std::stoll(token, &used);
        if (used != token.size() || value < 0 || value > INT32_MAX) {
          throw ParseError("bad vertex id '" + token + "'" + where);
        }
        ids.push_back(value);
      } catch (const std::logic_error&) {
        throw ParseError("bad vertex id '" + token + "'" + where);
      }
    }
    auto id = [&](std::size_t i) { return static_cast<VertexId>(ids[i]); };
    if (kind == "INIT" && ids.size() == 2) {
      trace.steps.push_back(InitStep{id(0), id(1)});
    } else if (kind == "OP1" && ids.size() == 3) {
      trace.steps.push_back(Op1Step{id(0), id(1), id(2)});
    } else if (kind == "OP2" && ids.size() >= 3) {
      Op2Step s{id(0), id(1), {}};
      for (std::size_t i = 2; i < ids.size(); ++i) s.clique.push_back(id(i));
      trace.steps.push_back(std::move(s));
    } else {
      throw ParseError("malformed trace step" + where);
    }
  }
  return trace;
}

Graph Replay(const ConstructionTrace& trace) {
  const auto& steps = trace.steps;
  if (steps.empty() || !std::holds_alternative<InitStep>(steps[0])) {
    throw ValidationError("step 0: trace must start with INIT");
  }
  const VertexId total = static_cast<VertexId>(2 * steps.size());
  // Operations run on creation-order ids; labels are mapped at the end.
  std::vector<VertexId> created(total, kNoVertex);  // label -> creation id
  std::vector<VertexId> label_of;
  Graph h;
  auto fail = [](std::size_t i, const std::string& why) {
    return ValidationError("step " + std::to_string(i) + ": " + why);
  };
  auto introduce = [&](std::size_t i, VertexId label, VertexId cid) {
    if (label < 0 || label >= total) {
      throw fail(i, "label " + Name(label) + " out of range");
    }
    if (created[label] != kNoVertex) {
      throw fail(i, "label " + Name(label) + " introduced twice");
    }
    created[label] = cid;
    label_of.push_back(label);
  };
  auto lookup = [&](std::size_t i, VertexId label) {
    if (label < 0 || label >= total || created[label] == kNoVertex) {
      throw fail(i, "label " + Name(label) + " is not a vertex yet");
    }
    return created[label];
  };
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (const auto* s = std::get_if<InitStep>(&steps[i])) {
      if (i != 0) throw fail(i, "INIT only allowed as the first step");
      if (s->u == s->v) throw fail(i, "INIT needs two distinct labels");
      h = Graph(2);
      h.AddEdge(0, 1);
      introduce(i, s->u, 0);
      introduce(i, s->v, 1);
    } else if (const auto* s = std::get_if<Op1Step>(&steps[i])) {
      const VertexId u = lookup(i, s->u);
      if (auto why = Op1Violation(h, u)) throw fail(i, *why);
      auto [x, y] = ApplyOp1(h, u);
      introduce(i, s->x, x);
      introduce(i, s->y, y);
    } else {
      const auto& s2 = std::get<Op2Step>(steps[i]);
      std::vector<VertexId> clique;
      for (VertexId c : s2.clique) clique.push_back(lookup(i, c));
      if (auto why = Op2Violation(h, clique)) throw fail(i, *why);
      auto [x, y] = ApplyOp2(h, clique);
      introduce(i, s2.x, x);
      introduce(i, s2.y, y);
    }
  }
  Graph out(total);
  for (VertexId a = 0; a < total; ++a) {
    for (VertexId b : h.Adjacency(a)) {
      if (a < b) out.AddEdge(label_of[a], label_of[b]);
    }
  }
  return out;
}

std::optional<ConstructionTrace> Decompose(const Graph& g) {
  const VertexId live = g.LiveCount();
  if (live < 2 || live % 2 != 0 || !IsConnected(g)) return std::nullopt;

  Graph h = g;
  const VertexId n = g.TotalCount();
  std::vector<int> degree(n, 0);
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> small;
  for (VertexId u = 0; u < n; ++u) {
    if (!h.IsLive(u)) continue;
    degree[u] = h.LiveDegree(u);
    if (degree[u] <= 2) small.push(u);
  }
  auto remove = [&](VertexId x) {
    h.RemoveVertex(x);
    for (VertexId w : h.Adjacency(x)) {
      if (h.IsLive(w) && --degree[w] <= 2) small.push(w);
    }
  };

  // Undone operations, last construction step first.
  std::vector<TraceStep> undone;
  while (h.LiveCount() > 2) {
    if (small.empty()) return std::nullopt;
    const VertexId y = small.top();
    small.pop();
    if (!h.IsLive(y)) continue;
    std::vector<VertexId> nbrs = h.LiveNeighbors(y);
    if (nbrs.size() == 1) {
      // Pendant edge xy: undo Operation 2 with C = N(x) \ {y}.
      const VertexId x = nbrs[0];
      std::vector<VertexId> clique;
      for (VertexId w : h.LiveNeighbors(x)) {
        if (w != y) clique.push_back(w);
      }
      std::sort(clique.begin(), clique.end());
      remove(y);
      remove(x);
      if (Op2Violation(h, clique)) return std::nullopt;
      undone.push_back(Op2Step{x, y, std::move(clique)});
    } else if (nbrs.size() == 2) {
      // Pendant triangle {u, x, y} with x, y of degree two: undo Operation 1.
      if (!h.Adjacent(nbrs[0], nbrs[1])) continue;
      VertexId x = kNoVertex;
      VertexId u = kNoVertex;
      for (int i = 0; i < 2; ++i) {
        if (degree[nbrs[i]] == 2) {
          x = nbrs[i];
          u = nbrs[1 - i];
          break;
        }
      }
      if (x == kNoVertex) continue;
      remove(y);
      remove(x);
      if (Op1Violation(h, u)) return std::nullopt;
      undone.push_back(Op1Step{u, std::min(x, y), std::max(x, y)});
    } else if (nbrs.empty()) {
      return std::nullopt;
    }
  }
  std::vector<VertexId> base = h.LiveVertices();
  if (!h.Adjacent(base[0], base[1])) return std::nullopt;
  ConstructionTrace trace;
  trace.steps.push_back(InitStep{base[0], base[1]});
  trace.steps.insert(trace.steps.end(), std::make_move_iterator(undone.rbegin()),
                     std::make_move_iterator(undone.rend()));
  return trace;
}

GClassBuilder::GClassBuilder(std::uint64_t seed, double op2_bias)
    : rng_(seed), op2_bias_(op2_bias), graph_(2) {
  graph_.AddEdge(0, 1);
  trace_.steps.push_back(InitStep{0, 1});
  AddSimplicial(0);
  AddSimplicial(1);
}

void GClassBuilder::AddSimplicial(VertexId u) {
  if (static_cast<VertexId>(simplicial_pos_.size()) <= u) {
    simplicial_pos_.resize(u + 1, -1);
  }
  simplicial_pos_[u] = static_cast<std::int64_t>(simplicial_.size());
  simplicial_.push_back(u);
}

void GClassBuilder::DropSimplicial(VertexId u) {
  if (u >= static_cast<VertexId>(simplicial_pos_.size())) return;
  const std::int64_t pos = simplicial_pos_[u];
  if (pos < 0) return;
  const VertexId moved = simplicial_.back();
  simplicial_[pos] = moved;
  simplicial_pos_[moved] = pos;
  simplicial_.pop_back();
  simplicial_pos_[u] = -1;
}

void GClassBuilder::DoOp1(VertexId u) {
  auto [x, y] = ApplyOp1(graph_, u);
  trace_.steps.push_back(Op1Step{u, x, y});
  // u now sees x, y and its old neighbors, which are not adjacent to x.
  DropSimplicial(u);
  AddSimplicial(x);
  AddSimplicial(y);
  last_y_ = y;
}

void GClassBuilder::DoOp2(std::span<const VertexId> clique) {
  std::vector<int> old_degree;
  for (VertexId c : clique) old_degree.push_back(graph_.LiveDegree(c));
  auto [x, y] = ApplyOp2(graph_, clique);
  Op2Step step{x, y, {clique.begin(), clique.end()}};
  trace_.steps.push_back(std::move(step));
  // c stays simplicial only if its old neighborhood was C \ {c}.
  const int others = static_cast<int>(clique.size()) - 1;
  for (std::size_t i = 0; i < clique.size(); ++i) {
    if (old_degree[i] != others) DropSimplicial(clique[i]);
  }
  // x sees y, which misses all of C; y only sees x.
  AddSimplicial(y);
  last_y_ = y;
}

std::vector<VertexId> GClassBuilder::SampleClique() {
  constexpr int kMaxCliqueSize = 6;
  constexpr int kRetries = 32;
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    const auto start =
        static_cast<VertexId>(rng_.Below(graph_.TotalCount()));
    const auto target = static_cast<std::size_t>(rng_.Between(1, kMaxCliqueSize));
    std::vector<VertexId> clique{start};
    std::vector<VertexId> candidates = graph_.LiveNeighbors(start);
    rng_.Shuffle(std::span<VertexId>(candidates));
    for (VertexId w : candidates) {
      if (clique.size() >= target) break;
      bool joins = true;
      for (VertexId c : clique) {
        if (c != start && !graph_.Adjacent(c, w)) {
          joins = false;
          break;
        }
      }
      if (joins) clique.push_back(w);
    }
    if (!Op2Violation(graph_, clique)) return clique;
  }
  return {last_y_};
}

void GClassBuilder::Step() {
  if (rng_.Chance(op2_bias_)) {
    std::vector<VertexId> clique = SampleClique();
    DoOp2(clique);
  } else {
    const VertexId u = simplicial_[rng_.Below(simplicial_.size())];
    DoOp1(u);
  }
}

GClassMember RandomGClass(int steps, double op2_bias, std::uint64_t seed) {
  if (steps < 0) throw UsageError("steps must be non-negative");
  GClassBuilder builder(seed, op2_bias);
  for (int i = 0; i < steps; ++i) builder.Step();
  return {builder.graph(), builder.trace()};
}

CliqueChainBuilder::CliqueChainBuilder() : graph_(2) {
  graph_.AddEdge(0, 1);
  trace_.steps.push_back(InitStep{0, 1});
}

void CliqueChainBuilder::Step() {
  std::vector<VertexId> clique{last_x_};
  clique.insert(clique.end(), last_clique_.begin(), last_clique_.end());
  if (clique.size() > 3 || Op2Violation(graph_, clique)) {
    clique = {last_x_, last_y_};
  }
  auto [x, y] = ApplyOp2(graph_, clique);
  trace_.steps.push_back(Op2Step{x, y, clique});
  last_x_ = x;
  last_y_ = y;
  last_clique_ = std::move(clique);
}

GClassMember CliqueChain(int steps) {
  if (steps < 0) throw UsageError("steps must be non-negative");
  CliqueChainBuilder builder;
  for (int i = 0; i < steps; ++i) builder.Step();
  return {builder.graph(), builder.trace()};
}

}  // namespace unipm
