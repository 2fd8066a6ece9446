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

#include "interval_pm.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>

#include "errors.h"

namespace unipm {

IntervalRep::IntervalRep(std::vector<Interval> intervals)
    : intervals_(std::move(intervals)) {
  std::vector<std::int64_t> ends;
  ends.reserve(2 * intervals_.size());
  for (std::size_t v = 0; v < intervals_.size(); ++v) {
    if (intervals_[v].left >= intervals_[v].right) {
      throw UsageError("interval of vertex " + std::to_string(v) +
                       " has l >= r");
    }
    ends.push_back(intervals_[v].left);
    ends.push_back(intervals_[v].right);
  }
  std::sort(ends.begin(), ends.end());
  auto dup = std::adjacent_find(ends.begin(), ends.end());
  if (dup != ends.end()) {
    throw UsageError("endpoints not distinct (value " + std::to_string(*dup) +
                     ")");
  }
}

IntervalRep ParseIntervals(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::int64_t n = -1;
  std::vector<Interval> intervals;
  std::vector<char> seen;
  std::size_t read = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const std::string where = " at line " + std::to_string(line_no);
    std::istringstream fields(line);
    if (n < 0) {
      std::string rest;
      if (!(fields >> n) || n < 0 || (fields >> rest)) {
        throw ParseError("malformed header" + where);
      }
      intervals.resize(n);
      seen.assign(n, 0);
      continue;
    }
    std::int64_t v, l, r;
    std::string rest;
    if (!(fields >> v >> l >> r) || (fields >> rest)) {
      throw ParseError("malformed interval" + where);
    }
    if (v < 0 || v >= n) {
      throw ParseError("vertex " + std::to_string(v) + " out of range" + where);
    }
    if (seen[v]) {
      throw ParseError("vertex " + std::to_string(v) + " listed twice" + where);
    }
    if (l >= r) throw ParseError("l >= r" + where);
    seen[v] = 1;
    intervals[v] = {l, r};
    ++read;
  }
  if (n < 0) throw ParseError("missing header line");
  if (static_cast<std::int64_t>(read) != n) {
    throw ParseError("expected " + std::to_string(n) + " intervals, found " +
                     std::to_string(read));
  }
  try {
    return IntervalRep(std::move(intervals));
  } catch (const UsageError& e) {
    throw ParseError(e.what());
  }
}

std::string SerializeIntervals(const IntervalRep& rep) {
  std::ostringstream out;
  out << rep.Order() << '\n';
  for (VertexId v = 0; v < rep.Order(); ++v) {
    out << v << ' ' << rep[v].left << ' ' << rep[v].right << '\n';
  }
  return out.str();
}

IntervalRep NormalizeEndpoints(const std::vector<Interval>& intervals) {
  struct End {
    std::int64_t value;
    int side;  // 0 = left, 1 = right
    VertexId vertex;
  };
  std::vector<End> ends;
  for (std::size_t v = 0; v < intervals.size(); ++v) {
    if (intervals[v].left > intervals[v].right) {
      throw UsageError("interval with l > r");
    }
    ends.push_back({intervals[v].left, 0, static_cast<VertexId>(v)});
    ends.push_back({intervals[v].right, 1, static_cast<VertexId>(v)});
  }
  std::sort(ends.begin(), ends.end(), [](const End& a, const End& b) {
    return std::tie(a.value, a.side, a.vertex) <
           std::tie(b.value, b.side, b.vertex);
  });
  std::vector<Interval> out(intervals.size());
  for (std::size_t i = 0; i < ends.size(); ++i) {
    auto& slot = ends[i].side == 0 ? out[ends[i].vertex].left
                                   : out[ends[i].vertex].right;
    slot = static_cast<std::int64_t>(i) + 1;
  }
  return IntervalRep(std::move(out));
}

Graph IntersectionGraph(const IntervalRep& rep) {
  const VertexId n = rep.Order();
  std::vector<VertexId> by_left(n);
  std::iota(by_left.begin(), by_left.end(), 0);
  std::sort(by_left.begin(), by_left.end(), [&](VertexId a, VertexId b) {
    return rep[a].left < rep[b].left;
  });
  Graph g(n);
  // Sweep by left endpoint; each earlier interval still open at l_v meets v.
  std::vector<VertexId> open;
  for (VertexId v : by_left) {
    const std::int64_t l = rep[v].left;
    std::erase_if(open, [&](VertexId u) { return rep[u].right < l; });
    for (VertexId u : open) g.AddEdge(u, v);
    open.push_back(v);
  }
  return g;
}

Matching IntervalPerfectMatching(const IntervalRep& rep,
                                 IntervalSweepTrace* trace) {
  const VertexId n = rep.Order();
  if (n % 2 != 0) throw AlgorithmError("odd order");
  std::vector<VertexId> by_right(n);
  std::iota(by_right.begin(), by_right.end(), 0);
  std::sort(by_right.begin(), by_right.end(), [&](VertexId a, VertexId b) {
    return rep[a].right < rep[b].right;
  });
  std::vector<VertexId> by_left = by_right;
  std::sort(by_left.begin(), by_left.end(), [&](VertexId a, VertexId b) {
    return rep[a].left < rep[b].left;
  });

  // Active set: unmatched vertices with l below the current threshold, keyed
  // by right endpoint. Matched entries are dropped lazily.
  using Key = std::pair<std::int64_t, VertexId>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> active;
  std::vector<char> matched(n, 0);
  Matching m(n);
  std::size_t next_right = 0;
  std::size_t next_left = 0;
  for (VertexId round = 0; round < n / 2; ++round) {
    while (matched[by_right[next_right]]) ++next_right;
    const VertexId u = by_right[next_right];
    const std::int64_t threshold = rep[u].right;
    if (trace) trace->thresholds.push_back(threshold);
    matched[u] = 1;
    while (next_left < by_left.size() &&
           rep[by_left[next_left]].left < threshold) {
      const VertexId w = by_left[next_left++];
      if (!matched[w]) active.push({rep[w].right, w});
    }
    while (!active.empty() && matched[active.top().second]) active.pop();
    if (active.empty()) {
      throw AlgorithmError("stuck at vertex " + std::to_string(u));
    }
    const VertexId v = active.top().second;
    active.pop();
    matched[v] = 1;
    m.Add(u, v);
  }
  return m;
}

}  // namespace unipm
