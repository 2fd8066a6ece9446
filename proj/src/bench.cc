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

#include "bench.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "clawfree_pm.h"
#include "errors.h"
#include "gclass.h"
#include "matching.h"

namespace unipm {
namespace {

BenchRow Measure(const Graph& g, Family family, int reps) {
  BenchRow row;
  row.family = std::string(FamilyName(family));
  row.n = g.LiveCount();
  row.m = g.EdgeCount();
  row.reps = reps;
  std::vector<double> times;
  for (int r = 0; r < reps; ++r) {
    PmincfStats stats;
    const auto start = std::chrono::steady_clock::now();
    Matching m = Pmincf(g, {}, &stats);
    const auto stop = std::chrono::steady_clock::now();
    times.push_back(
        std::chrono::duration<double, std::milli>(stop - start).count());
    if (r == 0) {
      if (!VerifyPerfectMatching(g, m)) {
        throw InvariantError("PMinCF returned an invalid perfect matching");
      }
      row.cursor_advances = stats.cursor_advances;
      row.lm_nb_updates = stats.lm_nb_updates;
    }
  }
  std::sort(times.begin(), times.end());
  row.median_ms = times[times.size() / 2];
  row.bound_ok = row.cursor_advances <= 2 * static_cast<std::uint64_t>(row.m);
  return row;
}

}  // namespace

std::vector<BenchRow> RunBench(Family family,
                               std::span<const std::int64_t> edge_targets,
                               int reps, std::uint64_t seed) {
  if (family != Family::kGClass && family != Family::kCliqueChain) {
    throw UsageError("bench supports the gclass and clique-chain families");
  }
  if (reps < 1) throw UsageError("reps must be positive");
  std::vector<std::int64_t> targets(edge_targets.begin(), edge_targets.end());
  std::sort(targets.begin(), targets.end());
  std::vector<BenchRow> rows;
  GClassBuilder gclass(seed, 0.5);
  CliqueChainBuilder chain;
  for (std::int64_t target : targets) {
    if (family == Family::kGClass) {
      while (gclass.graph().EdgeCount() < target) gclass.Step();
      rows.push_back(Measure(gclass.graph(), family, reps));
    } else {
      while (chain.graph().EdgeCount() < target) chain.Step();
      rows.push_back(Measure(chain.graph(), family, reps));
    }
  }
  return rows;
}

std::string FormatBenchCsv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << kBenchCsvHeader << '\n';
  char ms[32];
  for (const BenchRow& r : rows) {
    std::snprintf(ms, sizeof(ms), "%.4f", r.median_ms);
    out << "v1," << r.family << ',' << r.n << ',' << r.m << ',' << r.reps
        << ',' << ms << ',' << r.cursor_advances << ',' << r.lm_nb_updates
        << ',' << (r.bound_ok ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace unipm
