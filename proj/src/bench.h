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

#ifndef UNIPM_BENCH_H_
#define UNIPM_BENCH_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "generators.h"
#include "graph.h"

namespace unipm {

struct BenchRow {
  std::string family;
  VertexId n = 0;
  std::int64_t m = 0;
  int reps = 0;
  double median_ms = 0.0;
  std::uint64_t cursor_advances = 0;
  std::uint64_t lm_nb_updates = 0;
  // cursor_advances <= 2m.
  bool bound_ok = false;
};

// Times PMinCF on one growing gclass or clique-chain instance, snapshotted
// whenever its edge count first reaches each target (targets are processed
// in increasing order). Every produced matching is verified. Throws
// UsageError for families that are not claw-free constructions.
std::vector<BenchRow> RunBench(Family family,
                               std::span<const std::int64_t> edge_targets,
                               int reps, std::uint64_t seed);

inline constexpr const char* kBenchCsvHeader =
    "schema,family,n,m,reps,median_ms,cursor_advances,lm_nb_updates,bound_ok";

// Rows prefixed with the schema tag "v1".
std::string FormatBenchCsv(const std::vector<BenchRow>& rows);

}  // namespace unipm

#endif  // UNIPM_BENCH_H_
