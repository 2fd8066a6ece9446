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

#ifndef UNIPM_CHECK_H_
#define UNIPM_CHECK_H_

#include <optional>
#include <string>

#include "clawfree_pm.h"
#include "forcing.h"
#include "graph.h"
#include "matching.h"
#include "structure.h"
#include "uniqueness.h"

namespace unipm {

enum class Verdict { kUnique, kNotUnique, kUndecidedClass };

struct CheckOptions {
  // Largest order for which graphs with a claw fall back to enumeration.
  VertexId oracle_cap = 16;
};

struct CheckResult {
  Verdict verdict = Verdict::kUndecidedClass;
  std::string method;  // "forcing", "clawfree", "oracle" or "none"
  std::string reason;
  std::optional<Matching> matching;
  std::optional<AlternatingCycle> witness;
  std::optional<Claw> claw;
  PmincfStats pmincf;
};

// Forcing elimination first; then PMinCF if the graph is claw-free; else
// enumeration up to `oracle_cap` vertices; else undecided. A "unique" verdict
// is always confirmed by FindAlternatingCycle.
CheckResult Check(const Graph& g, const CheckOptions& options = {});

}  // namespace unipm

#endif  // UNIPM_CHECK_H_
