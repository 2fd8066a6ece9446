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

#include "check.h"

#include "errors.h"

namespace unipm {
namespace {

void ConfirmUnique(const Graph& g, const Matching& m) {
  if (FindAlternatingCycle(g, m)) {
    throw InvariantError("uniqueness verifier rejected a unique verdict");
  }
}

}  // namespace

CheckResult Check(const Graph& g, const CheckOptions& options) {
  CheckResult out;
  if (auto cert = FindForcingSet(g)) {
    ConfirmUnique(g, cert->matching);
    out.verdict = Verdict::kUnique;
    out.method = "forcing";
    out.matching = std::move(cert->matching);
    return out;
  }
  out.claw = FindClaw(g);
  if (!out.claw) {
    out.method = "clawfree";
    ClawfreeDecision d = DecideClawfree(g);
    out.pmincf = d.stats;
    switch (d.verdict) {
      case ClawfreeVerdict::kNoPerfectMatching:
        out.verdict = Verdict::kNotUnique;
        out.reason = "odd component, no perfect matching";
        break;
      case ClawfreeVerdict::kNotUnique:
        out.verdict = Verdict::kNotUnique;
        out.reason = "alternating cycle";
        out.matching = std::move(d.matching);
        out.witness = std::move(d.witness);
        break;
      case ClawfreeVerdict::kUnique:
        out.verdict = Verdict::kUnique;
        out.matching = std::move(d.matching);
        break;
    }
    return out;
  }
  if (g.LiveCount() <= options.oracle_cap) {
    out.method = "oracle";
    std::vector<Matching> pms = EnumeratePerfectMatchings(g, 2);
    if (pms.empty()) {
      out.verdict = Verdict::kNotUnique;
      out.reason = "no perfect matching";
    } else if (pms.size() == 1) {
      ConfirmUnique(g, pms[0]);
      out.verdict = Verdict::kUnique;
      out.matching = std::move(pms[0]);
    } else {
      out.verdict = Verdict::kNotUnique;
      out.reason = "alternating cycle";
      out.witness = FindAlternatingCycle(g, pms[0]);
      if (!out.witness) {
        throw InvariantError("two perfect matchings but no alternating cycle");
      }
      out.matching = std::move(pms[0]);
    }
    return out;
  }
  out.verdict = Verdict::kUndecidedClass;
  out.method = "none";
  out.reason = "graph has a claw and exceeds the oracle cap";
  return out;
}

}  // namespace unipm
