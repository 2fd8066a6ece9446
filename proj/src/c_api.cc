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

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "bench.h"
#include "check.h"
#include "clawfree_pm.h"
#include "errors.h"
#include "forcing.h"
#include "gclass.h"
#include "generators.h"
#include "graph.h"
#include "interval_pm.h"
#include "matching.h"
#include "structure.h"
#include "uniqueness.h"
#include "unipm/unipm.h"

struct unipm_graph {
  unipm::Graph g;
};
struct unipm_matching {
  unipm::Matching m;
  std::vector<unipm::Edge> sorted;
};
struct unipm_intervals {
  unipm::IntervalRep rep;
};
struct unipm_trace {
  unipm::ConstructionTrace t;
};
struct unipm_check_result {
  unipm::CheckResult r;
  std::optional<unipm_matching> matching;
};

namespace {

thread_local std::string last_error;

template <typename F>
unipm_status Guard(F&& body) {
  try {
    last_error.clear();
    body();
    return UNIPM_OK;
  } catch (const unipm::ParseError& e) {
    last_error = e.what();
    return UNIPM_ERR_PARSE;
  } catch (const unipm::UsageError& e) {
    last_error = e.what();
    return UNIPM_ERR_USAGE;
  } catch (const unipm::ValidationError& e) {
    last_error = e.what();
    return UNIPM_ERR_VALIDATION;
  } catch (const unipm::AlgorithmError& e) {
    last_error = e.what();
    return UNIPM_ERR_ALGORITHM;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return UNIPM_ERR_NO_MEMORY;
  } catch (const std::exception& e) {
    last_error = e.what();
    return UNIPM_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return UNIPM_ERR_INTERNAL;
  }
}

void Require(bool ok, const char* what) {
  if (!ok) throw unipm::UsageError(what);
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int32_t* CopyIds(const std::vector<unipm::VertexId>& ids) {
  int32_t* out =
      static_cast<int32_t*>(std::malloc(sizeof(int32_t) * (ids.size() + 1)));
  if (out == nullptr) throw std::bad_alloc();
  std::copy(ids.begin(), ids.end(), out);
  return out;
}

unipm_matching* Wrap(unipm::Matching m) {
  auto* out = new unipm_matching{std::move(m), {}};
  out->sorted = out->m.SortedPairs();
  return out;
}

void FillStats(const unipm::PmincfStats& s, unipm_pmincf_stats* out) {
  out->cursor_advances = s.cursor_advances;
  out->lm_nb_updates = s.lm_nb_updates;
  out->end_extensions = s.end_extensions;
  out->swap_extensions = s.swap_extensions;
  out->reseeds = s.reseeds;
  out->audited_commits = s.audited_commits;
  out->adjacency_total = s.adjacency_total;
}

}  // namespace

extern "C" {

const char* unipm_last_error(void) { return last_error.c_str(); }
const char* unipm_version(void) { return "1.0.0"; }

void unipm_string_free(char* s) { std::free(s); }
void unipm_ids_free(int32_t* ids) { std::free(ids); }

unipm_status unipm_graph_parse(const char* text, unipm_graph** out) {
  return Guard([&] {
    Require(text != nullptr && out != nullptr, "null argument");
    *out = new unipm_graph{unipm::ParseGraph(text)};
  });
}

unipm_status unipm_graph_new(int32_t order, unipm_graph** out) {
  return Guard([&] {
    Require(out != nullptr, "null argument");
    Require(order >= 0, "negative order");
    *out = new unipm_graph{unipm::Graph(order)};
  });
}

unipm_status unipm_graph_add_edge(unipm_graph* g, int32_t u, int32_t v,
                                  int* added) {
  return Guard([&] {
    Require(g != nullptr, "null argument");
    const bool fresh = g->g.AddEdge(u, v);
    if (added != nullptr) *added = fresh ? 1 : 0;
  });
}

void unipm_graph_free(unipm_graph* g) { delete g; }

int32_t unipm_graph_order(const unipm_graph* g) {
  return g == nullptr ? 0 : g->g.LiveCount();
}

int64_t unipm_graph_size(const unipm_graph* g) {
  return g == nullptr ? 0 : g->g.EdgeCount();
}

unipm_status unipm_graph_serialize(const unipm_graph* g, char** out) {
  return Guard([&] {
    Require(g != nullptr && out != nullptr, "null argument");
    *out = CopyString(unipm::SerializeGraph(g->g));
  });
}

unipm_status unipm_graph_find_claw(const unipm_graph* g, int* found,
                                   int32_t* center, int32_t leaves[3]) {
  return Guard([&] {
    Require(g != nullptr && found != nullptr, "null argument");
    auto claw = unipm::FindClaw(g->g);
    *found = claw ? 1 : 0;
    if (claw) {
      if (center != nullptr) *center = claw->center;
      if (leaves != nullptr) {
        for (int i = 0; i < 3; ++i) leaves[i] = claw->leaves[i];
      }
    }
  });
}

size_t unipm_matching_size(const unipm_matching* m) {
  return m == nullptr ? 0 : m->sorted.size();
}

unipm_status unipm_matching_pair(const unipm_matching* m, size_t i, int32_t* u,
                                 int32_t* v) {
  return Guard([&] {
    Require(m != nullptr && u != nullptr && v != nullptr, "null argument");
    Require(i < m->sorted.size(), "pair index out of range");
    *u = m->sorted[i].u;
    *v = m->sorted[i].v;
  });
}

unipm_status unipm_matching_format(const unipm_matching* m, char** out) {
  return Guard([&] {
    Require(m != nullptr && out != nullptr, "null argument");
    *out = CopyString(unipm::FormatMatching(m->m));
  });
}

void unipm_matching_free(unipm_matching* m) { delete m; }

unipm_status unipm_matching_from_pairs(const int32_t* ids, size_t count,
                                       unipm_matching** out) {
  return Guard([&] {
    Require(out != nullptr && (ids != nullptr || count == 0),
            "null argument");
    unipm::Matching m;
    for (size_t i = 0; i < count; ++i) m.Add(ids[2 * i], ids[2 * i + 1]);
    *out = Wrap(std::move(m));
  });
}

int unipm_verify_pm(const unipm_graph* g, const unipm_matching* m) {
  if (g == nullptr || m == nullptr) return 0;
  return unipm::VerifyPerfectMatching(g->g, m->m) ? 1 : 0;
}

unipm_status unipm_is_unique_pm(const unipm_graph* g, const unipm_matching* m,
                                int* unique, int32_t** witness,
                                size_t* witness_len) {
  return Guard([&] {
    Require(g != nullptr && m != nullptr && unique != nullptr,
            "null argument");
    auto cycle = unipm::FindAlternatingCycle(g->g, m->m);
    *unique = cycle ? 0 : 1;
    if (witness_len != nullptr) *witness_len = cycle ? cycle->vertices.size() : 0;
    if (witness != nullptr) {
      *witness = cycle ? CopyIds(cycle->vertices) : nullptr;
    }
  });
}

unipm_status unipm_kotzig_peel(const unipm_graph* g, const unipm_matching* m,
                               int* unique, size_t* rounds) {
  return Guard([&] {
    Require(g != nullptr && m != nullptr && unique != nullptr,
            "null argument");
    *unique = unipm::KotzigPeel(g->g, m->m, rounds) ? 1 : 0;
  });
}

unipm_status unipm_oracle(const unipm_graph* g, size_t cap, size_t* count,
                          unipm_matching** first) {
  return Guard([&] {
    Require(g != nullptr && count != nullptr, "null argument");
    Require(cap > 0, "cap must be positive");
    auto pms = unipm::EnumeratePerfectMatchings(g->g, cap);
    *count = pms.size();
    if (first != nullptr) {
      *first = pms.empty() ? nullptr : Wrap(std::move(pms.front()));
    }
  });
}

unipm_status unipm_find_forcing_set(const unipm_graph* g, int* found,
                                    int32_t** order, size_t* k,
                                    unipm_matching** matching) {
  return Guard([&] {
    Require(g != nullptr && found != nullptr, "null argument");
    auto cert = unipm::FindForcingSet(g->g);
    *found = cert ? 1 : 0;
    if (k != nullptr) *k = cert ? cert->forced.size() : 0;
    if (order != nullptr) {
      *order = nullptr;
      if (cert) {
        std::vector<unipm::VertexId> ids;
        for (const auto& e : cert->forced) {
          ids.push_back(e.u);
          ids.push_back(e.v);
        }
        *order = CopyIds(ids);
      }
    }
    if (matching != nullptr) {
      *matching = cert ? Wrap(std::move(cert->matching)) : nullptr;
    }
  });
}

unipm_status unipm_intervals_parse(const char* text, unipm_intervals** out) {
  return Guard([&] {
    Require(text != nullptr && out != nullptr, "null argument");
    *out = new unipm_intervals{unipm::ParseIntervals(text)};
  });
}

void unipm_intervals_free(unipm_intervals* rep) { delete rep; }

unipm_status unipm_intervals_graph(const unipm_intervals* rep,
                                   unipm_graph** out) {
  return Guard([&] {
    Require(rep != nullptr && out != nullptr, "null argument");
    *out = new unipm_graph{unipm::IntersectionGraph(rep->rep)};
  });
}

unipm_status unipm_interval_pm(const unipm_intervals* rep,
                               unipm_matching** out) {
  return Guard([&] {
    Require(rep != nullptr && out != nullptr, "null argument");
    *out = Wrap(unipm::IntervalPerfectMatching(rep->rep));
  });
}

unipm_status unipm_pmincf(const unipm_graph* g, int audit,
                          unipm_matching** out, unipm_pmincf_stats* stats) {
  return Guard([&] {
    Require(g != nullptr && out != nullptr, "null argument");
    unipm::PmincfStats s;
    unipm::PmincfOptions options;
    options.audit = audit != 0;
    *out = Wrap(unipm::Pmincf(g->g, options, &s));
    if (stats != nullptr) FillStats(s, stats);
  });
}

unipm_status unipm_gclass_random(int32_t steps, double op2_bias, uint64_t seed,
                                 unipm_graph** graph, unipm_trace** trace) {
  return Guard([&] {
    Require(steps >= 0, "steps must be non-negative");
    Require(op2_bias >= 0.0 && op2_bias <= 1.0, "op2 bias must be in [0, 1]");
    auto member = unipm::RandomGClass(steps, op2_bias, seed);
    if (graph != nullptr) *graph = new unipm_graph{std::move(member.graph)};
    if (trace != nullptr) *trace = new unipm_trace{std::move(member.trace)};
  });
}

unipm_status unipm_trace_parse(const char* text, unipm_trace** out) {
  return Guard([&] {
    Require(text != nullptr && out != nullptr, "null argument");
    *out = new unipm_trace{unipm::ParseTrace(text)};
  });
}

unipm_status unipm_trace_format(const unipm_trace* t, char** out) {
  return Guard([&] {
    Require(t != nullptr && out != nullptr, "null argument");
    *out = CopyString(unipm::FormatTrace(t->t));
  });
}

unipm_status unipm_trace_replay(const unipm_trace* t, unipm_graph** out) {
  return Guard([&] {
    Require(t != nullptr && out != nullptr, "null argument");
    *out = new unipm_graph{unipm::Replay(t->t)};
  });
}

size_t unipm_trace_steps(const unipm_trace* t) {
  return t == nullptr ? 0 : t->t.steps.size();
}

void unipm_trace_free(unipm_trace* t) { delete t; }

unipm_status unipm_decompose(const unipm_graph* g, unipm_trace** out) {
  return Guard([&] {
    Require(g != nullptr && out != nullptr, "null argument");
    auto trace = unipm::Decompose(g->g);
    *out = trace ? new unipm_trace{std::move(*trace)} : nullptr;
  });
}

unipm_status unipm_check(const unipm_graph* g, int32_t oracle_cap,
                         unipm_check_result** out) {
  return Guard([&] {
    Require(g != nullptr && out != nullptr, "null argument");
    unipm::CheckOptions options;
    options.oracle_cap = oracle_cap;
    auto* r = new unipm_check_result{unipm::Check(g->g, options), {}};
    if (r->r.matching) {
      r->matching.emplace(unipm_matching{*r->r.matching, {}});
      r->matching->sorted = r->matching->m.SortedPairs();
    }
    *out = r;
  });
}

void unipm_check_result_free(unipm_check_result* r) { delete r; }

unipm_verdict unipm_check_verdict(const unipm_check_result* r) {
  switch (r->r.verdict) {
    case unipm::Verdict::kUnique:
      return UNIPM_UNIQUE;
    case unipm::Verdict::kNotUnique:
      return UNIPM_NOT_UNIQUE;
    case unipm::Verdict::kUndecidedClass:
      break;
  }
  return UNIPM_UNDECIDED_CLASS;
}

const char* unipm_check_method(const unipm_check_result* r) {
  return r->r.method.c_str();
}

const char* unipm_check_reason(const unipm_check_result* r) {
  return r->r.reason.c_str();
}

const unipm_matching* unipm_check_matching(const unipm_check_result* r) {
  return r->matching ? &*r->matching : nullptr;
}

const int32_t* unipm_check_witness(const unipm_check_result* r, size_t* len) {
  if (!r->r.witness) {
    if (len != nullptr) *len = 0;
    return nullptr;
  }
  if (len != nullptr) *len = r->r.witness->vertices.size();
  return r->r.witness->vertices.data();
}

int unipm_check_claw(const unipm_check_result* r, int32_t* center,
                     int32_t leaves[3]) {
  if (!r->r.claw) return 0;
  if (center != nullptr) *center = r->r.claw->center;
  if (leaves != nullptr) {
    for (int i = 0; i < 3; ++i) leaves[i] = r->r.claw->leaves[i];
  }
  return 1;
}

void unipm_check_stats(const unipm_check_result* r,
                       unipm_pmincf_stats* stats) {
  if (stats != nullptr) FillStats(r->r.pmincf, stats);
}

unipm_status unipm_generate(const char* family, int32_t size, uint64_t seed,
                            int unique, char** instance, char** trace) {
  return Guard([&] {
    Require(family != nullptr && instance != nullptr, "null argument");
    auto fam = unipm::ParseFamily(family);
    if (!fam) throw unipm::UsageError(std::string("unknown family ") + family);
    auto inst = unipm::GenerateInstance(*fam, size, seed, unique != 0);
    *instance = CopyString(inst.text);
    if (trace != nullptr) {
      *trace = inst.trace ? CopyString(*inst.trace) : nullptr;
    }
  });
}

unipm_status unipm_bench(const char* family, const int64_t* targets,
                         size_t count, int reps, uint64_t seed, char** csv,
                         int* bound_ok) {
  return Guard([&] {
    Require(family != nullptr && csv != nullptr &&
                (targets != nullptr || count == 0),
            "null argument");
    auto fam = unipm::ParseFamily(family);
    if (!fam) throw unipm::UsageError(std::string("unknown family ") + family);
    auto rows = unipm::RunBench(
        *fam, std::span<const std::int64_t>(targets, count), reps, seed);
    bool ok = true;
    for (const auto& row : rows) ok = ok && row.bound_ok;
    if (bound_ok != nullptr) *bound_ok = ok ? 1 : 0;
    *csv = CopyString(unipm::FormatBenchCsv(rows));
  });
}

}  // extern "C"
