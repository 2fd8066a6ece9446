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

/* C interface to the unipm library. All handles are opaque. Functions
 * returning unipm_status set a thread-local message readable through
 * unipm_last_error() on failure. Strings and id arrays handed out by the
 * library are released with unipm_string_free / unipm_ids_free. */
#ifndef UNIPM_UNIPM_H_
#define UNIPM_UNIPM_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define UNIPM_API __declspec(dllexport)
#else
#define UNIPM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum unipm_status {
  UNIPM_OK = 0,
  UNIPM_ERR_PARSE = 1,
  UNIPM_ERR_USAGE = 2,
  UNIPM_ERR_VALIDATION = 3,
  UNIPM_ERR_ALGORITHM = 4,
  UNIPM_ERR_INTERNAL = 5,
  UNIPM_ERR_NO_MEMORY = 6
} unipm_status;

typedef struct unipm_graph unipm_graph;
typedef struct unipm_matching unipm_matching;
typedef struct unipm_intervals unipm_intervals;
typedef struct unipm_trace unipm_trace;
typedef struct unipm_check_result unipm_check_result;

/* Message of the last failed call on this thread, "" if none. */
UNIPM_API const char* unipm_last_error(void);
UNIPM_API const char* unipm_version(void);

UNIPM_API void unipm_string_free(char* s);
UNIPM_API void unipm_ids_free(int32_t* ids);

/* Graphs */
UNIPM_API unipm_status unipm_graph_parse(const char* text, unipm_graph** out);
UNIPM_API unipm_status unipm_graph_new(int32_t order, unipm_graph** out);
/* *added is 0 when the edge already existed. added may be NULL. */
UNIPM_API unipm_status unipm_graph_add_edge(unipm_graph* g, int32_t u,
                                            int32_t v, int* added);
UNIPM_API void unipm_graph_free(unipm_graph* g);
UNIPM_API int32_t unipm_graph_order(const unipm_graph* g);
UNIPM_API int64_t unipm_graph_size(const unipm_graph* g);
UNIPM_API unipm_status unipm_graph_serialize(const unipm_graph* g, char** out);
/* *found = 0 if claw-free; else center and leaves[3] are filled. */
UNIPM_API unipm_status unipm_graph_find_claw(const unipm_graph* g, int* found,
                                             int32_t* center,
                                             int32_t leaves[3]);

/* Matchings */
UNIPM_API size_t unipm_matching_size(const unipm_matching* m);
/* i-th pair in sorted order, u < v. */
UNIPM_API unipm_status unipm_matching_pair(const unipm_matching* m, size_t i,
                                           int32_t* u, int32_t* v);
UNIPM_API unipm_status unipm_matching_format(const unipm_matching* m,
                                             char** out);
UNIPM_API void unipm_matching_free(unipm_matching* m);
/* Builds a matching from `count` pairs (2*count ids). */
UNIPM_API unipm_status unipm_matching_from_pairs(const int32_t* ids,
                                                 size_t count,
                                                 unipm_matching** out);

UNIPM_API int unipm_verify_pm(const unipm_graph* g, const unipm_matching* m);
/* *unique = 1 if m is the only perfect matching. Otherwise *witness receives
 * a closed alternating cycle (first id repeated at the end) of *witness_len
 * ids; witness may be NULL. */
UNIPM_API unipm_status unipm_is_unique_pm(const unipm_graph* g,
                                          const unipm_matching* m, int* unique,
                                          int32_t** witness,
                                          size_t* witness_len);
UNIPM_API unipm_status unipm_kotzig_peel(const unipm_graph* g,
                                         const unipm_matching* m, int* unique,
                                         size_t* rounds);
/* Counts perfect matchings up to cap; *first gets the first one found or
 * NULL when there is none. first may be NULL. */
UNIPM_API unipm_status unipm_oracle(const unipm_graph* g, size_t cap,
                                    size_t* count, unipm_matching** first);

/* Forcing elimination. *found = 0 when no forcing set exists. Otherwise
 * order receives the 2*k ids u_1 v_1 ... u_k v_k. */
UNIPM_API unipm_status unipm_find_forcing_set(const unipm_graph* g, int* found,
                                              int32_t** order, size_t* k,
                                              unipm_matching** matching);

/* Intervals */
UNIPM_API unipm_status unipm_intervals_parse(const char* text,
                                             unipm_intervals** out);
UNIPM_API void unipm_intervals_free(unipm_intervals* rep);
UNIPM_API unipm_status unipm_intervals_graph(const unipm_intervals* rep,
                                             unipm_graph** out);
UNIPM_API unipm_status unipm_interval_pm(const unipm_intervals* rep,
                                         unipm_matching** out);

/* PMinCF */
typedef struct unipm_pmincf_stats {
  uint64_t cursor_advances;
  uint64_t lm_nb_updates;
  uint64_t end_extensions;
  uint64_t swap_extensions;
  uint64_t reseeds;
  uint64_t audited_commits;
  uint64_t adjacency_total;
} unipm_pmincf_stats;

UNIPM_API unipm_status unipm_pmincf(const unipm_graph* g, int audit,
                                    unipm_matching** out,
                                    unipm_pmincf_stats* stats);

/* Class G construction and recognition */
UNIPM_API unipm_status unipm_gclass_random(int32_t steps, double op2_bias,
                                           uint64_t seed, unipm_graph** graph,
                                           unipm_trace** trace);
UNIPM_API unipm_status unipm_trace_parse(const char* text, unipm_trace** out);
UNIPM_API unipm_status unipm_trace_format(const unipm_trace* t, char** out);
UNIPM_API unipm_status unipm_trace_replay(const unipm_trace* t,
                                          unipm_graph** out);
UNIPM_API size_t unipm_trace_steps(const unipm_trace* t);
UNIPM_API void unipm_trace_free(unipm_trace* t);
/* *out is NULL when the graph is not in the class. */
UNIPM_API unipm_status unipm_decompose(const unipm_graph* g, unipm_trace** out);

/* Automatic dispatch */
typedef enum unipm_verdict {
  UNIPM_UNIQUE = 0,
  UNIPM_NOT_UNIQUE = 1,
  UNIPM_UNDECIDED_CLASS = 3
} unipm_verdict;

UNIPM_API unipm_status unipm_check(const unipm_graph* g, int32_t oracle_cap,
                                   unipm_check_result** out);
UNIPM_API void unipm_check_result_free(unipm_check_result* r);
UNIPM_API unipm_verdict unipm_check_verdict(const unipm_check_result* r);
/* "forcing", "clawfree", "oracle" or "none". */
UNIPM_API const char* unipm_check_method(const unipm_check_result* r);
UNIPM_API const char* unipm_check_reason(const unipm_check_result* r);
/* Borrowed; NULL when absent. */
UNIPM_API const unipm_matching* unipm_check_matching(
    const unipm_check_result* r);
/* Borrowed; *len = 0 when absent. */
UNIPM_API const int32_t* unipm_check_witness(const unipm_check_result* r,
                                             size_t* len);
UNIPM_API int unipm_check_claw(const unipm_check_result* r, int32_t* center,
                               int32_t leaves[3]);
UNIPM_API void unipm_check_stats(const unipm_check_result* r,
                                 unipm_pmincf_stats* stats);

/* Instance generation. family is one of gclass, cograph, split, interval,
 * clique-chain. *trace is NULL for families without a trace. */
UNIPM_API unipm_status unipm_generate(const char* family, int32_t size,
                                      uint64_t seed, int unique,
                                      char** instance, char** trace);

/* Runs the PMinCF sweep over the given edge-count targets and returns CSV.
 * *bound_ok = 1 when every row satisfies cursor_advances <= 2m. */
UNIPM_API unipm_status unipm_bench(const char* family, const int64_t* targets,
                                   size_t count, int reps, uint64_t seed,
                                   char** csv, int* bound_ok);

#ifdef __cplusplus
}
#endif

#endif /* UNIPM_UNIPM_H_ */
