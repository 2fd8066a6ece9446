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

// Exercises the shared library through the public header only.
#include "unipm/unipm.h"

#include <gtest/gtest.h>

#include <string>
#include <vector>

namespace {

const char* kPaw = "4 4\n0 1\n0 2\n1 2\n0 3\n";
const char* kC4 = "4 4\n0 1\n1 2\n2 3\n3 0\n";

unipm_graph* Parse(const char* text) {
  unipm_graph* g = nullptr;
  EXPECT_EQ(unipm_graph_parse(text, &g), UNIPM_OK) << unipm_last_error();
  return g;
}

std::string Take(char* s) {
  std::string out = s == nullptr ? "" : s;
  unipm_string_free(s);
  return out;
}

TEST(CApi, ParseErrorsCarryMessage) {
  unipm_graph* g = nullptr;
  EXPECT_EQ(unipm_graph_parse("2 1\n0 2\n", &g), UNIPM_ERR_PARSE);
  EXPECT_EQ(g, nullptr);
  EXPECT_STREQ(unipm_last_error(), "vertex 2 out of range at line 2");
  EXPECT_EQ(unipm_graph_parse(nullptr, &g), UNIPM_ERR_USAGE);
}

TEST(CApi, GraphBuildAndSerialize) {
  unipm_graph* g = nullptr;
  ASSERT_EQ(unipm_graph_new(3, &g), UNIPM_OK);
  int added = -1;
  EXPECT_EQ(unipm_graph_add_edge(g, 0, 1, &added), UNIPM_OK);
  EXPECT_EQ(added, 1);
  EXPECT_EQ(unipm_graph_add_edge(g, 1, 0, &added), UNIPM_OK);
  EXPECT_EQ(added, 0);
  EXPECT_EQ(unipm_graph_add_edge(g, 1, 1, nullptr), UNIPM_ERR_USAGE);
  EXPECT_EQ(unipm_graph_order(g), 3);
  EXPECT_EQ(unipm_graph_size(g), 1);
  char* text = nullptr;
  ASSERT_EQ(unipm_graph_serialize(g, &text), UNIPM_OK);
  EXPECT_EQ(Take(text), "3 1\n0 1\n");
  unipm_graph_free(g);
}

TEST(CApi, ClawAndUniqueness) {
  unipm_graph* star = Parse("4 3\n0 1\n0 2\n0 3\n");
  int found = 0;
  int32_t center = -1;
  int32_t leaves[3];
  ASSERT_EQ(unipm_graph_find_claw(star, &found, &center, leaves), UNIPM_OK);
  EXPECT_EQ(found, 1);
  EXPECT_EQ(center, 0);
  unipm_graph_free(star);

  unipm_graph* c4 = Parse(kC4);
  const int32_t pairs[] = {0, 1, 2, 3};
  unipm_matching* m = nullptr;
  ASSERT_EQ(unipm_matching_from_pairs(pairs, 2, &m), UNIPM_OK);
  EXPECT_EQ(unipm_verify_pm(c4, m), 1);
  int unique = -1;
  int32_t* w = nullptr;
  size_t len = 0;
  ASSERT_EQ(unipm_is_unique_pm(c4, m, &unique, &w, &len), UNIPM_OK);
  EXPECT_EQ(unique, 0);
  EXPECT_EQ(std::vector<int32_t>(w, w + len),
            (std::vector<int32_t>{0, 1, 2, 3, 0}));
  unipm_ids_free(w);
  size_t rounds = 0;
  ASSERT_EQ(unipm_kotzig_peel(c4, m, &unique, &rounds), UNIPM_OK);
  EXPECT_EQ(unique, 0);
  unipm_matching_free(m);

  const int32_t partial[] = {0, 1};
  ASSERT_EQ(unipm_matching_from_pairs(partial, 1, &m), UNIPM_OK);
  EXPECT_EQ(unipm_verify_pm(c4, m), 0);
  EXPECT_EQ(unipm_is_unique_pm(c4, m, &unique, nullptr, nullptr),
            UNIPM_ERR_USAGE);
  unipm_matching_free(m);
  unipm_graph_free(c4);
}

TEST(CApi, OracleAndForcing) {
  unipm_graph* paw = Parse(kPaw);
  size_t count = 0;
  unipm_matching* first = nullptr;
  ASSERT_EQ(unipm_oracle(paw, 16, &count, &first), UNIPM_OK);
  EXPECT_EQ(count, 1u);
  char* text = nullptr;
  ASSERT_EQ(unipm_matching_format(first, &text), UNIPM_OK);
  EXPECT_EQ(Take(text), "0 3\n1 2\n");
  int32_t u = 0;
  int32_t v = 0;
  ASSERT_EQ(unipm_matching_pair(first, 1, &u, &v), UNIPM_OK);
  EXPECT_EQ(u, 1);
  EXPECT_EQ(v, 2);
  EXPECT_EQ(unipm_matching_pair(first, 2, &u, &v), UNIPM_ERR_USAGE);
  unipm_matching_free(first);

  int found = 0;
  int32_t* order = nullptr;
  size_t k = 0;
  unipm_matching* m = nullptr;
  ASSERT_EQ(unipm_find_forcing_set(paw, &found, &order, &k, &m), UNIPM_OK);
  EXPECT_EQ(found, 1);
  EXPECT_EQ(std::vector<int32_t>(order, order + 2 * k),
            (std::vector<int32_t>{3, 0, 1, 2}));
  EXPECT_EQ(unipm_matching_size(m), 2u);
  unipm_ids_free(order);
  unipm_matching_free(m);
  unipm_graph_free(paw);
}

TEST(CApi, Intervals) {
  unipm_intervals* rep = nullptr;
  ASSERT_EQ(unipm_intervals_parse("4\n0 1 10\n1 2 3\n2 4 9\n3 5 6\n", &rep),
            UNIPM_OK);
  unipm_matching* m = nullptr;
  ASSERT_EQ(unipm_interval_pm(rep, &m), UNIPM_OK);
  char* text = nullptr;
  ASSERT_EQ(unipm_matching_format(m, &text), UNIPM_OK);
  EXPECT_EQ(Take(text), "0 1\n2 3\n");
  unipm_graph* g = nullptr;
  ASSERT_EQ(unipm_intervals_graph(rep, &g), UNIPM_OK);
  EXPECT_EQ(unipm_graph_size(g), 4);
  unipm_graph_free(g);
  unipm_matching_free(m);
  unipm_intervals_free(rep);

  EXPECT_EQ(unipm_intervals_parse("2\n0 1 4\n1 4 6\n", &rep), UNIPM_ERR_PARSE);
  ASSERT_EQ(unipm_intervals_parse("2\n0 1 2\n1 3 4\n", &rep), UNIPM_OK);
  EXPECT_EQ(unipm_interval_pm(rep, &m), UNIPM_ERR_ALGORITHM);
  EXPECT_STREQ(unipm_last_error(), "stuck at vertex 0");
  unipm_intervals_free(rep);
}

TEST(CApi, PmincfAndCheck) {
  unipm_graph* paw = Parse(kPaw);
  unipm_matching* m = nullptr;
  unipm_pmincf_stats stats{};
  ASSERT_EQ(unipm_pmincf(paw, 1, &m, &stats), UNIPM_OK);
  EXPECT_EQ(unipm_verify_pm(paw, m), 1);
  EXPECT_EQ(stats.audited_commits, 2u);
  EXPECT_LE(stats.cursor_advances, 8u);
  unipm_matching_free(m);

  unipm_check_result* r = nullptr;
  ASSERT_EQ(unipm_check(paw, 16, &r), UNIPM_OK);
  EXPECT_EQ(unipm_check_verdict(r), UNIPM_UNIQUE);
  EXPECT_STREQ(unipm_check_method(r), "forcing");
  EXPECT_EQ(unipm_matching_size(unipm_check_matching(r)), 2u);
  unipm_check_result_free(r);
  unipm_graph_free(paw);

  unipm_graph* c4 = Parse(kC4);
  ASSERT_EQ(unipm_check(c4, 16, &r), UNIPM_OK);
  EXPECT_EQ(unipm_check_verdict(r), UNIPM_NOT_UNIQUE);
  size_t len = 0;
  const int32_t* w = unipm_check_witness(r, &len);
  EXPECT_EQ(std::vector<int32_t>(w, w + len),
            (std::vector<int32_t>{0, 1, 2, 3, 0}));
  unipm_check_result_free(r);
  unipm_graph_free(c4);

  unipm_graph* odd = Parse("3 2\n0 1\n1 2\n");
  EXPECT_EQ(unipm_pmincf(odd, 0, &m, nullptr), UNIPM_ERR_ALGORITHM);
  unipm_graph_free(odd);
}

TEST(CApi, GClassTraceRoundTrip) {
  unipm_graph* g = nullptr;
  unipm_trace* t = nullptr;
  ASSERT_EQ(unipm_gclass_random(20, 0.5, 3, &g, &t), UNIPM_OK);
  EXPECT_EQ(unipm_graph_order(g), 42);
  EXPECT_EQ(unipm_trace_steps(t), 21u);
  char* text = nullptr;
  ASSERT_EQ(unipm_trace_format(t, &text), UNIPM_OK);
  unipm_trace* parsed = nullptr;
  ASSERT_EQ(unipm_trace_parse(text, &parsed), UNIPM_OK);
  unipm_string_free(text);
  unipm_graph* replayed = nullptr;
  ASSERT_EQ(unipm_trace_replay(parsed, &replayed), UNIPM_OK);
  char* a = nullptr;
  char* b = nullptr;
  unipm_graph_serialize(g, &a);
  unipm_graph_serialize(replayed, &b);
  EXPECT_EQ(Take(a), Take(b));

  unipm_trace* d = nullptr;
  ASSERT_EQ(unipm_decompose(g, &d), UNIPM_OK);
  ASSERT_NE(d, nullptr);
  unipm_trace_free(d);
  unipm_graph* c4 = Parse(kC4);
  ASSERT_EQ(unipm_decompose(c4, &d), UNIPM_OK);
  EXPECT_EQ(d, nullptr);

  unipm_trace* bad = nullptr;
  ASSERT_EQ(unipm_trace_parse("INIT 0 1\nOP1 5 2 3\n", &bad), UNIPM_OK);
  unipm_graph* none = nullptr;
  EXPECT_EQ(unipm_trace_replay(bad, &none), UNIPM_ERR_VALIDATION);

  unipm_trace_free(bad);
  unipm_graph_free(c4);
  unipm_graph_free(replayed);
  unipm_trace_free(parsed);
  unipm_trace_free(t);
  unipm_graph_free(g);
}

TEST(CApi, GenerateAndBench) {
  char* inst = nullptr;
  char* trace = nullptr;
  ASSERT_EQ(unipm_generate("cograph", 8, 1, 0, &inst, &trace), UNIPM_OK);
  EXPECT_EQ(trace, nullptr);
  std::string text = Take(inst);
  EXPECT_EQ(text.rfind("8 ", 0), 0u);
  EXPECT_EQ(unipm_generate("cograph", 7, 1, 0, &inst, &trace),
            UNIPM_ERR_USAGE);
  EXPECT_EQ(unipm_generate("tree", 8, 1, 0, &inst, &trace), UNIPM_ERR_USAGE);

  const int64_t targets[] = {500, 1000};
  char* csv = nullptr;
  int ok = 0;
  ASSERT_EQ(unipm_bench("gclass", targets, 2, 1, 1, &csv, &ok), UNIPM_OK);
  EXPECT_EQ(ok, 1);
  std::string out = Take(csv);
  EXPECT_EQ(out.rfind("schema,family,", 0), 0u);
  EXPECT_EQ(std::count(out.begin(), out.end(), '\n'), 3);
}

}  // namespace
