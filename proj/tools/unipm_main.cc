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

// Command-line front end. Talks to the library only through unipm/unipm.h.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "unipm/unipm.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotUnique = 1;
constexpr int kExitInput = 2;
constexpr int kExitUndecided = 3;

struct GraphDel {
  void operator()(unipm_graph* g) const { unipm_graph_free(g); }
};
struct MatchingDel {
  void operator()(unipm_matching* m) const { unipm_matching_free(m); }
};
struct IntervalsDel {
  void operator()(unipm_intervals* r) const { unipm_intervals_free(r); }
};
struct TraceDel {
  void operator()(unipm_trace* t) const { unipm_trace_free(t); }
};
struct CheckDel {
  void operator()(unipm_check_result* r) const { unipm_check_result_free(r); }
};
struct StringDel {
  void operator()(char* s) const { unipm_string_free(s); }
};
struct IdsDel {
  void operator()(int32_t* ids) const { unipm_ids_free(ids); }
};
using GraphPtr = std::unique_ptr<unipm_graph, GraphDel>;
using MatchingPtr = std::unique_ptr<unipm_matching, MatchingDel>;
using IntervalsPtr = std::unique_ptr<unipm_intervals, IntervalsDel>;
using TracePtr = std::unique_ptr<unipm_trace, TraceDel>;
using CheckPtr = std::unique_ptr<unipm_check_result, CheckDel>;
using StringPtr = std::unique_ptr<char, StringDel>;
using IdsPtr = std::unique_ptr<int32_t, IdsDel>;

// Thrown for bad input; the message goes to stderr and the exit code is 2.
struct InputFailure {
  std::string message;
};

// Library failure that is not the caller's fault. Reported as a verdict.
struct AlgorithmFailure {
  std::string message;
};

void Ensure(unipm_status status) {
  if (status == UNIPM_OK) return;
  std::string msg = unipm_last_error();
  switch (status) {
    case UNIPM_ERR_PARSE:
    case UNIPM_ERR_USAGE:
    case UNIPM_ERR_VALIDATION:
      throw InputFailure{msg};
    case UNIPM_ERR_ALGORITHM:
      throw AlgorithmFailure{msg};
    default:
      throw std::runtime_error(msg);
  }
}

std::string ReadInput(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputFailure{"cannot open " + path};
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputFailure{"cannot write " + path};
  out << text;
}

GraphPtr LoadGraph(const std::string& path) {
  std::string text = ReadInput(path);
  unipm_graph* g = nullptr;
  Ensure(unipm_graph_parse(text.c_str(), &g));
  return GraphPtr(g);
}

std::string InstanceId(const std::string& path) {
  if (path == "-") return "stdin";
  auto slash = path.find_last_of('/');
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double Ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Key: value report shared by all analysis subcommands.
struct Report {
  std::string algorithm;
  std::string instance;
  int32_t n = 0;
  int64_t m = 0;
  std::string verdict;
  double elapsed_ms = 0;
  std::vector<std::pair<std::string, std::string>> extra;
  const unipm_matching* matching = nullptr;
  std::vector<int32_t> witness;

  void Add(const std::string& key, const std::string& value) {
    extra.emplace_back(key, value);
  }
  void Add(const std::string& key, uint64_t value) {
    extra.emplace_back(key, std::to_string(value));
  }

  void Print(std::ostream& out) const {
    out << "algorithm: " << algorithm << "\n";
    out << "instance: " << instance << "\n";
    out << "n: " << n << "\n";
    out << "m: " << m << "\n";
    out << "verdict: " << verdict << "\n";
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", elapsed_ms);
    out << "elapsed_ms: " << ms << "\n";
    for (const auto& [k, v] : extra) out << k << ": " << v << "\n";
    if (!witness.empty()) {
      out << "witness:";
      for (int32_t v : witness) out << " " << v;
      out << "\n";
    }
    if (matching != nullptr) {
      char* text = nullptr;
      Ensure(unipm_matching_format(matching, &text));
      StringPtr hold(text);
      out << "matching:\n" << text;
    }
  }
};

void AddStats(Report& r, const unipm_pmincf_stats& s) {
  r.Add("cursor_advances", s.cursor_advances);
  r.Add("lm_nb_updates", s.lm_nb_updates);
  r.Add("end_extensions", s.end_extensions);
  r.Add("swap_extensions", s.swap_extensions);
  r.Add("adjacency_total", s.adjacency_total);
}

// Runs the uniqueness verifier on (g, m) and fills verdict and witness.
bool VerifyUnique(const unipm_graph* g, const unipm_matching* m, Report& r) {
  int unique = 0;
  int32_t* cycle = nullptr;
  size_t len = 0;
  Ensure(unipm_is_unique_pm(g, m, &unique, &cycle, &len));
  IdsPtr hold(cycle);
  if (unique) {
    r.verdict = "unique";
    return true;
  }
  r.verdict = "not-unique";
  r.witness.assign(cycle, cycle + len);
  return false;
}

int RunCheck(const std::string& path, int32_t cap) {
  GraphPtr g = LoadGraph(path);
  Report r;
  r.algorithm = "check";
  r.instance = InstanceId(path);
  r.n = unipm_graph_order(g.get());
  r.m = unipm_graph_size(g.get());
  Stopwatch sw;
  unipm_check_result* raw = nullptr;
  Ensure(unipm_check(g.get(), cap, &raw));
  CheckPtr res(raw);
  r.elapsed_ms = sw.Ms();
  r.Add("method", unipm_check_method(res.get()));
  int code = kExitOk;
  switch (unipm_check_verdict(res.get())) {
    case UNIPM_UNIQUE:
      r.verdict = "unique";
      break;
    case UNIPM_NOT_UNIQUE:
      r.verdict = "not-unique";
      code = kExitNotUnique;
      break;
    case UNIPM_UNDECIDED_CLASS:
      r.verdict = "undecided-class";
      code = kExitUndecided;
      break;
  }
  if (*unipm_check_reason(res.get()) != '\0') {
    r.Add("reason", unipm_check_reason(res.get()));
  }
  int32_t center = 0;
  int32_t leaves[3];
  if (unipm_check_claw(res.get(), &center, leaves)) {
    r.Add("claw", std::to_string(center) + " " + std::to_string(leaves[0]) +
                      " " + std::to_string(leaves[1]) + " " +
                      std::to_string(leaves[2]));
  }
  if (std::string(unipm_check_method(res.get())) == "clawfree") {
    unipm_pmincf_stats s{};
    unipm_check_stats(res.get(), &s);
    AddStats(r, s);
  }
  size_t len = 0;
  const int32_t* w = unipm_check_witness(res.get(), &len);
  if (len > 0) r.witness.assign(w, w + len);
  r.matching = unipm_check_matching(res.get());
  r.Print(std::cout);
  return code;
}

int RunForce(const std::string& path) {
  GraphPtr g = LoadGraph(path);
  Report r;
  r.algorithm = "forcing";
  r.instance = InstanceId(path);
  r.n = unipm_graph_order(g.get());
  r.m = unipm_graph_size(g.get());
  Stopwatch sw;
  int found = 0;
  int32_t* order = nullptr;
  size_t k = 0;
  unipm_matching* raw = nullptr;
  Ensure(unipm_find_forcing_set(g.get(), &found, &order, &k, &raw));
  IdsPtr hold(order);
  MatchingPtr m(raw);
  r.elapsed_ms = sw.Ms();
  if (!found) {
    r.verdict = "NO FORCING SET";
    r.Print(std::cout);
    return kExitNotUnique;
  }
  r.verdict = "unique";
  std::string seq;
  for (size_t i = 0; i < k; ++i) {
    if (i > 0) seq += ",";
    seq += "(" + std::to_string(order[2 * i]) + " " +
           std::to_string(order[2 * i + 1]) + ")";
  }
  r.Add("forced", seq);
  r.matching = m.get();
  r.Print(std::cout);
  return kExitOk;
}

int RunInterval(const std::string& path) {
  std::string text = ReadInput(path);
  unipm_intervals* raw_rep = nullptr;
  Ensure(unipm_intervals_parse(text.c_str(), &raw_rep));
  IntervalsPtr rep(raw_rep);
  unipm_graph* raw_g = nullptr;
  Ensure(unipm_intervals_graph(rep.get(), &raw_g));
  GraphPtr g(raw_g);
  Report r;
  r.algorithm = "interval";
  r.instance = InstanceId(path);
  r.n = unipm_graph_order(g.get());
  r.m = unipm_graph_size(g.get());
  Stopwatch sw;
  unipm_matching* raw_m = nullptr;
  try {
    Ensure(unipm_interval_pm(rep.get(), &raw_m));
  } catch (const AlgorithmFailure& f) {
    r.elapsed_ms = sw.Ms();
    r.verdict = "failure: " + f.message;
    r.Print(std::cout);
    return kExitNotUnique;
  }
  MatchingPtr m(raw_m);
  r.elapsed_ms = sw.Ms();
  bool unique = VerifyUnique(g.get(), m.get(), r);
  r.matching = m.get();
  r.Print(std::cout);
  return unique ? kExitOk : kExitNotUnique;
}

int RunClawfree(const std::string& path, bool check_claw, bool stats) {
  GraphPtr g = LoadGraph(path);
  Report r;
  r.algorithm = "pmincf";
  r.instance = InstanceId(path);
  r.n = unipm_graph_order(g.get());
  r.m = unipm_graph_size(g.get());
  if (check_claw) {
    int found = 0;
    int32_t center = 0;
    int32_t leaves[3];
    Ensure(unipm_graph_find_claw(g.get(), &found, &center, leaves));
    if (found) {
      throw InputFailure{"input has a claw: center " + std::to_string(center) +
                         ", leaves " + std::to_string(leaves[0]) + " " +
                         std::to_string(leaves[1]) + " " +
                         std::to_string(leaves[2])};
    }
  }
  Stopwatch sw;
  unipm_matching* raw = nullptr;
  unipm_pmincf_stats s{};
  try {
    Ensure(unipm_pmincf(g.get(), 0, &raw, &s));
  } catch (const AlgorithmFailure& f) {
    r.elapsed_ms = sw.Ms();
    r.verdict = "failure: " + f.message;
    r.Print(std::cout);
    return kExitNotUnique;
  }
  MatchingPtr m(raw);
  r.elapsed_ms = sw.Ms();
  bool unique = VerifyUnique(g.get(), m.get(), r);
  if (stats) {
    AddStats(r, s);
    r.Add("bound_2m", s.cursor_advances <= 2 * static_cast<uint64_t>(r.m)
                          ? "ok"
                          : "violated");
  }
  r.matching = m.get();
  r.Print(std::cout);
  return unique ? kExitOk : kExitNotUnique;
}

int RunOracle(const std::string& path, size_t cap) {
  GraphPtr g = LoadGraph(path);
  Report r;
  r.algorithm = "oracle";
  r.instance = InstanceId(path);
  r.n = unipm_graph_order(g.get());
  r.m = unipm_graph_size(g.get());
  Stopwatch sw;
  size_t count = 0;
  unipm_matching* raw = nullptr;
  Ensure(unipm_oracle(g.get(), cap, &count, &raw));
  MatchingPtr m(raw);
  r.elapsed_ms = sw.Ms();
  r.verdict = count == 1 ? "unique"
              : count == 0 ? "no-perfect-matching"
                           : "not-unique";
  r.Add("pm_count", std::to_string(count) + (count == cap ? "+" : ""));
  r.Add("cap", cap);
  r.matching = m.get();
  r.Print(std::cout);
  return count == 1 ? kExitOk : kExitNotUnique;
}

int RunDecompose(const std::string& path) {
  GraphPtr g = LoadGraph(path);
  unipm_trace* raw = nullptr;
  Ensure(unipm_decompose(g.get(), &raw));
  TracePtr t(raw);
  if (!t) {
    std::cout << "NOT IN CLASS\n";
    return kExitNotUnique;
  }
  char* text = nullptr;
  Ensure(unipm_trace_format(t.get(), &text));
  StringPtr hold(text);
  std::cout << text;
  return kExitOk;
}

int RunReplay(const std::string& path) {
  std::string text = ReadInput(path);
  unipm_trace* raw = nullptr;
  Ensure(unipm_trace_parse(text.c_str(), &raw));
  TracePtr t(raw);
  unipm_graph* raw_g = nullptr;
  Ensure(unipm_trace_replay(t.get(), &raw_g));
  GraphPtr g(raw_g);
  char* out = nullptr;
  Ensure(unipm_graph_serialize(g.get(), &out));
  StringPtr hold(out);
  std::cout << out;
  return kExitOk;
}

struct GenArgs {
  std::string family = "gclass";
  int32_t steps = -1;
  int32_t size = -1;
  uint64_t seed = 1;
  double op2_bias = 0.5;
  bool unique = false;
  std::string out;
};

std::string Commented(const std::string& text) {
  std::string out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out += "# " + line + "\n";
  return out;
}

int RunGen(const GenArgs& a) {
  std::string instance;
  std::string trace;
  bool has_trace = false;
  if (a.family == "gclass" && a.steps >= 0) {
    unipm_graph* raw_g = nullptr;
    unipm_trace* raw_t = nullptr;
    Ensure(unipm_gclass_random(a.steps, a.op2_bias, a.seed, &raw_g, &raw_t));
    GraphPtr g(raw_g);
    TracePtr t(raw_t);
    char* gs = nullptr;
    Ensure(unipm_graph_serialize(g.get(), &gs));
    StringPtr hold_g(gs);
    char* ts = nullptr;
    Ensure(unipm_trace_format(t.get(), &ts));
    StringPtr hold_t(ts);
    instance = gs;
    trace = ts;
    has_trace = true;
  } else {
    if (a.size < 0) throw InputFailure{"gen needs --size (or --steps for gclass)"};
    char* is = nullptr;
    char* ts = nullptr;
    Ensure(unipm_generate(a.family.c_str(), a.size, a.seed, a.unique ? 1 : 0,
                          &is, &ts));
    StringPtr hold_i(is);
    StringPtr hold_t(ts);
    instance = is;
    if (ts != nullptr) {
      trace = ts;
      has_trace = true;
    }
  }
  if (a.out.empty()) {
    std::cout << instance;
    if (has_trace) std::cout << Commented(trace);
    return kExitOk;
  }
  const bool intervals = a.family == "interval";
  WriteFile(a.out + (intervals ? ".iv" : ".g"), instance);
  if (has_trace) WriteFile(a.out + ".trace", trace);
  return kExitOk;
}

std::vector<int64_t> ParseSizes(const std::string& list) {
  std::vector<int64_t> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      size_t used = 0;
      double v = std::stod(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument(item);
      out.push_back(static_cast<int64_t>(v));
    } catch (const std::exception&) {
      throw InputFailure{"bad size '" + item + "' in --sizes"};
    }
  }
  if (out.empty()) throw InputFailure{"--sizes is empty"};
  return out;
}

int RunBench(const std::string& family, const std::string& sizes, int reps,
             uint64_t seed, const std::string& out) {
  std::vector<int64_t> targets = ParseSizes(sizes);
  char* csv = nullptr;
  int ok = 0;
  Ensure(unipm_bench(family.c_str(), targets.data(), targets.size(), reps,
                     seed, &csv, &ok));
  StringPtr hold(csv);
  if (out.empty()) {
    std::cout << csv;
  } else {
    WriteFile(out, csv);
  }
  if (!ok) {
    std::cerr << "cursor advances exceeded 2m\n";
    return kExitNotUnique;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unique perfect matching toolkit"};
  app.require_subcommand(1);

  std::string file;
  int32_t oracle_cap = 16;
  auto* check = app.add_subcommand("check", "decide unique perfect matching");
  check->add_option("file", file, "graph file ('-' for stdin)")->required();
  check->add_option("--oracle-cap", oracle_cap,
                    "largest order handed to enumeration");

  auto* force = app.add_subcommand("force", "forcing-set elimination");
  force->add_option("file", file)->required();

  auto* interval = app.add_subcommand("interval", "interval sweep matching");
  interval->add_option("file", file, "interval file")->required();

  bool check_claw = false;
  bool stats = false;
  auto* clawfree = app.add_subcommand("clawfree", "PMinCF matching");
  clawfree->add_option("file", file)->required();
  clawfree->add_flag("--check-claw", check_claw, "reject inputs with a claw");
  clawfree->add_flag("--stats", stats, "print operation counters");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("--family", gen_args.family)
      ->check(CLI::IsMember(
          {"gclass", "cograph", "split", "interval", "clique-chain"}));
  gen->add_option("--steps", gen_args.steps, "gclass construction steps");
  gen->add_option("--size", gen_args.size, "vertex count");
  gen->add_option("--seed", gen_args.seed);
  gen->add_option("--op2-bias", gen_args.op2_bias)
      ->check(CLI::Range(0.0, 1.0));
  gen->add_flag("--unique", gen_args.unique,
                "ask for a unique perfect matching (split)");
  gen->add_option("--out", gen_args.out, "write PREFIX.g/.iv and PREFIX.trace");

  auto* decompose = app.add_subcommand("decompose", "recognize class G");
  decompose->add_option("file", file)->required();

  auto* replay = app.add_subcommand("replay", "rebuild a graph from a trace");
  replay->add_option("file", file, "trace file")->required();

  size_t cap = 64;
  auto* oracle = app.add_subcommand("oracle", "enumerate perfect matchings");
  oracle->add_option("file", file)->required();
  oracle->add_option("--cap", cap)->check(CLI::PositiveNumber);

  std::string bench_family = "gclass";
  std::string sizes = "10000,20000,40000";
  int reps = 3;
  uint64_t bench_seed = 1;
  std::string bench_out;
  auto* bench = app.add_subcommand("bench", "PMinCF timing sweep (CSV)");
  bench->add_option("--family", bench_family)
      ->check(CLI::IsMember({"gclass", "clique-chain"}));
  bench->add_option("--sizes", sizes, "comma-separated edge targets");
  bench->add_option("--reps", reps)->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_seed);
  bench->add_option("--out", bench_out, "CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (const char* env = std::getenv("UNIPM_SEED")) {
    try {
      gen_args.seed = std::stoull(env);
      bench_seed = gen_args.seed;
    } catch (const std::exception&) {
      std::cerr << "error: UNIPM_SEED is not an unsigned integer\n";
      return kExitInput;
    }
  }

  try {
    if (check->parsed()) return RunCheck(file, oracle_cap);
    if (force->parsed()) return RunForce(file);
    if (interval->parsed()) return RunInterval(file);
    if (clawfree->parsed()) return RunClawfree(file, check_claw, stats);
    if (gen->parsed()) return RunGen(gen_args);
    if (decompose->parsed()) return RunDecompose(file);
    if (replay->parsed()) return RunReplay(file);
    if (oracle->parsed()) return RunOracle(file, cap);
    if (bench->parsed()) {
      return RunBench(bench_family, sizes, reps, bench_seed, bench_out);
    }
  } catch (const InputFailure& f) {
    std::cerr << "error: " << f.message << "\n";
    return kExitInput;
  } catch (const AlgorithmFailure& f) {
    std::cerr << "error: " << f.message << "\n";
    return kExitNotUnique;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return kExitInput;
}
