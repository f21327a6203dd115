#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "strongmatch/engine.hpp"
#include "strongmatch/exact.hpp"
#include "strongmatch/graph.hpp"

namespace strongmatch {

struct VerifyReport {
  bool induced_ok = true;
  bool bound_ok = true;        // 9 |M| >= n - i
  bool certificate_ok = true;  // only cleared by verify_certificate
  std::vector<std::string> details;

  bool ok() const noexcept { return induced_ok && bound_ok && certificate_ok; }
};

VerifyReport verify_solution(const Graph& g, const Matching& m);

/// Replays r.certificate against g without consulting the engine: every
/// step's removed set must be live and disjoint from earlier ones, reduction
/// steps must pass validate_step on the graph left by the previous steps,
/// EXACT steps must cover a whole component and match the exact optimum on
/// it, nothing may be left over, and the step matchings must add up to
/// r.matching. Also runs verify_solution on r.matching.
VerifyReport verify_certificate(const Graph& g, const SolveResult& r);

struct FuzzConfig {
  std::size_t trials = 1;
  std::size_t n_min = 1;
  std::size_t n_max = 1;
  std::uint64_t seed = 0;
  std::size_t cross_check_max_n = 20;  // at most 24
  std::size_t exact_threshold = 18;
  unsigned threads = 1;
  // Checked after the random trials, e.g. gen_c25() as a directed test.
  std::vector<Graph> extra_instances;
};

struct FuzzFailure {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::string kind;
  std::string detail;
  std::string graph;        // text graph format
  std::string certificate;  // empty when solve did not return
};

struct FuzzReport {
  std::size_t trials_run = 0;
  std::size_t accepted = 0;
  std::size_t rejected_c25 = 0;
  std::size_t cross_checked = 0;
  std::size_t vertices = 0;
  std::size_t matched = 0;
  SolveStats stats;
  std::vector<FuzzFailure> failures;
  double max_runtime_seconds = 0;
};

/// Seed of trial k: first splitmix64 output for state master + k.
std::uint64_t trial_seed(std::uint64_t master, std::size_t trial);

/// Graph of one trial: n uniform in [n_min, n_max] and the generator seed are
/// drawn from a Prng seeded with trial_seed; 2n extra edge attempts.
Graph trial_graph(const FuzzConfig& cfg, std::size_t trial);

FuzzReport fuzz(const FuzzConfig& cfg);

/// Line-oriented summary, stable across runs (no timings).
std::string format_fuzz_summary(const FuzzReport& r);

}  // namespace strongmatch
