#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sepcover/counters.hpp"
#include "sepcover/instance.hpp"

namespace sepcover {

/// One timed solve. Counters are exact event counts; the scaling fit uses
/// them rather than wall time so it is deterministic.
struct BenchRecord {
  int n = 0;
  int m = 0;
  int r = 0;
  int rep = 0;
  std::uint64_t seed = 0;
  std::string solver;
  double wall_ms = 0;
  Counters counters;
  double delta = 0;
};

/// Solves generated instances with n = m for each size. `solver` is "fast",
/// "naive", "interval" or "both" (fast + naive).
std::vector<BenchRecord> run_bench(const std::vector<int>& sizes, int reps,
                                   const std::string& solver,
                                   std::uint64_t seed0,
                                   Profile profile = Profile::uniform,
                                   int r_override = 0);

/// Least-squares slope of log(total ops) against log(n) for one solver's
/// records; the observable complexity exponent.
double loglog_slope(const std::vector<BenchRecord>& records,
                    const std::string& solver);

/// CSV with a versioned header comment; columns are fixed.
std::string bench_csv(const std::vector<BenchRecord>& records);

}  // namespace sepcover
