#include "sepcover/bench.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "sepcover/dp_naive.hpp"
#include "sepcover/interval.hpp"
#include "sepcover/solver.hpp"

namespace sepcover {

namespace {

BenchRecord one_run(const CoverageInstance& inst, const std::string& solver,
                    int rep, std::uint64_t seed, int r_override) {
  BenchRecord rec;
  rec.n = inst.n();
  rec.m = inst.m();
  rec.rep = rep;
  rec.seed = seed;
  rec.solver = solver;

  const auto t0 = std::chrono::steady_clock::now();
  Solution sol;
  if (solver == "fast") {
    SolverConfig cfg;
    cfg.seed = seed;
    cfg.r = r_override;
    sol = solve_fast(inst, cfg);
    rec.r = r_override > 0
                ? r_override
                : std::min(static_cast<int>(
                               std::ceil(std::sqrt(double(inst.m())))),
                           inst.n());
  } else if (solver == "naive") {
    sol = solve_naive(inst);
  } else if (solver == "interval") {
    sol = solve_interval(inst);
  } else {
    throw std::invalid_argument("bench: unknown solver " + solver);
  }
  const auto t1 = std::chrono::steady_clock::now();
  rec.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  rec.counters = sol.counters;
  rec.delta = sol.delta;
  return rec;
}

}  // namespace

std::vector<BenchRecord> run_bench(const std::vector<int>& sizes, int reps,
                                   const std::string& solver,
                                   std::uint64_t seed0, Profile profile,
                                   int r_override) {
  std::vector<std::string> solvers;
  if (solver == "both") {
    solvers = {"fast", "naive"};
  } else {
    solvers = {solver};
  }
  std::vector<BenchRecord> out;
  for (int n : sizes) {
    for (int rep = 0; rep < reps; ++rep) {
      const std::uint64_t seed = seed0 + 1000003ULL * rep + 17ULL * n;
      GenOptions opts;
      opts.profile = profile;
      const CoverageInstance inst = generate(n, n, seed, opts);
      for (const std::string& s : solvers)
        out.push_back(one_run(inst, s, rep, seed, r_override));
    }
  }
  return out;
}

double loglog_slope(const std::vector<BenchRecord>& records,
                    const std::string& solver) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int k = 0;
  for (const BenchRecord& r : records) {
    if (r.solver != solver) continue;
    const double x = std::log(double(r.n));
    const double y = std::log(double(r.counters.total()));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++k;
  }
  if (k < 2) throw std::invalid_argument("loglog_slope: need >= 2 records");
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

std::string bench_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream os;
  os << "# sepcover bench v1\n";
  os << "n,m,r,solver,rep,seed,wall_ms,ops_total,build_cross_tests,"
        "build_resamples,locate_steps,find_point_scans,find_child_evals,"
        "reset_point_updates,drain_pops,list_appends,heap_ops,"
        "ancestor_steps,scan_ops,delta\n";
  for (const BenchRecord& r : records) {
    const Counters& c = r.counters;
    os << r.n << ',' << r.m << ',' << r.r << ',' << r.solver << ',' << r.rep
       << ',' << r.seed << ',' << r.wall_ms << ',' << c.total() << ','
       << c.build_cross_tests << ',' << c.build_resamples << ','
       << c.locate_steps << ',' << c.find_point_scans << ','
       << c.find_child_evals << ',' << c.reset_point_updates << ','
       << c.drain_pops << ',' << c.list_appends << ',' << c.heap_ops << ','
       << c.ancestor_steps << ',' << c.scan_ops << ',' << r.delta << '\n';
  }
  return os.str();
}

}  // namespace sepcover
