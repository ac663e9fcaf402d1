// Command-line surface: generate, solve, verify, bench, render.
//
// Exit codes: 0 solved/ok, 1 error, 2 infeasible instance, 3 verify mismatch.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sepcover/bench.hpp"
#include "sepcover/bruteforce.hpp"
#include "sepcover/dp_naive.hpp"
#include "sepcover/interval.hpp"
#include "sepcover/solver.hpp"
#include "sepcover/svg.hpp"

using namespace sepcover;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitMismatch = 3;

int worker_count() {
  if (const char* env = std::getenv("SEPCOVER_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// ---------------------------------------------------------------------------
// solve

struct SolveOptions {
  std::string input;
  std::string output = "-";
  std::string solver = "auto";
  int r = 0;
  int rho = 4;
  std::uint64_t seed = 1;
  double eps = kDefaultEps;
  bool verify_exact = false;
  bool debug_invariants = false;
  bool shadow_oracle = false;
};

Solution solve_coverage_with(const CoverageInstance& inst,
                             const std::string& solver,
                             const SolveOptions& o) {
  SolverConfig cfg;
  cfg.r = o.r;
  cfg.rho = o.rho;
  cfg.seed = o.seed;
  cfg.eps = o.eps;
  cfg.debug_invariants = o.debug_invariants;
  cfg.shadow_oracle = o.shadow_oracle;
  if (solver == "naive")
    return o.verify_exact ? to_solution(solve_naive_exact(inst))
                          : solve_naive(inst, o.eps);
  if (solver == "interval")
    return o.verify_exact ? to_solution(solve_interval_exact(inst))
                          : solve_interval(inst, o.eps);
  if (solver == "fast")
    return o.verify_exact ? to_solution(solve_fast_exact(inst, cfg))
                          : solve_fast(inst, cfg);
  throw std::invalid_argument("unknown solver: " + solver);
}

Solution solve_halfplanes_interval_cli(const HalfplaneInstance& inst,
                                       bool exact, double eps) {
  std::vector<double> w(inst.m());
  for (int j = 0; j < inst.m(); ++j) w[j] = inst.halfplanes[j].weight;
  auto contains = [&](int j, int p) {
    return exact ? halfplane_contains_exact(inst.halfplanes[j].h,
                                            inst.points[p])
                 : halfplane_contains(inst.halfplanes[j].h, inst.points[p],
                                      eps);
  };
  Counters ops;
  const auto segs =
      build_segments(sorted_order(inst.points), inst.m(), contains, &ops);
  if (exact) {
    auto res = solve_intervals<Exact>(segs, inst.n(), w);
    res.counters += ops;
    return to_solution(res);
  }
  auto res = solve_intervals<double>(segs, inst.n(), w);
  res.counters += ops;
  return res;
}

int cmd_solve(const SolveOptions& o) {
  const std::string text = read_file(o.input);
  const InstanceKind kind = kind_of_json(text);

  Solution sol;
  int n = 0, m = 0;
  std::string solver = o.solver;
  const auto t0 = std::chrono::steady_clock::now();

  if (kind == InstanceKind::coverage) {
    const CoverageInstance inst = coverage_from_json(text);
    const auto rep = validate(inst);
    if (rep.has_errors()) {
      std::cerr << rep.to_string();
      return kExitError;
    }
    if (!rep.ok()) std::cerr << rep.to_string();
    n = inst.n();
    m = inst.m();
    if (solver == "auto") solver = (n >= 64 && m >= 64) ? "fast" : "naive";
    sol = solve_coverage_with(inst, solver, o);
  } else if (kind == InstanceKind::hitting) {
    const HittingInstance hit = hitting_from_json(text);
    const auto rep = validate(hit);
    if (rep.has_errors()) {
      std::cerr << rep.to_string();
      return kExitError;
    }
    n = hit.n();
    m = hit.m();
    if (solver == "auto") solver = (n >= 64 && m >= 64) ? "fast" : "naive";
    const CoverageInstance cov = hitting_to_coverage(hit);
    sol = solve_coverage_with(cov, solver, o);  // chosen: point indices
  } else {
    const HalfplaneInstance hp = halfplanes_from_json(text);
    const auto rep = validate(hp);
    if (rep.has_errors()) {
      std::cerr << rep.to_string();
      return kExitError;
    }
    n = hp.n();
    m = hp.m();
    if (solver == "auto") solver = (n >= 64 && m >= 64) ? "fast" : "naive";
    SolverConfig cfg;
    cfg.r = o.r;
    cfg.rho = o.rho;
    cfg.seed = o.seed;
    cfg.eps = o.eps;
    cfg.debug_invariants = o.debug_invariants;
    cfg.shadow_oracle = o.shadow_oracle;
    if (solver == "naive") {
      sol = o.verify_exact ? to_solution(solve_halfplanes_naive_exact(hp))
                           : solve_halfplanes_naive(hp, o.eps);
    } else if (solver == "interval") {
      sol = solve_halfplanes_interval_cli(hp, o.verify_exact, o.eps);
    } else if (solver == "fast") {
      sol = o.verify_exact ? to_solution(solve_halfplanes_lower_exact(hp, cfg))
                           : solve_halfplanes_lower(hp, cfg);
    } else {
      throw std::invalid_argument("unknown solver: " + solver);
    }
  }

  const auto t1 = std::chrono::steady_clock::now();
  const double wall =
      std::chrono::duration<double, std::milli>(t1 - t0).count();
  write_file(o.output, solution_to_json(sol, solver, n, m, wall));
  return sol.feasible ? kExitOk : kExitInfeasible;
}

// ---------------------------------------------------------------------------
// generate

struct GenerateOptions {
  int n = 10;
  int m = 10;
  std::uint64_t seed = 1;
  std::string profile = "uniform";
  std::string kind = "coverage";
  double radius = 1.0;
  bool infeasible = false;
  std::string output = "-";
};

int cmd_generate(const GenerateOptions& o) {
  GenOptions opts;
  opts.radius = o.radius;
  opts.profile = profile_from_string(o.profile);
  opts.infeasible = o.infeasible;
  std::string text;
  if (o.kind == "coverage") {
    text = to_json(generate(o.n, o.m, o.seed, opts));
  } else if (o.kind == "hitting") {
    text = to_json(generate_hitting(o.n, o.m, o.seed, opts));
  } else if (o.kind == "halfplane") {
    text = to_json(generate_halfplanes(o.n, o.m, o.seed, opts));
  } else {
    throw std::invalid_argument("unknown kind: " + o.kind);
  }
  write_file(o.output, text);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
  std::string seeds = "1..50";
  std::string sizes = "8x8";
  std::string profiles = "uniform";
  bool exact = false;
  std::string out_dir = ".";
};

struct VerifyTask {
  std::uint64_t seed;
  int n, m;
  Profile profile;
};

struct VerifyFailure {
  VerifyTask task;
  std::string detail;
  CoverageInstance instance;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

// Prefix comparison across solvers; empty string when they agree.
std::string compare_solutions(const CoverageInstance& inst, bool exact) {
  std::ostringstream why;
  if (exact) {
    const auto naive = solve_naive_exact(inst);
    const auto ivl = solve_interval_exact(inst);
    const auto fast = solve_fast_exact(inst);
    for (int i = 0; i < inst.n(); ++i) {
      if (!(naive.prefix[i] == ivl.prefix[i]))
        why << "interval prefix[" << i << "] != naive\n";
      if (!(naive.prefix[i] == fast.prefix[i]))
        why << "fast prefix[" << i << "] != naive\n";
    }
    if (inst.m() <= kBruteCap && inst.n() <= 63) {
      const auto oracle = brute_cover<Exact>(inst, true);
      if (!(oracle.weight == naive.delta)) why << "naive delta != brute\n";
    }
    for (const auto* sol : {&naive, &ivl, &fast}) {
      if (!sol->feasible) continue;
      Exact w{};
      for (int j : sol->chosen) w += Exact(inst.disks[j].weight);
      if (!(w == sol->delta)) why << "chosen weight != delta\n";
      for (int i = 0; i < inst.n(); ++i) {
        bool cov = false;
        for (int j : sol->chosen)
          cov |= disk_contains_exact(inst.disk(j), inst.points[i]);
        if (!cov) why << "chosen set misses point " << i << "\n";
      }
    }
  } else {
    const Solution naive = solve_naive(inst);
    const Solution ivl = solve_interval(inst);
    const Solution fast = solve_fast(inst);
    auto close = [](double a, double b) {
      if (std::isinf(a) || std::isinf(b)) return std::isinf(a) && std::isinf(b);
      return std::abs(a - b) <= 1e-6 * std::max({std::abs(a), std::abs(b), 1.0});
    };
    for (int i = 0; i < inst.n(); ++i) {
      if (!close(naive.prefix[i], ivl.prefix[i]))
        why << "interval prefix[" << i << "] != naive\n";
      if (!close(naive.prefix[i], fast.prefix[i]))
        why << "fast prefix[" << i << "] != naive\n";
    }
    for (const Solution* sol : {&naive, &ivl, &fast}) {
      if (!sol->feasible) continue;
      double w = 0;
      for (int j : sol->chosen) w += inst.disks[j].weight;
      if (!close(w, sol->delta)) why << "chosen weight != delta\n";
      for (int i = 0; i < inst.n(); ++i) {
        bool cov = false;
        for (int j : sol->chosen)
          cov |= disk_contains(inst.disk(j), inst.points[i]);
        if (!cov) why << "chosen set misses point " << i << "\n";
      }
    }
  }
  return why.str();
}

// Greedy shrink: drop disks, then points, while the mismatch persists.
CoverageInstance minimize_failure(CoverageInstance inst, bool exact) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = inst.m() - 1; j >= 0 && inst.m() > 1; --j) {
      CoverageInstance trial = inst;
      trial.disks.erase(trial.disks.begin() + j);
      if (!compare_solutions(trial, exact).empty()) {
        inst = std::move(trial);
        changed = true;
      }
    }
    for (int i = inst.n() - 1; i >= 0 && inst.n() > 1; --i) {
      CoverageInstance trial = inst;
      trial.points.erase(trial.points.begin() + i);
      if (!compare_solutions(trial, exact).empty()) {
        inst = std::move(trial);
        changed = true;
      }
    }
  }
  return inst;
}

int cmd_verify(const VerifyOptions& o) {
  std::vector<VerifyTask> tasks;
  std::uint64_t lo = 1, hi = 1;
  const auto dots = o.seeds.find("..");
  if (dots == std::string::npos) {
    lo = hi = std::stoull(o.seeds);
  } else {
    lo = std::stoull(o.seeds.substr(0, dots));
    hi = std::stoull(o.seeds.substr(dots + 2));
  }
  std::vector<std::pair<int, int>> sizes;
  for (const std::string& s : split(o.sizes, ',')) {
    const auto x = s.find('x');
    if (x == std::string::npos)
      throw std::invalid_argument("sizes must look like 8x8,100x200");
    sizes.emplace_back(std::stoi(s.substr(0, x)), std::stoi(s.substr(x + 1)));
  }
  std::vector<Profile> profiles;
  for (const std::string& p : split(o.profiles, ','))
    profiles.push_back(profile_from_string(p));

  for (std::uint64_t seed = lo; seed <= hi; ++seed)
    for (const auto& [n, m] : sizes)
      for (Profile p : profiles) tasks.push_back({seed, n, m, p});

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::optional<VerifyFailure> failure;
  std::mutex fail_mu;

  auto work = [&] {
    while (!failed.load()) {
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks.size()) return;
      const VerifyTask& task = tasks[t];
      GenOptions opts;
      opts.profile = task.profile;
      const CoverageInstance inst = generate(task.n, task.m, task.seed, opts);
      const std::string why = compare_solutions(inst, o.exact);
      if (!why.empty()) {
        std::lock_guard<std::mutex> lock(fail_mu);
        if (!failed.exchange(true)) failure = {task, why, inst};
        return;
      }
    }
  };

  const int workers =
      std::min<int>(worker_count(), std::max<std::size_t>(tasks.size(), 1));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& th : pool) th.join();

  if (failure) {
    const CoverageInstance repro = minimize_failure(failure->instance, o.exact);
    std::filesystem::create_directories(o.out_dir);
    const std::string base =
        o.out_dir + "/repro_seed" + std::to_string(failure->task.seed) + "_" +
        std::to_string(failure->task.n) + "x" +
        std::to_string(failure->task.m);
    write_file(base + ".json", to_json(repro));
    write_file(base + ".txt",
               "seed=" + std::to_string(failure->task.seed) +
                   " n=" + std::to_string(failure->task.n) +
                   " m=" + std::to_string(failure->task.m) +
                   " profile=" + to_string(failure->task.profile) +
                   (o.exact ? " mode=exact\n" : " mode=float\n") +
                   failure->detail + "\nminimized reproducer: " + base +
                   ".json\n");
    std::cerr << "verify: MISMATCH, reproducer at " << base << ".json\n"
              << failure->detail;
    return kExitMismatch;
  }
  std::cout << "verify: " << tasks.size() << " runs, all solvers agree\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bench

struct BenchOptions {
  std::string sizes = "1024,2048,4096";
  int reps = 1;
  std::string solver = "both";
  std::uint64_t seed = 1;
  std::string profile = "uniform";
  int r = 0;
  std::string out;
};

int cmd_bench(const BenchOptions& o) {
  std::vector<int> sizes;
  for (const std::string& s : split(o.sizes, ',')) sizes.push_back(std::stoi(s));
  const auto records = run_bench(sizes, o.reps, o.solver, o.seed,
                                 profile_from_string(o.profile), o.r);
  const std::string csv = bench_csv(records);
  if (o.out.empty()) {
    std::cout << csv;
  } else {
    write_file(o.out, csv);
  }
  if (sizes.size() >= 2) {
    for (const std::string& s : {std::string("fast"), std::string("naive"),
                                 std::string("interval")}) {
      bool present = false;
      for (const auto& r : records) present |= r.solver == s;
      if (present)
        std::cout << "slope " << s << " " << loglog_slope(records, s) << "\n";
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// render

struct RenderCmdOptions {
  std::string input;
  std::string solution;
  std::string out = "-";
  bool dual = false;
  bool show_cutting = false;
  int r = 0;
};

int cmd_render(const RenderCmdOptions& o) {
  const CoverageInstance inst = coverage_from_json(read_file(o.input));
  Solution sol;
  const Solution* sol_ptr = nullptr;
  if (!o.solution.empty()) {
    const auto j = nlohmann::json::parse(read_file(o.solution));
    sol.feasible = j.value("feasible", false);
    if (j.contains("chosen"))
      sol.chosen = j["chosen"].get<std::vector<int>>();
    sol_ptr = &sol;
  }
  RenderOptions opts;
  opts.dual = o.dual;
  opts.show_cutting = o.show_cutting;
  opts.r = o.r;
  write_file(o.out, render_svg(inst, sol_ptr, opts));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"line-separable weighted unit-disk coverage solver"};
  app.require_subcommand(1);

  GenerateOptions gen;
  CLI::App* cgen = app.add_subcommand("generate", "generate a random instance");
  cgen->add_option("--n", gen.n, "number of points");
  cgen->add_option("--m", gen.m, "number of disks");
  cgen->add_option("--seed", gen.seed, "rng seed");
  cgen->add_option("--profile", gen.profile,
                   "uniform|clustered|adversarial-overlap");
  cgen->add_option("--kind", gen.kind, "coverage|hitting|halfplane");
  cgen->add_option("--radius", gen.radius, "common disk radius");
  cgen->add_flag("--infeasible", gen.infeasible, "plant an uncovered point");
  cgen->add_option("--out", gen.output, "output path (- for stdout)");

  SolveOptions so;
  CLI::App* csolve = app.add_subcommand("solve", "solve an instance file");
  csolve->add_option("--input", so.input, "instance JSON (- for stdin)")
      ->required();
  csolve->add_option("--solver", so.solver, "naive|interval|fast|auto");
  csolve->add_option("--r", so.r, "cutting parameter override");
  csolve->add_option("--rho", so.rho, "cutting refinement ratio");
  csolve->add_option("--seed", so.seed, "cutting construction seed");
  csolve->add_option("--eps", so.eps, "predicate tolerance");
  csolve->add_flag("--verify-exact", so.verify_exact,
                   "exact rational arithmetic and predicates");
  csolve->add_flag("--debug-invariants", so.debug_invariants,
                   "check algorithm invariants every iteration");
  csolve->add_flag("--shadow-oracle", so.shadow_oracle,
                   "lockstep naive cost array comparison");
  csolve->add_option("--output", so.output, "solution path (- for stdout)");

  VerifyOptions vo;
  CLI::App* cverify =
      app.add_subcommand("verify", "fuzz solvers against each other");
  cverify->add_option("--seeds", vo.seeds, "seed range A..B");
  cverify->add_option("--sizes", vo.sizes, "comma list of NxM");
  cverify->add_option("--profiles", vo.profiles, "comma list of profiles");
  cverify->add_flag("--exact", vo.exact, "exact-rational comparison");
  cverify->add_option("--out-dir", vo.out_dir, "reproducer directory");

  BenchOptions bo;
  CLI::App* cbench = app.add_subcommand("bench", "scaling benchmark");
  cbench->add_option("--sizes", bo.sizes, "comma list of n (n = m)");
  cbench->add_option("--reps", bo.reps, "repetitions per size");
  cbench->add_option("--solver", bo.solver, "fast|naive|interval|both");
  cbench->add_option("--seed", bo.seed, "base seed");
  cbench->add_option("--profile", bo.profile, "instance profile");
  cbench->add_option("--r", bo.r, "cutting parameter override");
  cbench->add_option("--out", bo.out, "CSV output path");

  RenderCmdOptions ro;
  CLI::App* crender = app.add_subcommand("render", "render an instance to SVG");
  crender->add_option("--input", ro.input, "instance JSON")->required();
  crender->add_option("--solution", ro.solution, "solution JSON to highlight");
  crender->add_option("--out", ro.out, "SVG output path");
  crender->add_flag("--dual", ro.dual, "draw the dual arcs and points");
  crender->add_flag("--show-cutting", ro.show_cutting, "draw cutting cells");
  crender->add_option("--r", ro.r, "cutting parameter for --show-cutting");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cgen->parsed()) return cmd_generate(gen);
    if (csolve->parsed()) return cmd_solve(so);
    if (cverify->parsed()) return cmd_verify(vo);
    if (cbench->parsed()) return cmd_bench(bo);
    if (crender->parsed()) return cmd_render(ro);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
