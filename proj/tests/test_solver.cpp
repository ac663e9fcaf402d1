#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "sepcover/bruteforce.hpp"
#include "sepcover/dp_naive.hpp"
#include "sepcover/interval.hpp"
#include "sepcover/solver.hpp"
#include "test_util.hpp"

using namespace sepcover;
using namespace sepcover::testutil;

namespace {

void check_chosen(const CoverageInstance& inst, const Solution& sol) {
  REQUIRE(sol.feasible);
  CHECK(covers_all(inst, sol.chosen));
  CHECK(weight_of(inst, sol.chosen) == doctest::Approx(sol.delta).epsilon(1e-12));
  std::vector<int> s = sol.chosen;
  std::sort(s.begin(), s.end());
  CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
}

}  // namespace

TEST_CASE("dualize preserves the containment matrix") {
  SUBCASE("1x1") {
    CoverageInstance inst;
    inst.radius = 1;
    inst.points = {{0, 0.5}};
    inst.disks = {{{0.3, -0.2}, 2}};
    const DualInstance dual = dualize(inst);
    CHECK(disk_contains(inst.disk(0), inst.points[0]) ==
          disk_contains(dual.dual_disks[0], dual.dual_points[0]));
  }
  SUBCASE("random 20x20, full matrix, both predicates") {
    const CoverageInstance inst = generate(20, 20, 77);
    const DualInstance dual = dualize(inst);
    for (int i = 0; i < inst.n(); ++i) {
      for (int j = 0; j < inst.m(); ++j) {
        CHECK(disk_contains(inst.disk(j), inst.points[i]) ==
              disk_contains(dual.dual_disks[i], dual.dual_points[j]));
        CHECK(disk_contains_exact(inst.disk(j), inst.points[i]) ==
              disk_contains_exact(dual.dual_disks[i], dual.dual_points[j]));
      }
    }
  }
}

TEST_CASE("solve_fast equals brute force on tiny instances (exact mode)") {
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const int n = 1 + static_cast<int>(seed % 12);
    const int m = 1 + static_cast<int>((seed * 7) % 12);
    GenOptions opts;
    opts.profile = static_cast<Profile>(seed % 3);
    opts.infeasible = seed % 17 == 0;
    const CoverageInstance inst = generate(n, m, seed * 3, opts);

    SolverConfig cfg;
    cfg.seed = seed;
    const auto fast = solve_fast_exact(inst, cfg);
    const auto oracle = brute_cover<Exact>(inst, true);
    REQUIRE(fast.feasible == oracle.feasible);
    REQUIRE(fast.delta == oracle.weight);
    if (fast.feasible) {
      Exact w{};
      for (int j : fast.chosen) w += Exact(inst.disks[j].weight);
      CHECK(w == fast.delta);
      CHECK(covers_all(inst, fast.chosen));
    }
  }
}

TEST_CASE("three-way exact prefix agreement at moderate scale") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    GenOptions opts;
    opts.profile = static_cast<Profile>(seed % 3);
    const CoverageInstance inst = generate(200, 200, seed * 19, opts);
    SolverConfig cfg;
    cfg.seed = seed;
    const auto fast = solve_fast_exact(inst, cfg);
    const auto naive = solve_naive_exact(inst);
    const auto ivl = solve_interval_exact(inst);
    REQUIRE(fast.feasible == naive.feasible);
    for (int i = 0; i < inst.n(); ++i) {
      CHECK(fast.prefix[i] == naive.prefix[i]);
      CHECK(ivl.prefix[i] == naive.prefix[i]);
    }
  }
}

TEST_CASE("float-mode prefix agreement within 1e-6 relative") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    GenOptions opts;
    opts.profile = static_cast<Profile>(seed % 3);
    const CoverageInstance inst = generate(500, 500, seed * 23, opts);
    SolverConfig cfg;
    cfg.seed = seed;
    const Solution fast = solve_fast(inst, cfg);
    const Solution naive = solve_naive(inst);
    REQUIRE(fast.feasible == naive.feasible);
    for (int i = 0; i < inst.n(); ++i) {
      if (std::isinf(naive.prefix[i])) {
        CHECK(std::isinf(fast.prefix[i]));
      } else {
        CHECK(fast.prefix[i] ==
              doctest::Approx(naive.prefix[i]).epsilon(1e-6));
      }
    }
    if (fast.feasible) check_chosen(inst, fast);
  }
}

TEST_CASE("deterministic given instance and config seed") {
  const CoverageInstance inst = generate(300, 300, 5);
  SolverConfig cfg;
  cfg.seed = 1234;
  const Solution a = solve_fast(inst, cfg);
  const Solution b = solve_fast(inst, cfg);
  CHECK(a.delta == b.delta);
  CHECK(a.prefix == b.prefix);
  CHECK(a.chosen == b.chosen);
}

TEST_CASE("r override: any admissible r gives the same answer") {
  const CoverageInstance inst = generate(120, 150, 8);
  const Solution ref = solve_naive(inst);
  for (int r : {1, 2, 5, 12, 60, 120}) {
    SolverConfig cfg;
    cfg.r = r;
    const Solution sol = solve_fast(inst, cfg);
    CHECK(sol.delta == doctest::Approx(ref.delta).epsilon(1e-9));
  }
  SolverConfig bad;
  bad.r = 121;  // r may not exceed n
  CHECK_THROWS_AS(solve_fast(inst, bad), std::invalid_argument);
}

TEST_CASE("debug invariants and shadow oracle run clean") {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const CoverageInstance inst = generate(150, 150, seed * 29);
    SolverConfig cfg;
    cfg.seed = seed;
    cfg.debug_invariants = true;
    cfg.shadow_oracle = true;
    const Solution sol = solve_fast(inst, cfg);  // throws on any violation
    CHECK(sol.feasible);
  }
}

TEST_CASE("planted uncovered point reports infeasible") {
  GenOptions opts;
  opts.infeasible = true;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const CoverageInstance inst = generate(30, 30, seed, opts);
    const Solution fast = solve_fast(inst);
    const Solution naive = solve_naive(inst);
    CHECK(!fast.feasible);
    CHECK(!naive.feasible);
    CHECK(std::isinf(fast.delta));
    CHECK(fast.chosen.empty());
  }
}

TEST_CASE("a point at least one radius above the line is unreachable") {
  CoverageInstance inst;
  inst.radius = 1;
  inst.points = {{0, 1.5}};
  inst.disks = {{{0, -0.1}, 3}};
  const Solution sol = solve_fast(inst);
  CHECK(!sol.feasible);
}

TEST_CASE("hitting set adapter") {
  SUBCASE("single interior point") {
    HittingInstance hit;
    hit.radius = 1;
    hit.points = {{{0, 0.5}, 7.0}};
    hit.disks = {{0, -0.1}};
    const Solution sol = solve_hitting(hit);
    CHECK(sol.feasible);
    CHECK(sol.delta == 7.0);
    CHECK(sol.chosen == std::vector<int>{0});
  }
  SUBCASE("unhittable disk") {
    HittingInstance hit;
    hit.radius = 1;
    hit.points = {{{0, 0.5}, 7.0}};
    hit.disks = {{40, -0.1}};
    CHECK(!solve_hitting(hit).feasible);
  }
  SUBCASE("random instances vs brute force") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      const HittingInstance hit =
          generate_hitting(1 + seed % 10, 1 + (seed * 3) % 10, seed);
      const auto oracle = brute_hit<Exact>(hit, true);
      SolverConfig cfg;
      cfg.seed = seed;
      const auto sol = solve_hitting_exact(hit, cfg);
      REQUIRE(sol.feasible == oracle.feasible);
      CHECK(sol.delta == oracle.weight);
      if (sol.feasible) {
        // Every disk must contain a chosen point.
        for (const Point& c : hit.disks) {
          bool hitp = false;
          for (int i : sol.chosen)
            hitp |= disk_contains_exact(Disk{c, hit.radius},
                                        hit.points[i].center);
          CHECK(hitp);
        }
      }
    }
  }
}

TEST_CASE("lower halfplane adapter") {
  SUBCASE("one halfplane covers both points") {
    HalfplaneInstance inst;
    inst.points = {{-1, 0}, {1, 0}};
    inst.halfplanes = {{{0, 1}, 3.0}};  // y <= 1
    const Solution sol = solve_halfplanes_lower(inst);
    CHECK(sol.feasible);
    CHECK(sol.delta == 3.0);
  }
  SUBCASE("two forced halfplanes") {
    HalfplaneInstance inst;
    inst.points = {{-5, 4.9}, {5, 4.9}};
    inst.halfplanes = {{{-1, 0}, 1.0}, {{1, 0}, 1.0}};  // y<=-x, y<=x
    const Solution sol = solve_halfplanes_lower(inst);
    CHECK(sol.feasible);
    CHECK(sol.delta == 2.0);
  }
  SUBCASE("uncoverable point") {
    HalfplaneInstance inst;
    inst.points = {{0, 10}};
    inst.halfplanes = {{{0, 1}, 3.0}};
    CHECK(!solve_halfplanes_lower(inst).feasible);
  }
  SUBCASE("random instances vs brute force and the naive DP") {
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
      const HalfplaneInstance inst =
          generate_halfplanes(1 + seed % 12, 1 + (seed * 5) % 12, seed);
      const auto oracle = brute_halfplanes<Exact>(inst, true);
      SolverConfig cfg;
      cfg.seed = seed;
      const auto sol = solve_halfplanes_lower_exact(inst, cfg);
      const auto naive = solve_halfplanes_naive_exact(inst);
      REQUIRE(sol.feasible == oracle.feasible);
      CHECK(sol.delta == oracle.weight);
      REQUIRE(naive.feasible == oracle.feasible);
      CHECK(naive.delta == oracle.weight);
      for (std::size_t i = 0; i < sol.prefix.size(); ++i)
        CHECK(sol.prefix[i] == naive.prefix[i]);
      if (sol.feasible) {
        Exact w{};
        for (int j : sol.chosen) w += Exact(inst.halfplanes[j].weight);
        CHECK(w == sol.delta);
        for (const Point& p : inst.points) {
          bool cov = false;
          for (int j : sol.chosen)
            cov |= halfplane_contains_exact(inst.halfplanes[j].h, p);
          CHECK(cov);
        }
      }
    }
  }
}

TEST_CASE("abc example through the fast path") {
  const CoverageInstance inst = abc_instance();
  const Solution sol = solve_fast(inst);
  CHECK(sol.feasible);
  CHECK(sol.delta == 4.0);
  check_chosen(inst, sol);
}
