#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "sepcover/bruteforce.hpp"
#include "sepcover/dp_naive.hpp"
#include "test_util.hpp"

using namespace sepcover;
using namespace sepcover::testutil;

TEST_CASE("single point, single disk") {
  CoverageInstance inst;
  inst.radius = 1;
  inst.points = {{0, 0.5}};
  inst.disks = {{{0, -0.1}, 3.0}};
  const Solution sol = solve_naive(inst);
  CHECK(sol.feasible);
  CHECK(sol.delta == 3.0);
  CHECK(sol.prefix == std::vector<double>{3.0});
  CHECK(sol.chosen == std::vector<int>{0});
}

TEST_CASE("uncovered point yields the infinity sentinel") {
  CoverageInstance inst;
  inst.radius = 1;
  inst.points = {{10, 0.5}};
  inst.disks = {{{0, -0.1}, 3.0}};
  const Solution sol = solve_naive(inst);
  CHECK(!sol.feasible);
  CHECK(std::isinf(sol.delta));
  CHECK(sol.chosen.empty());
}

TEST_CASE("three-disk example matches the subset enumeration") {
  const CoverageInstance inst = abc_instance();
  const Solution sol = solve_naive(inst);
  CHECK(sol.feasible);
  CHECK(sol.delta == 4.0);
  std::vector<int> chosen = sol.chosen;
  std::sort(chosen.begin(), chosen.end());
  CHECK(chosen == std::vector<int>{1, 2});
}

TEST_CASE("forced chain selects every sole disk") {
  CoverageInstance inst;
  inst.radius = 1;
  inst.points = {{0, 0.5}, {4, 0.5}, {8, 0.5}};
  inst.disks = {{{0, -0.1}, 1.0}, {{4, -0.1}, 2.0}, {{8, -0.1}, 3.0}};
  const Solution sol = solve_naive(inst);
  CHECK(sol.feasible);
  CHECK(sol.delta == 6.0);
  std::vector<int> chosen = sol.chosen;
  std::sort(chosen.begin(), chosen.end());
  CHECK(chosen == std::vector<int>{0, 1, 2});
}

TEST_CASE("agrees exactly with brute force on 1000 small instances") {
  int feasible_seen = 0, infeasible_seen = 0;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    const int n = 1 + static_cast<int>(seed % 12);
    const int m = 1 + static_cast<int>((seed * 7) % 12);
    GenOptions opts;
    opts.profile = static_cast<Profile>(seed % 3);
    opts.infeasible = seed % 11 == 0;
    const CoverageInstance inst = generate(n, m, seed, opts);

    const auto oracle = brute_cover<Exact>(inst, true);
    const auto sol = solve_naive_exact(inst);
    REQUIRE(sol.feasible == oracle.feasible);
    REQUIRE(sol.delta == oracle.weight);
    if (sol.feasible) {
      ++feasible_seen;
      Exact w{};
      for (int j : sol.chosen) w += Exact(inst.disks[j].weight);
      CHECK(w == sol.delta);
      CHECK(covers_all(inst, sol.chosen));
      std::vector<int> sorted = sol.chosen;
      std::sort(sorted.begin(), sorted.end());
      CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    } else {
      ++infeasible_seen;
    }
  }
  CHECK(feasible_seen > 800);
  CHECK(infeasible_seen > 50);
}

TEST_CASE("prefix values are prefix optima and monotone") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const int n = 2 + static_cast<int>(seed % 9);
    const int m = 1 + static_cast<int>((seed * 5) % 10);
    const CoverageInstance inst = generate(n, m, seed * 31);
    const auto sol = solve_naive_exact(inst);
    const std::vector<int> order = sorted_order(inst.points);

    for (int i = 0; i < n; ++i) {
      CoverageInstance head;
      head.radius = inst.radius;
      head.disks = inst.disks;
      for (int t = 0; t <= i; ++t) head.points.push_back(inst.points[order[t]]);
      const auto oracle = brute_cover<Exact>(head, true);
      CHECK(sol.prefix[i] == oracle.weight);
      if (i > 0) CHECK(!(sol.prefix[i] < sol.prefix[i - 1]));
    }
  }
}
