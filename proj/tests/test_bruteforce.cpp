#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sepcover/bruteforce.hpp"
#include "test_util.hpp"

using namespace sepcover;
using namespace sepcover::testutil;

TEST_CASE("brute_cover basics") {
  CoverageInstance inst;
  inst.radius = 1;
  inst.points = {{0, 0.5}};
  inst.disks = {{{0, -0.1}, 3.0}};
  auto res = brute_cover<double>(inst, false);
  CHECK(res.feasible);
  CHECK(res.weight == 3.0);
  CHECK(res.chosen == std::vector<int>{0});

  inst.points[0] = {10, 0.5};  // out of reach
  res = brute_cover<double>(inst, false);
  CHECK(!res.feasible);
  CHECK(std::isinf(res.weight));
}

TEST_CASE("brute_cover on the hand-enumerated three-disk example") {
  const CoverageInstance inst = abc_instance();
  const auto res = brute_cover<double>(inst, false);
  CHECK(res.feasible);
  CHECK(res.weight == 4.0);
  CHECK(res.chosen == std::vector<int>{1, 2});  // {B, C}

  const auto xres = brute_cover<Exact>(inst, true);
  CHECK(xres.weight == Exact(4.0));
}

TEST_CASE("brute_hit basics") {
  HittingInstance hit;
  hit.radius = 1;
  hit.points = {{{0, 0.5}, 7.0}};
  hit.disks = {{0, -0.1}};
  auto res = brute_hit<double>(hit, false);
  CHECK(res.feasible);
  CHECK(res.weight == 7.0);

  hit.disks.push_back({50, -0.1});  // no point can hit this one
  res = brute_hit<double>(hit, false);
  CHECK(!res.feasible);
}

TEST_CASE("brute_hit picks a shared cheap point") {
  HittingInstance hit;
  hit.radius = 1;
  hit.points = {{{0.0, 0.4}, 1.0}, {{-0.8, 0.2}, 5.0}, {{0.8, 0.2}, 5.0}};
  hit.disks = {{-0.3, -0.3}, {0.0, -0.4}, {0.3, -0.3}};
  // The center point is inside all three disks.
  const auto res = brute_hit<double>(hit, false);
  CHECK(res.feasible);
  CHECK(res.weight == 1.0);
  CHECK(res.chosen == std::vector<int>{0});
}

TEST_CASE("duality sanity: cover equals hit of the dual") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const CoverageInstance inst =
        generate(2 + seed % 7, 2 + (seed / 2) % 7, seed);
    const auto cov = brute_cover<Exact>(inst, true);
    const auto hit = brute_hit<Exact>(dual_of_coverage(inst), true);
    CHECK(cov.feasible == hit.feasible);
    CHECK(cov.weight == hit.weight);
  }
}

TEST_CASE("cap enforcement") {
  CoverageInstance inst;
  inst.radius = 1;
  inst.points = {{0, 0.5}};
  inst.disks.assign(23, {{0, -0.1}, 1.0});
  CHECK_THROWS_AS(brute_cover<double>(inst, false), std::invalid_argument);
}
