#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "sepcover/bruteforce.hpp"
#include "sepcover/dp_naive.hpp"
#include "sepcover/interval.hpp"
#include "test_util.hpp"

using namespace sepcover;
using namespace sepcover::testutil;

namespace {

// Direct recomputation of maximal covered runs from the containment matrix.
std::vector<Segment> segments_by_matrix(const CoverageInstance& inst) {
  const std::vector<int> order = sorted_order(inst.points);
  std::vector<Segment> out;
  for (int j = 0; j < inst.m(); ++j) {
    int run = -1;
    for (int i = 0; i < inst.n(); ++i) {
      const bool in = disk_contains(inst.disk(j), inst.points[order[i]]);
      if (in && run < 0) run = i;
      if (!in && run >= 0) {
        out.push_back({j, run, i - 1});
        run = -1;
      }
    }
    if (run >= 0) out.push_back({j, run, inst.n() - 1});
  }
  return out;
}

bool same_segments(const std::vector<Segment>& a,
                   const std::vector<Segment>& b) {
  auto key = [](const Segment& s) {
    return std::tuple<int, int, int>{s.owner, s.left, s.right};
  };
  std::multiset<std::tuple<int, int, int>> ka, kb;
  for (const Segment& s : a) ka.insert(key(s));
  for (const Segment& s : b) kb.insert(key(s));
  return ka == kb;
}

}  // namespace

TEST_CASE("a disk with a gap yields two maximal runs") {
  CoverageInstance inst;
  inst.radius = 1;
  inst.points = {{1, 0.9}, {1.5, 0.2}, {2.5, 0.2}, {3, 0.9}, {3.2, 0.2}};
  inst.disks = {{{2.3, -0.1}, 1.0}};
  auto contains = [&](int j, int p) {
    return disk_contains(inst.disk(j), inst.points[p]);
  };
  const auto segs =
      build_segments(sorted_order(inst.points), inst.m(), contains);
  REQUIRE(segs.size() == 2);
  CHECK(segs[0].left == 1);
  CHECK(segs[0].right == 2);
  CHECK(segs[1].left == 4);
  CHECK(segs[1].right == 4);
}

TEST_CASE("a disk covering nothing yields no segments") {
  CoverageInstance inst;
  inst.radius = 1;
  inst.points = {{0, 0.5}};
  inst.disks = {{{30, -0.5}, 1.0}};
  auto contains = [&](int j, int p) {
    return disk_contains(inst.disk(j), inst.points[p]);
  };
  CHECK(build_segments(sorted_order(inst.points), 1, contains).empty());
}

TEST_CASE("segments match the containment-matrix recomputation") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const CoverageInstance inst = generate(8, 8, seed);
    auto contains = [&](int j, int p) {
      return disk_contains(inst.disk(j), inst.points[p]);
    };
    const auto segs =
        build_segments(sorted_order(inst.points), inst.m(), contains);
    CHECK(same_segments(segs, segments_by_matrix(inst)));
    // Runs of one disk are pairwise disjoint.
    for (std::size_t a = 0; a < segs.size(); ++a)
      for (std::size_t b = a + 1; b < segs.size(); ++b)
        if (segs[a].owner == segs[b].owner)
          CHECK((segs[a].right < segs[b].left || segs[b].right < segs[a].left));
  }
}

TEST_CASE("synthetic segment instances") {
  SUBCASE("one full-range segment") {
    const std::vector<Segment> segs{{0, 0, 4}};
    const auto res = solve_intervals<double>(segs, 5, {4.0});
    CHECK(res.feasible);
    for (double v : res.prefix) CHECK(v == 4.0);
    CHECK(res.chosen == std::vector<int>{0});
  }
  SUBCASE("two forced singletons") {
    const std::vector<Segment> segs{{0, 0, 0}, {1, 1, 1}};
    const auto res = solve_intervals<double>(segs, 2, {1.0, 1.0});
    CHECK(res.feasible);
    CHECK(res.delta == 2.0);
  }
  SUBCASE("gap means infeasible") {
    const std::vector<Segment> segs{{0, 0, 0}};
    const auto res = solve_intervals<double>(segs, 2, {1.0});
    CHECK(!res.feasible);
    CHECK(res.prefix[0] == 1.0);
    CHECK(std::isinf(res.prefix[1]));
  }
}

TEST_CASE("interval oracle equals naive DP and brute force") {
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    const int n = 1 + static_cast<int>(seed % 10);
    const int m = 1 + static_cast<int>((seed * 3) % 10);
    GenOptions opts;
    opts.profile = static_cast<Profile>(seed % 3);
    opts.infeasible = seed % 13 == 0;
    const CoverageInstance inst = generate(n, m, seed ^ 0xabcd, opts);

    const auto naive = solve_naive_exact(inst);
    const auto ivl = solve_interval_exact(inst);
    REQUIRE(ivl.feasible == naive.feasible);
    REQUIRE(ivl.prefix.size() == naive.prefix.size());
    for (std::size_t i = 0; i < ivl.prefix.size(); ++i)
      CHECK(ivl.prefix[i] == naive.prefix[i]);

    if (inst.m() <= kBruteCap) {
      const auto oracle = brute_cover<Exact>(inst, true);
      CHECK(ivl.delta == oracle.weight);
    }
    if (ivl.feasible) {
      Exact w{};
      for (int j : ivl.chosen) w += Exact(inst.disks[j].weight);
      CHECK(w == ivl.delta);
      CHECK(covers_all(inst, ivl.chosen));
    }
  }
}

TEST_CASE("interval oracle cross-checks at moderate scale (float)") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const CoverageInstance inst = generate(300, 300, seed * 101);
    const Solution naive = solve_naive(inst);
    const Solution ivl = solve_interval(inst);
    REQUIRE(naive.feasible == ivl.feasible);
    for (std::size_t i = 0; i < naive.prefix.size(); ++i)
      CHECK(ivl.prefix[i] ==
            doctest::Approx(naive.prefix[i]).epsilon(1e-9));
  }
}
