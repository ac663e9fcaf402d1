#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sepcover/cost_tree.hpp"
#include "sepcover/instance.hpp"
#include "sepcover/solver.hpp"

using namespace sepcover;

namespace {

struct Fixture {
  CoverageInstance inst;
  detail::FastInputs in;
  HierCutting cut;
  Located loc;
  Counters counters;

  Fixture(int n, int m, std::uint64_t seed, int r,
          Profile profile = Profile::uniform)
      : inst(make(n, m, seed, profile)),
        in(detail::dual_inputs_coverage(inst)),
        cut(HierCutting::build(in.curves, r, 4, seed,
                               HierCutting::Domain::lower_halfplane)),
        loc(locate_points(cut, in.dual_points)) {}

  static CoverageInstance make(int n, int m, std::uint64_t seed,
                               Profile profile) {
    GenOptions opts;
    opts.profile = profile;
    return generate(n, m, seed, opts);
  }

  Disk disk_of(int i) const {  // i = iteration position
    return Disk{inst.points[in.order[i]], inst.radius};
  }
  auto inside_point(int i) const {
    return [this, i](int q) {
      return disk_contains(disk_of(i), inst.disks[q].center);
    };
  }
  auto inside_at(int i) const {
    return [this, i](const Point& p) { return disk_contains(disk_of(i), p); };
  }
};

}  // namespace

TEST_CASE("init establishes both invariants") {
  Fixture f(40, 60, 3, 6);
  CostTree<double> state(f.cut, f.loc, f.in.weights, &f.counters);

  // Root minimum is the global minimum weight.
  double wmin = f.in.weights[0];
  for (double w : f.in.weights) wmin = std::min(wmin, w);
  CHECK(state.root_min() == wmin);

  std::vector<double> shadow(f.in.weights);
  state.check_invariants(shadow, 0.0);  // exact: all lambdas are zero

  // Empty leaves carry the infinity sentinel.
  bool saw_empty = false;
  for (int leaf : f.cut.leaves())
    saw_empty |= f.loc.points_in[leaf].empty();
  (void)saw_empty;  // structure-dependent; invariants already verified
}

TEST_CASE("leaf minCost is the minimum of its weights") {
  // r=1: the root is the only leaf, holding every dual point.
  CoverageInstance inst;
  inst.radius = 1;
  inst.points = {{0, 0.5}};
  inst.disks = {{{-0.2, -0.1}, 5}, {{0.0, -0.1}, 2}, {{0.2, -0.1}, 9}};
  const auto in = detail::dual_inputs_coverage(inst);
  const HierCutting cut = HierCutting::build(
      in.curves, 1, 4, 1, HierCutting::Domain::lower_halfplane);
  const Located loc = locate_points(cut, in.dual_points);
  Counters counters;
  CostTree<double> state(cut, loc, in.weights, &counters);
  CHECK(state.root_min() == 2.0);
}

TEST_CASE("find_min_cost right after init") {
  Fixture f(30, 50, 7, 5);
  CostTree<double> state(f.cut, f.loc, f.in.weights, &f.counters);

  for (int i = 0; i < 8; ++i) {
    const int cv = f.in.curve_of[i];
    if (cv < 0) continue;
    const auto [alpha, arg] =
        state.find_min_cost(cv, f.inside_point(i), f.inside_at(i));
    // Oracle: direct scan over all dual points.
    double expect = std::numeric_limits<double>::infinity();
    int expect_arg = -1;
    for (int q = 0; q < f.inst.m(); ++q) {
      if (f.inside_point(i)(q) && f.in.weights[q] < expect) {
        expect = f.in.weights[q];
        expect_arg = q;
      }
    }
    CHECK(alpha == expect);
    CHECK(arg == expect_arg);
  }
}

TEST_CASE("find_min_cost returns infinity for an empty region") {
  CoverageInstance inst;
  inst.radius = 1;
  inst.points = {{0, 0.5}, {30, 0.5}};
  inst.disks = {{{0, -0.1}, 3}};  // near the first point only
  const auto in = detail::dual_inputs_coverage(inst);
  const HierCutting cut = HierCutting::build(
      in.curves, 1, 4, 1, HierCutting::Domain::lower_halfplane);
  const Located loc = locate_points(cut, in.dual_points);
  Counters counters;
  CostTree<double> state(cut, loc, in.weights, &counters);

  const Disk far_disk{inst.points[1], inst.radius};
  auto inside_point = [&](int q) {
    return disk_contains(far_disk, inst.disks[q].center);
  };
  auto inside_at = [&](const Point& p) { return disk_contains(far_disk, p); };
  const auto [alpha, arg] = state.find_min_cost(1, inside_point, inside_at);
  CHECK(std::isinf(alpha));
  CHECK(arg == -1);
}

TEST_CASE("find_min_cost is read-only") {
  Fixture f(50, 80, 11, 7);
  CostTree<double> state(f.cut, f.loc, f.in.weights, &f.counters);
  const auto h0 = state.state_hash();
  for (int i = 0; i < 10; ++i) {
    const int cv = f.in.curve_of[i];
    if (cv < 0) continue;
    state.find_min_cost(cv, f.inside_point(i), f.inside_at(i));
  }
  CHECK(state.state_hash() == h0);
}

TEST_CASE("reset with delta=0 leaves observable costs unchanged") {
  Fixture f(30, 40, 13, 5);
  CostTree<double> state(f.cut, f.loc, f.in.weights, &f.counters);
  const int cv = f.in.curve_of[0];
  REQUIRE(cv >= 0);
  state.reset_cost(cv, 0.0, 1, 0, f.inside_point(0), f.inside_at(0));
  std::vector<double> shadow(f.in.weights);  // w + 0 = w
  state.check_invariants(shadow, 1e-12);
}

TEST_CASE("reset with a region containing every dual point is a no-op") {
  // One point, one disk directly below it: the dual disk covers the center.
  CoverageInstance inst;
  inst.radius = 1;
  inst.points = {{0, 0.2}};
  inst.disks = {{{0, -0.2}, 4}};
  const auto in = detail::dual_inputs_coverage(inst);
  const HierCutting cut = HierCutting::build(
      in.curves, 1, 4, 1, HierCutting::Domain::lower_halfplane);
  const Located loc = locate_points(cut, in.dual_points);
  Counters counters;
  CostTree<double> state(cut, loc, in.weights, &counters);
  const auto h0 = state.state_hash();
  const Disk d{inst.points[0], inst.radius};
  state.reset_cost(
      0, 4.0, 1, 0, [&](int q) { return disk_contains(d, inst.disks[q].center); },
      [&](const Point& p) { return disk_contains(d, p); });
  CHECK(state.state_hash() == h0);
}

TEST_CASE("lockstep shadow run maintains the invariants (30x30)") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Fixture f(30, 30, seed * 7, 5,
              static_cast<Profile>(seed % 3));
    CostTree<double> state(f.cut, f.loc, f.in.weights, &f.counters);
    std::vector<double> shadow(f.in.weights);

    for (int i = 0; i < f.inst.n(); ++i) {
      const int cv = f.in.curve_of[i];
      REQUIRE(cv >= 0);
      const auto [alpha, arg] =
          state.find_min_cost(cv, f.inside_point(i), f.inside_at(i));

      // The found minimum must match a direct scan of the shadow costs.
      double expect = std::numeric_limits<double>::infinity();
      for (int q = 0; q < f.inst.m(); ++q)
        if (f.inside_point(i)(q)) expect = std::min(expect, shadow[q]);
      if (std::isinf(expect)) {
        CHECK(std::isinf(alpha));
        break;
      }
      CHECK(alpha == doctest::Approx(expect).epsilon(1e-9));

      state.reset_cost(cv, alpha, i + 1, arg, f.inside_point(i),
                       f.inside_at(i));
      for (int q = 0; q < f.inst.m(); ++q)
        if (!f.inside_point(i)(q)) shadow[q] = f.in.weights[q] + alpha;

      state.check_invariants(shadow, 1e-9);

      // Freshly assigned cell lambdas sit atop fully drained subtrees.
      for (std::size_t c = 0; c < f.cut.num_cells(); ++c)
        if (state.cell_stamp(static_cast<int>(c)).first == i + 1)
          state.assert_drained(static_cast<int>(c));
    }
  }
}

TEST_CASE("exact scalar lockstep agrees bit-for-bit") {
  Fixture f(20, 25, 5, 4);
  CostTree<Exact> state(f.cut, f.loc, f.in.weights, &f.counters);
  std::vector<Exact> shadow;
  for (double w : f.in.weights) shadow.push_back(Exact(w));

  for (int i = 0; i < f.inst.n(); ++i) {
    const int cv = f.in.curve_of[i];
    REQUIRE(cv >= 0);
    auto inside_point = [&](int q) {
      return disk_contains_exact(f.disk_of(i), f.inst.disks[q].center);
    };
    auto inside_at = [&](const Point& p) {
      return disk_contains_exact(f.disk_of(i), p);
    };
    const auto [alpha, arg] = state.find_min_cost(cv, inside_point, inside_at);
    Exact expect = Exact::infinity();
    for (int q = 0; q < f.inst.m(); ++q)
      if (inside_point(q) && shadow[q] < expect) expect = shadow[q];
    CHECK(alpha == expect);
    if (alpha.is_inf()) break;
    state.reset_cost(cv, alpha, i + 1, arg, inside_point, inside_at);
    for (int q = 0; q < f.inst.m(); ++q)
      if (!inside_point(q)) shadow[q] = Exact(f.in.weights[q]) + alpha;
    state.check_invariants(shadow, 0.0);
  }
}
