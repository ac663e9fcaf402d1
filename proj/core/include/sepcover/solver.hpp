#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sepcover/cost_tree.hpp"
#include "sepcover/cutting.hpp"
#include "sepcover/instance.hpp"
#include "sepcover/solution.hpp"

namespace sepcover {

/// The role swap: unit disks centered at the points of P, weighted dual
/// points at the centers of S. A disk covers a point iff the dual disk of
/// that point covers the disk's dual point, so the containment matrix is
/// unchanged.
struct DualInstance {
  double radius = 1.0;
  std::vector<Disk> dual_disks;    // indexed like inst.points
  std::vector<Point> dual_points;  // indexed like inst.disks
  std::vector<double> weights;
};

DualInstance dualize(const CoverageInstance& inst);

struct SolverConfig {
  int r = 0;             // 0: min(ceil(sqrt(m)), n)
  int rho = 4;
  std::uint64_t seed = 1;
  double eps = kDefaultEps;       // predicate tolerance (double mode)
  bool debug_invariants = false;  // full invariant check per iteration
  bool shadow_oracle = false;     // lockstep naive cost array comparison
};

Solution solve_fast(const CoverageInstance& inst, const SolverConfig& cfg = {});
SolveResult<Exact> solve_fast_exact(const CoverageInstance& inst,
                                    const SolverConfig& cfg = {});

/// Hitting set via the dual reduction: disks centered at the weighted points
/// must cover all original disk centers (reflected across the line to keep
/// the sides canonical). Chosen indices come back as point indices.
CoverageInstance hitting_to_coverage(const HittingInstance& inst);
Solution solve_hitting(const HittingInstance& inst,
                       const SolverConfig& cfg = {});
SolveResult<Exact> solve_hitting_exact(const HittingInstance& inst,
                                       const SolverConfig& cfg = {});

/// Lower-only halfplane coverage through the parameter-space dual: halfplane
/// (a,b) covers p iff the dual point (a,b) lies on or above the line
/// v = p.y - u * p.x, so the same engine runs on a line family over the
/// whole plane.
Solution solve_halfplanes_lower(const HalfplaneInstance& inst,
                                const SolverConfig& cfg = {});
SolveResult<Exact> solve_halfplanes_lower_exact(const HalfplaneInstance& inst,
                                                const SolverConfig& cfg = {});

// Reference solvers for the adapters (cross-check surface).
Solution solve_halfplanes_naive(const HalfplaneInstance& inst,
                                double eps = kDefaultEps);
SolveResult<Exact> solve_halfplanes_naive_exact(const HalfplaneInstance& inst);

namespace detail {

/// Inputs of the generic fast engine after dualization: iteration order,
/// one lower-boundary curve per region (or -1 when the region misses the
/// cutting domain entirely), the dual points with weights.
struct FastInputs {
  std::vector<int> order;        // original point index per iteration
  std::vector<int> curve_of;     // per iteration: curve id or -1
  std::vector<Curve> curves;
  std::vector<Point> dual_points;
  std::vector<double> weights;
  HierCutting::Domain domain = HierCutting::Domain::lower_halfplane;
};

/// Runs Algorithm 2: per iteration one FindMinCost and one ResetCost against
/// the cost tree. `inside_point(i, q)` / `inside_at(i, p)` test membership in
/// the i-th (iteration order) dual region. The per-iteration argmin and its
/// feeding iteration are recorded at find time; backtracking replays them.
template <class R, class InsidePointFn, class InsideAtFn>
SolveResult<R> fast_core(const FastInputs& in, const SolverConfig& cfg,
                         InsidePointFn inside_point, InsideAtFn inside_at) {
  const int n = static_cast<int>(in.order.size());
  const int m = static_cast<int>(in.dual_points.size());
  SolveResult<R> res;
  res.prefix.assign(n, num<R>::inf());
  if (n == 0) {
    res.feasible = true;
    res.delta = R{};
    return res;
  }

  int r = cfg.r;
  if (r != 0 && (r < 1 || r > n))
    throw std::invalid_argument("solver: r out of range [1, n]");
  if (r == 0)
    r = std::min(static_cast<int>(std::ceil(std::sqrt(std::max(1, m)))), n);
  // Regions with no lower arc contribute no curve; the cutting needs
  // r <= number of curves.
  r = std::min(r, std::max(1, static_cast<int>(in.curves.size())));

  HierCutting cutting = HierCutting::build(in.curves, r, cfg.rho, cfg.seed,
                                           in.domain, &res.counters);
  Located located = locate_points(cutting, in.dual_points, &res.counters);
  CostTree<R> state(cutting, located, in.weights, &res.counters);

  std::vector<R> shadow;
  if (cfg.shadow_oracle || cfg.debug_invariants) {
    shadow.resize(m);
    for (int q = 0; q < m; ++q) shadow[q] = num<R>::from_double(in.weights[q]);
  }

  std::vector<int> argmin(n, -1), from(n, 0);
  bool infeasible = false;
  for (int i = 0; i < n; ++i) {
    const int cv = in.curve_of[i];
    std::pair<R, int> found{num<R>::inf(), -1};
    if (cv >= 0) {
      found = state.find_min_cost(
          cv, [&](int q) { return inside_point(i, q); },
          [&](const Point& p) { return inside_at(i, p); });
    }
    res.prefix[i] = found.first;
    if (num<R>::is_inf(found.first)) {
      infeasible = true;  // absorbing: remaining prefix values stay infinite
      break;
    }
    argmin[i] = found.second;
    from[i] = state.provenance_of(found.second).first;
    state.reset_cost(
        cv, found.first, i + 1, found.second,
        [&](int q) { return inside_point(i, q); },
        [&](const Point& p) { return inside_at(i, p); });

    if (!shadow.empty()) {
      for (int q = 0; q < m; ++q)
        if (!inside_point(i, q))
          shadow[q] = num<R>::from_double(in.weights[q]) + found.first;
      if (cfg.debug_invariants) {
        state.check_invariants(shadow, 1e-9);
      } else {
        for (int q = 0; q < m; ++q) {
          const R c = state.cost_of(q);
          if (c == shadow[q]) continue;
          bool close = false;
          if constexpr (std::is_same_v<R, double>) {
            close = std::abs(c - shadow[q]) <=
                    1e-9 * std::max({std::abs(c), std::abs(shadow[q]), 1.0});
          }
          if (!close)
            throw std::logic_error("shadow oracle mismatch at point " +
                                   std::to_string(q));
        }
      }
    }
  }

  res.delta = res.prefix[n - 1];
  res.feasible = !infeasible;
  if (!res.feasible) return res;

  std::vector<char> taken(m, 0);
  int i = n - 1;
  while (true) {
    const int cur = argmin[i];
    if (taken[cur])
      throw std::logic_error("solver: disk repeated during backtracking");
    taken[cur] = 1;
    res.chosen.push_back(cur);
    if (from[i] == 0) break;
    i = from[i] - 1;
  }
  return res;
}

FastInputs dual_inputs_coverage(const CoverageInstance& inst);
FastInputs dual_inputs_halfplanes(const HalfplaneInstance& inst);

}  // namespace detail

}  // namespace sepcover
