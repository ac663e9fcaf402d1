#include "sepcover/solver.hpp"

#include <nlohmann/json.hpp>

#include "sepcover/dp_naive.hpp"

namespace sepcover {

using nlohmann::json;

DualInstance dualize(const CoverageInstance& inst) {
  DualInstance d;
  d.radius = inst.radius;
  d.dual_disks.reserve(inst.n());
  for (const Point& p : inst.points) d.dual_disks.push_back({p, inst.radius});
  d.dual_points.reserve(inst.m());
  d.weights.reserve(inst.m());
  for (const WeightedDisk& s : inst.disks) {
    d.dual_points.push_back(s.center);
    d.weights.push_back(s.weight);
  }
  return d;
}

namespace detail {

FastInputs dual_inputs_coverage(const CoverageInstance& inst) {
  FastInputs in;
  in.order = sorted_order(inst.points);
  in.domain = HierCutting::Domain::lower_halfplane;
  const int n = inst.n();
  in.curve_of.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    // A dual disk whose center is at least one radius above the line never
    // dips below it: it holds no dual point and the instance is infeasible
    // at this iteration.
    LowerArc arc;
    if (lower_arc_of(Disk{inst.points[in.order[i]], inst.radius}, in.order[i],
                     arc)) {
      in.curve_of[i] = static_cast<int>(in.curves.size());
      in.curves.push_back(Curve::from_arc(arc));
    }
  }
  for (const WeightedDisk& s : inst.disks) {
    in.dual_points.push_back(s.center);
    in.weights.push_back(s.weight);
  }
  return in;
}

FastInputs dual_inputs_halfplanes(const HalfplaneInstance& inst) {
  FastInputs in;
  in.order = sorted_order(inst.points);
  in.domain = HierCutting::Domain::plane;
  const int n = inst.n();
  in.curve_of.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    const Point& p = inst.points[in.order[i]];
    in.curve_of[i] = static_cast<int>(in.curves.size());
    in.curves.push_back(Curve::from_line(in.order[i], -p.x, p.y));
  }
  for (const WeightedHalfplane& h : inst.halfplanes) {
    in.dual_points.push_back({h.h.a, h.h.b});
    in.weights.push_back(h.weight);
  }
  return in;
}

}  // namespace detail

namespace {

template <class R>
SolveResult<R> run_fast_coverage(const CoverageInstance& inst,
                                 const SolverConfig& cfg, bool exact_pred) {
  const detail::FastInputs in = detail::dual_inputs_coverage(inst);
  auto region_disk = [&](int i) {
    return Disk{inst.points[in.order[i]], inst.radius};
  };
  auto inside_point = [&](int i, int q) {
    const Point& c = inst.disks[q].center;
    return exact_pred ? disk_contains_exact(region_disk(i), c)
                      : disk_contains(region_disk(i), c, cfg.eps);
  };
  auto inside_at = [&](int i, const Point& p) {
    return exact_pred ? disk_contains_exact(region_disk(i), p)
                      : disk_contains(region_disk(i), p, cfg.eps);
  };
  return detail::fast_core<R>(in, cfg, inside_point, inside_at);
}

template <class R>
SolveResult<R> run_fast_halfplanes(const HalfplaneInstance& inst,
                                   const SolverConfig& cfg, bool exact_pred) {
  const detail::FastInputs in = detail::dual_inputs_halfplanes(inst);
  auto inside_point = [&](int i, int q) {
    const Point& p = inst.points[in.order[i]];
    return exact_pred ? halfplane_contains_exact(inst.halfplanes[q].h, p)
                      : halfplane_contains(inst.halfplanes[q].h, p, cfg.eps);
  };
  auto inside_at = [&](int i, const Point& d) {
    const Point& p = inst.points[in.order[i]];
    const HalfplaneLower h{d.x, d.y};
    return exact_pred ? halfplane_contains_exact(h, p)
                      : halfplane_contains(h, p, cfg.eps);
  };
  return detail::fast_core<R>(in, cfg, inside_point, inside_at);
}

}  // namespace

Solution solve_fast(const CoverageInstance& inst, const SolverConfig& cfg) {
  return run_fast_coverage<double>(inst, cfg, false);
}

SolveResult<Exact> solve_fast_exact(const CoverageInstance& inst,
                                    const SolverConfig& cfg) {
  return run_fast_coverage<Exact>(inst, cfg, true);
}

CoverageInstance hitting_to_coverage(const HittingInstance& inst) {
  // Reflect across the line so the cover-side invariants (points above,
  // centers below) hold; distances are preserved exactly.
  CoverageInstance cov;
  cov.radius = inst.radius;
  cov.points.reserve(inst.m());
  for (const Point& c : inst.disks) cov.points.push_back({c.x, -c.y});
  cov.disks.reserve(inst.n());
  for (const WeightedDisk& p : inst.points)
    cov.disks.push_back({{p.center.x, -p.center.y}, p.weight});
  return cov;
}

Solution solve_hitting(const HittingInstance& inst, const SolverConfig& cfg) {
  return solve_fast(hitting_to_coverage(inst), cfg);
}

SolveResult<Exact> solve_hitting_exact(const HittingInstance& inst,
                                       const SolverConfig& cfg) {
  return solve_fast_exact(hitting_to_coverage(inst), cfg);
}

Solution solve_halfplanes_lower(const HalfplaneInstance& inst,
                                const SolverConfig& cfg) {
  return run_fast_halfplanes<double>(inst, cfg, false);
}

SolveResult<Exact> solve_halfplanes_lower_exact(const HalfplaneInstance& inst,
                                                const SolverConfig& cfg) {
  return run_fast_halfplanes<Exact>(inst, cfg, true);
}

namespace {

template <class R>
SolveResult<R> halfplanes_naive_impl(const HalfplaneInstance& inst,
                                     bool exact_pred, double eps) {
  std::vector<double> w(inst.m());
  for (int j = 0; j < inst.m(); ++j) w[j] = inst.halfplanes[j].weight;
  auto contains = [&](int j, int p) {
    return exact_pred
               ? halfplane_contains_exact(inst.halfplanes[j].h, inst.points[p])
               : halfplane_contains(inst.halfplanes[j].h, inst.points[p], eps);
  };
  return dp_naive_core<R>(sorted_order(inst.points), inst.m(), w, contains);
}

}  // namespace

Solution solve_halfplanes_naive(const HalfplaneInstance& inst, double eps) {
  return halfplanes_naive_impl<double>(inst, false, eps);
}

SolveResult<Exact> solve_halfplanes_naive_exact(const HalfplaneInstance& inst) {
  return halfplanes_naive_impl<Exact>(inst, true, kDefaultEps);
}

std::string solution_to_json(const Solution& sol,
                             const std::string& solver_name, int n, int m,
                             double wall_ms) {
  json j;
  j["feasible"] = sol.feasible;
  auto num_or_inf = [](double v) -> json {
    if (std::isinf(v)) return "inf";
    return v;
  };
  j["delta"] = num_or_inf(sol.delta);
  j["chosen"] = sol.chosen;
  j["prefix"] = json::array();
  for (double v : sol.prefix) j["prefix"].push_back(num_or_inf(v));
  const Counters& c = sol.counters;
  j["stats"] = {
      {"solver", solver_name},
      {"n", n},
      {"m", m},
      {"wall_ms", wall_ms},
      {"ops_total", c.total()},
      {"build_cross_tests", c.build_cross_tests},
      {"build_resamples", c.build_resamples},
      {"locate_steps", c.locate_steps},
      {"find_point_scans", c.find_point_scans},
      {"find_child_evals", c.find_child_evals},
      {"reset_point_updates", c.reset_point_updates},
      {"drain_pops", c.drain_pops},
      {"list_appends", c.list_appends},
      {"heap_ops", c.heap_ops},
      {"ancestor_steps", c.ancestor_steps},
      {"scan_ops", c.scan_ops},
  };
  return j.dump(2) + "\n";
}

}  // namespace sepcover
