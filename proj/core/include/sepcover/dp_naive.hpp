#pragma once

#include <stdexcept>
#include <vector>

#include "sepcover/exact.hpp"
#include "sepcover/instance.hpp"
#include "sepcover/solution.hpp"

namespace sepcover {

/// The O(nm) reference dynamic program. Processes points left to right; per
/// point, the cheapest cost among covering disks becomes delta_i, then every
/// non-covering disk's cost is reset to weight + delta_i. The per-disk
/// provenance (which iteration last reset it, and which disk achieved that
/// delta) makes backtracking O(1) per step.
///
/// `contains(j, p)` tests disk j against original point index p; `order` is
/// the left-to-right point order. Deliberately simple: this is the primary
/// correctness referee for the fast path.
template <class R, class ContainsFn>
SolveResult<R> dp_naive_core(const std::vector<int>& order, int m,
                             const std::vector<double>& weights,
                             ContainsFn contains) {
  const int n = static_cast<int>(order.size());
  SolveResult<R> res;
  res.prefix.assign(n, num<R>::inf());

  std::vector<R> cost(m);
  std::vector<int> reset_at(m, 0);  // iteration that last reset s; 0: cost = w(s)
  for (int j = 0; j < m; ++j) cost[j] = num<R>::from_double(weights[j]);

  // Per-iteration records for backtracking: the argmin disk and the
  // iteration whose delta fed its cost. These never change once written,
  // unlike the live per-disk provenance which later resets overwrite.
  std::vector<int> argmin(n, -1);
  std::vector<int> from(n, 0);
  bool infeasible = false;
  for (int i = 0; i < n && !infeasible; ++i) {
    const int p = order[i];
    R best = num<R>::inf();
    int bestj = -1;
    for (int j = 0; j < m; ++j) {
      ++res.counters.scan_ops;
      if (contains(j, p) && cost[j] < best) {
        best = cost[j];
        bestj = j;  // ascending scan: ties keep the smallest index
      }
    }
    res.prefix[i] = best;
    if (num<R>::is_inf(best)) {
      infeasible = true;  // infinity is absorbing; later deltas stay infinite
      break;
    }
    argmin[i] = bestj;
    from[i] = reset_at[bestj];
    for (int j = 0; j < m; ++j) {
      ++res.counters.scan_ops;
      if (!contains(j, p)) {
        cost[j] = num<R>::from_double(weights[j]) + best;
        reset_at[j] = i + 1;
      }
    }
  }

  if (n == 0) {
    res.feasible = true;
    res.delta = R{};
    return res;
  }
  res.delta = res.prefix[n - 1];
  res.feasible = !infeasible;
  if (!res.feasible) return res;

  // Walk the chain delta_n -> disk -> feeding iteration -> disk ... until a
  // disk whose cost was still its own weight.
  std::vector<char> taken(m, 0);
  int i = n - 1;
  while (true) {
    const int cur = argmin[i];
    if (taken[cur])
      throw std::logic_error("dp_naive: disk repeated during backtracking");
    taken[cur] = 1;
    res.chosen.push_back(cur);
    if (from[i] == 0) break;
    i = from[i] - 1;
  }
  return res;
}

template <class R>
SolveResult<R> solve_naive_generic(const CoverageInstance& inst,
                                   bool exact_pred,
                                   double eps = kDefaultEps) {
  std::vector<double> w(inst.m());
  for (int j = 0; j < inst.m(); ++j) w[j] = inst.disks[j].weight;
  auto contains = [&](int j, int p) {
    return exact_pred ? disk_contains_exact(inst.disk(j), inst.points[p])
                      : disk_contains(inst.disk(j), inst.points[p], eps);
  };
  return dp_naive_core<R>(sorted_order(inst.points), inst.m(), w, contains);
}

inline Solution solve_naive(const CoverageInstance& inst,
                            double eps = kDefaultEps) {
  return solve_naive_generic<double>(inst, false, eps);
}

inline SolveResult<Exact> solve_naive_exact(const CoverageInstance& inst) {
  return solve_naive_generic<Exact>(inst, true);
}

}  // namespace sepcover
