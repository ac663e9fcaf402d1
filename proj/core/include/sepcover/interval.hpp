#pragma once

#include <set>
#include <stdexcept>
#include <vector>

#include "sepcover/exact.hpp"
#include "sepcover/instance.hpp"
#include "sepcover/solution.hpp"

namespace sepcover {

/// A maximal run of consecutive (left-to-right) points covered by one disk.
/// Indices are positions in the sorted order, inclusive. The previous point
/// (left-1) and the next one (right+1) are not covered by the owner.
struct Segment {
  int owner = -1;
  int left = 0;
  int right = 0;
};

/// One segment per maximal covered run of each disk. Runs of one disk are
/// pairwise disjoint; total size is at most n*m. Referee-scale only.
template <class ContainsFn>
std::vector<Segment> build_segments(const std::vector<int>& order, int m,
                                    ContainsFn contains,
                                    Counters* counters = nullptr) {
  const int n = static_cast<int>(order.size());
  std::vector<Segment> segs;
  for (int j = 0; j < m; ++j) {
    int run = -1;
    for (int i = 0; i < n; ++i) {
      if (counters) ++counters->scan_ops;
      if (contains(j, order[i])) {
        if (run < 0) run = i;
      } else if (run >= 0) {
        segs.push_back({j, run, i - 1});
        run = -1;
      }
    }
    if (run >= 0) segs.push_back({j, run, n - 1});
  }
  return segs;
}

/// Sweep DP over the 1D projection. At index i: segments starting at i are
/// activated with cost = weight + delta*_{i-1} (their start index is exactly
/// one past the rightmost point strictly left of them), then delta*_i is the
/// cheapest active segment, then segments ending at i retire. An independent
/// solver: cross-checks the per-prefix deltas of the direct DP.
template <class R>
SolveResult<R> solve_intervals(const std::vector<Segment>& segs, int n,
                               const std::vector<double>& weights) {
  SolveResult<R> res;
  res.prefix.assign(n, num<R>::inf());

  std::vector<std::vector<int>> starts(n), ends(n);
  for (std::size_t s = 0; s < segs.size(); ++s) {
    starts[segs[s].left].push_back(static_cast<int>(s));
    ends[segs[s].right].push_back(static_cast<int>(s));
  }

  std::set<std::pair<R, int>> active;  // (cost, segment id)
  std::vector<R> cost(segs.size());
  std::vector<int> argmin(n, -1);

  bool infeasible = false;
  for (int i = 0; i < n; ++i) {
    for (int s : starts[i]) {
      ++res.counters.scan_ops;
      const R base = segs[s].left == 0 ? R{} : res.prefix[segs[s].left - 1];
      cost[s] = num<R>::from_double(weights[segs[s].owner]) + base;
      active.emplace(cost[s], s);
      ++res.counters.heap_ops;
    }
    if (active.empty()) {
      infeasible = true;
      break;
    }
    res.prefix[i] = active.begin()->first;
    argmin[i] = active.begin()->second;
    for (int s : ends[i]) {
      active.erase({cost[s], s});
      ++res.counters.heap_ops;
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

  // Jump left through the argmin segments; each hop covers (left-1, i].
  std::vector<char> taken_owner(weights.size(), 0);
  int i = n - 1;
  while (i >= 0) {
    const Segment& s = segs[argmin[i]];
    if (taken_owner[s.owner])
      throw std::logic_error("interval: disk repeated during backtracking");
    taken_owner[s.owner] = 1;
    res.chosen.push_back(s.owner);
    i = s.left - 1;
  }
  return res;
}

template <class R>
SolveResult<R> solve_interval_generic(const CoverageInstance& inst,
                                      bool exact_pred,
                                      double eps = kDefaultEps) {
  std::vector<double> w(inst.m());
  for (int j = 0; j < inst.m(); ++j) w[j] = inst.disks[j].weight;
  auto contains = [&](int j, int p) {
    return exact_pred ? disk_contains_exact(inst.disk(j), inst.points[p])
                      : disk_contains(inst.disk(j), inst.points[p], eps);
  };
  Counters build_ops;
  const std::vector<Segment> segs =
      build_segments(sorted_order(inst.points), inst.m(), contains, &build_ops);
  SolveResult<R> res = solve_intervals<R>(segs, inst.n(), w);
  res.counters += build_ops;
  return res;
}

inline Solution solve_interval(const CoverageInstance& inst,
                               double eps = kDefaultEps) {
  return solve_interval_generic<double>(inst, false, eps);
}

inline SolveResult<Exact> solve_interval_exact(const CoverageInstance& inst) {
  return solve_interval_generic<Exact>(inst, true);
}

}  // namespace sepcover
