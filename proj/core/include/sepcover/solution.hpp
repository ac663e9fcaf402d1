#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "sepcover/counters.hpp"
#include "sepcover/exact.hpp"
#include "sepcover/geom.hpp"

namespace sepcover {

/// Outcome of a solve. `prefix[i]` is the minimum weight covering the first
/// i+1 points in left-to-right order; `delta` = prefix.back(). When
/// infeasible, delta and the tail of prefix hold the infinity sentinel and
/// `chosen` is empty.
template <class R>
struct SolveResult {
  bool feasible = false;
  R delta{};
  std::vector<R> prefix;
  std::vector<int> chosen;  // original input indices, each at most once
  Counters counters;
};

using Solution = SolveResult<double>;

template <class R>
Solution to_solution(const SolveResult<R>& r) {
  Solution s;
  s.feasible = r.feasible;
  s.delta = num<R>::to_double(r.delta);
  s.prefix.reserve(r.prefix.size());
  for (const R& v : r.prefix) s.prefix.push_back(num<R>::to_double(v));
  s.chosen = r.chosen;
  s.counters = r.counters;
  return s;
}

/// Left-to-right point order; x-ties broken by input index, so the order is
/// total even when the general-position assumption fails.
inline std::vector<int> sorted_order(const std::vector<Point>& pts) {
  std::vector<int> order(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (pts[a].x != pts[b].x) return pts[a].x < pts[b].x;
    return a < b;
  });
  return order;
}

/// Solution JSON ({"feasible", "delta", "chosen", "prefix", "stats"});
/// infinity is serialized as the string "inf".
std::string solution_to_json(const Solution& sol,
                             const std::string& solver_name, int n, int m,
                             double wall_ms);

}  // namespace sepcover
