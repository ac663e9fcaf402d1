#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sepcover/exact.hpp"
#include "sepcover/geom.hpp"
#include "sepcover/instance.hpp"

namespace sepcover {

template <class R>
struct OracleResult {
  bool feasible = false;
  R weight{};                 // infinity sentinel when infeasible
  std::vector<int> chosen;    // one optimal subset (lexicographically first)
  std::uint64_t optima = 0;   // number of subsets attaining the optimum
};

inline constexpr int kBruteCap = 22;

/// Exhaustive minimum-weight set cover over all 2^sets subsets. `covers(j,i)`
/// says whether set j contains element i. Ground truth for every solver;
/// no pruning on purpose.
template <class R, class CoversFn>
OracleResult<R> brute_core(int sets, int elements,
                           const std::vector<double>& weights,
                           CoversFn covers) {
  if (sets > kBruteCap)
    throw std::invalid_argument("bruteforce: instance above the 2^22 cap");
  if (elements > 63)
    throw std::invalid_argument("bruteforce: too many elements for bitmask");

  const std::uint64_t full =
      elements == 0 ? 0 : (std::uint64_t{1} << elements) - 1;
  std::vector<std::uint64_t> mask(sets, 0);
  for (int j = 0; j < sets; ++j)
    for (int i = 0; i < elements; ++i)
      if (covers(j, i)) mask[j] |= std::uint64_t{1} << i;

  OracleResult<R> res;
  res.weight = num<R>::inf();
  for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << sets); ++sub) {
    std::uint64_t cov = 0;
    R w{};
    for (int j = 0; j < sets; ++j) {
      if (sub >> j & 1) {
        cov |= mask[j];
        w += num<R>::from_double(weights[j]);
      }
    }
    if (cov != full) continue;
    if (w < res.weight) {
      res.weight = w;
      res.optima = 1;
      res.chosen.clear();
      for (int j = 0; j < sets; ++j)
        if (sub >> j & 1) res.chosen.push_back(j);
    } else if (w == res.weight) {
      ++res.optima;
    }
  }
  res.feasible = !num<R>::is_inf(res.weight);
  return res;
}

template <class R>
OracleResult<R> brute_cover(const CoverageInstance& inst, bool exact_pred,
                            double eps = kDefaultEps) {
  std::vector<double> w(inst.m());
  for (int j = 0; j < inst.m(); ++j) w[j] = inst.disks[j].weight;
  auto covers = [&](int j, int i) {
    return exact_pred ? disk_contains_exact(inst.disk(j), inst.points[i])
                      : disk_contains(inst.disk(j), inst.points[i], eps);
  };
  return brute_core<R>(inst.m(), inst.n(), w, covers);
}

/// Minimum-weight point subset hitting every disk.
template <class R>
OracleResult<R> brute_hit(const HittingInstance& inst, bool exact_pred,
                          double eps = kDefaultEps) {
  std::vector<double> w(inst.n());
  for (int i = 0; i < inst.n(); ++i) w[i] = inst.points[i].weight;
  auto hits = [&](int i, int j) {
    const Disk d{inst.disks[j], inst.radius};
    return exact_pred ? disk_contains_exact(d, inst.points[i].center)
                      : disk_contains(d, inst.points[i].center, eps);
  };
  return brute_core<R>(inst.n(), inst.m(), w, hits);
}

template <class R>
OracleResult<R> brute_halfplanes(const HalfplaneInstance& inst,
                                 bool exact_pred, double eps = kDefaultEps) {
  std::vector<double> w(inst.m());
  for (int j = 0; j < inst.m(); ++j) w[j] = inst.halfplanes[j].weight;
  auto covers = [&](int j, int i) {
    return exact_pred
               ? halfplane_contains_exact(inst.halfplanes[j].h, inst.points[i])
               : halfplane_contains(inst.halfplanes[j].h, inst.points[i], eps);
  };
  return brute_core<R>(inst.m(), inst.n(), w, covers);
}

}  // namespace sepcover
