#pragma once

#include <vector>

#include "sepcover/instance.hpp"

namespace sepcover::testutil {

/// Two points; disk A (w=5) covers both, B (w=2) covers only the left one,
/// C (w=2) only the right one. Optimum is {B, C} at weight 4 (verified by
/// enumerating all 8 subsets by hand).
inline CoverageInstance abc_instance() {
  CoverageInstance inst;
  inst.radius = 1.0;
  inst.points = {{0.0, 0.5}, {1.0, 0.5}};
  inst.disks = {
      {{0.5, -0.3}, 5.0},  // A: dist to both points ~0.943
      {{0.0, -0.3}, 2.0},  // B: covers p0 (0.8), misses p1 (~1.28)
      {{1.0, -0.3}, 2.0},  // C: mirror of B
  };
  return inst;
}

/// The reflected hitting view of a coverage instance: disk centers become
/// weighted points, points become disk centers. Optimal values coincide.
inline HittingInstance dual_of_coverage(const CoverageInstance& inst) {
  HittingInstance hit;
  hit.radius = inst.radius;
  for (const WeightedDisk& d : inst.disks)
    hit.points.push_back({{d.center.x, -d.center.y}, d.weight});
  for (const Point& p : inst.points) hit.disks.push_back({p.x, -p.y});
  return hit;
}

/// Coverage of the chosen subset, straight from the containment predicate.
inline bool covers_all(const CoverageInstance& inst,
                       const std::vector<int>& chosen) {
  for (const Point& p : inst.points) {
    bool ok = false;
    for (int j : chosen)
      if (disk_contains(inst.disk(j), p)) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

inline double weight_of(const CoverageInstance& inst,
                        const std::vector<int>& chosen) {
  double w = 0;
  for (int j : chosen) w += inst.disks[j].weight;
  return w;
}

}  // namespace sepcover::testutil
