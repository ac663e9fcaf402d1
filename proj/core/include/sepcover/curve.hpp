#pragma once

#include <cmath>

#include "sepcover/geom.hpp"

namespace sepcover {

/// An x-monotone curve bounding a dual region from below. Two kinds appear:
/// circular lower arcs (unit-disk instances) and full lines (the halfplane
/// adapter's parameter space, and the separating line itself). The region
/// owned by the curve is the set of points on or above it within its
/// x-domain.
struct Curve {
  enum class Kind { arc, line };

  Kind kind = Kind::line;
  int owner = -1;

  // arc: y(x) = cy - sqrt(r^2 - (x-cx)^2) over [xl, xr]
  Point center;
  double radius = 1.0;
  double xl = -std::numeric_limits<double>::infinity();
  double xr = std::numeric_limits<double>::infinity();

  // line: y(x) = a*x + b, unbounded domain
  double a = 0;
  double b = 0;

  static Curve from_arc(const LowerArc& arc);
  static Curve from_line(int owner, double a, double b);

  /// y at x, with x clamped into the domain (callers stay within the domain
  /// up to roundoff at piece endpoints).
  double y_at(double x) const;
};

/// x-coordinates where the two curves cross, restricted to both domains,
/// ascending. At most 2 for arc pairs, 1 when a line is involved.
/// Identical curves yield none (callers never pair a curve with itself).
int curve_intersections(const Curve& c1, const Curve& c2, double out_x[2]);

}  // namespace sepcover
