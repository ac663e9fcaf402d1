#pragma once

#include <vector>

#include "sepcover/exact.hpp"

namespace sepcover {

struct Point {
  double x = 0;
  double y = 0;

  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }
};

struct Disk {
  Point center;
  double radius = 1.0;
};

/// The x-monotone boundary portion of a circle strictly below the separating
/// line (the x-axis): y(x) = cy - sqrt(r^2 - (x-cx)^2) over [xl, xr].
/// Exists only for circles whose center has cy < r.
struct LowerArc {
  int owner = -1;  // id of the disk this arc bounds
  double xl = 0;
  double xr = 0;
  Point center;
  double radius = 1.0;
};

/// The closed region y <= a*x + b.
struct HalfplaneLower {
  double a = 0;
  double b = 0;
};

/// Default absolute tolerance applied to squared-distance differences in the
/// double-precision predicates. CLI-overridable.
inline constexpr double kDefaultEps = 1e-9;

double squared_distance(const Point& a, const Point& b);

/// Closed-disk membership: dist^2(center, p) <= r^2, compared with slack eps
/// on the squared-distance difference.
bool disk_contains(const Disk& d, const Point& p, double eps = kDefaultEps);

/// Exact variant over the rational lifts of the stored doubles.
bool disk_contains_exact(const Disk& d, const Point& p);

/// Closed membership p.y <= a*p.x + b. The expression order is fixed so that
/// every solver evaluating this predicate sees the same boolean.
bool halfplane_contains(const HalfplaneLower& h, const Point& p,
                        double eps = kDefaultEps);
bool halfplane_contains_exact(const HalfplaneLower& h, const Point& p);

/// y of the arc at x. Throws std::domain_error if x is outside [xl, xr]
/// (beyond a small slack for endpoint roundoff).
double arc_y_at(const LowerArc& arc, double x);

/// Builds the lower arc of `d`, or returns false when the circle does not
/// dip below the x-axis (center.y >= radius).
bool lower_arc_of(const Disk& d, int owner, LowerArc& out);

/// Common points of two lower arcs from distinct equal-radius circles,
/// restricted to both x-ranges, sorted by x. Tangency yields one point.
/// Throws std::invalid_argument on identical circles.
std::vector<Point> arc_intersections(const LowerArc& a1, const LowerArc& a2);

}  // namespace sepcover
