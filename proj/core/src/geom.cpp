#include "sepcover/geom.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sepcover {

double squared_distance(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

bool disk_contains(const Disk& d, const Point& p, double eps) {
  return squared_distance(d.center, p) - d.radius * d.radius <= eps;
}

bool disk_contains_exact(const Disk& d, const Point& p) {
  const mpq_class dx = mpq_class(p.x) - mpq_class(d.center.x);
  const mpq_class dy = mpq_class(p.y) - mpq_class(d.center.y);
  const mpq_class r(d.radius);
  return dx * dx + dy * dy <= r * r;
}

bool halfplane_contains(const HalfplaneLower& h, const Point& p, double eps) {
  return p.y - (h.a * p.x + h.b) <= eps;
}

bool halfplane_contains_exact(const HalfplaneLower& h, const Point& p) {
  return mpq_class(p.y) <= mpq_class(h.a) * mpq_class(p.x) + mpq_class(h.b);
}

double arc_y_at(const LowerArc& arc, double x) {
  // Slack absorbs roundoff at endpoints produced by intersection code.
  const double slack = 1e-9 * std::max(1.0, std::abs(arc.xl) + std::abs(arc.xr));
  if (x < arc.xl - slack || x > arc.xr + slack)
    throw std::domain_error("arc_y_at: x outside arc range");
  const double dx = x - arc.center.x;
  const double t = arc.radius * arc.radius - dx * dx;
  return arc.center.y - std::sqrt(std::max(t, 0.0));
}

bool lower_arc_of(const Disk& d, int owner, LowerArc& out) {
  if (d.center.y >= d.radius) return false;
  // Half-width of the chord the circle cuts on the x-axis.
  const double w = std::sqrt(d.radius * d.radius - d.center.y * d.center.y);
  out.owner = owner;
  out.center = d.center;
  out.radius = d.radius;
  out.xl = d.center.x - w;
  out.xr = d.center.x + w;
  return true;
}

std::vector<Point> arc_intersections(const LowerArc& a1, const LowerArc& a2) {
  if (a1.center == a2.center && a1.radius == a2.radius)
    throw std::invalid_argument("arc_intersections: identical circles");

  const double r = a1.radius;
  const double dx = a2.center.x - a1.center.x;
  const double dy = a2.center.y - a1.center.y;
  const double d2 = dx * dx + dy * dy;
  std::vector<Point> out;
  if (d2 > 4.0 * r * r) return out;  // circles too far apart

  // Equal radii: intersections are symmetric about the center midpoint.
  const Point mid{(a1.center.x + a2.center.x) / 2.0,
                  (a1.center.y + a2.center.y) / 2.0};
  const double h2 = r * r - d2 / 4.0;
  const double d = std::sqrt(d2);
  const double h = std::sqrt(std::max(h2, 0.0));
  // Unit vector perpendicular to the center line.
  const double ux = -dy / d;
  const double uy = dx / d;

  Point cand[2] = {{mid.x + h * ux, mid.y + h * uy},
                   {mid.x - h * ux, mid.y - h * uy}};
  const int ncand = h2 <= 0.0 ? 1 : 2;  // tangency: one point

  const double lo = std::max(a1.xl, a2.xl);
  const double hi = std::min(a1.xr, a2.xr);
  for (int i = 0; i < ncand; ++i) {
    const Point& p = cand[i];
    // A circle-circle intersection lies on both lower arcs iff it is below
    // the x-axis and inside both x-ranges.
    if (p.y <= 0.0 && p.x >= lo && p.x <= hi) out.push_back(p);
  }
  std::sort(out.begin(), out.end(),
            [](const Point& a, const Point& b) { return a.x < b.x; });
  return out;
}

}  // namespace sepcover
