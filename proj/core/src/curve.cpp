#include "sepcover/curve.hpp"

#include <algorithm>

namespace sepcover {

Curve Curve::from_arc(const LowerArc& arc) {
  Curve c;
  c.kind = Kind::arc;
  c.owner = arc.owner;
  c.center = arc.center;
  c.radius = arc.radius;
  c.xl = arc.xl;
  c.xr = arc.xr;
  return c;
}

Curve Curve::from_line(int owner, double a, double b) {
  Curve c;
  c.kind = Kind::line;
  c.owner = owner;
  c.a = a;
  c.b = b;
  return c;
}

double Curve::y_at(double x) const {
  if (kind == Kind::line) return a * x + b;
  const double cx = std::clamp(x, xl, xr);
  const double dx = cx - center.x;
  const double t = radius * radius - dx * dx;
  return center.y - std::sqrt(std::max(t, 0.0));
}

namespace {

// Solves ax^2 + bx + c = 0; returns the real roots ascending.
int solve_quadratic(double a, double b, double c, double out[2]) {
  if (a == 0.0) {
    if (b == 0.0) return 0;
    out[0] = -c / b;
    return 1;
  }
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return 0;
  if (disc == 0.0) {
    out[0] = -b / (2.0 * a);
    return 1;
  }
  const double sq = std::sqrt(disc);
  const double q = -0.5 * (b + (b >= 0.0 ? sq : -sq));
  double r0 = q / a;
  double r1 = (q != 0.0) ? c / q : -b / a - r0;
  if (r0 > r1) std::swap(r0, r1);
  out[0] = r0;
  out[1] = r1;
  return 2;
}

// Whether the circle point (x, y) lies on the arc's lower branch and inside
// its x-domain.
bool on_arc(const Curve& arc, double x, double y) {
  return x >= arc.xl && x <= arc.xr && y <= arc.center.y;
}

}  // namespace

int curve_intersections(const Curve& c1, const Curve& c2, double out_x[2]) {
  int count = 0;
  auto emit = [&](double x) {
    for (int i = 0; i < count; ++i)
      if (out_x[i] == x) return;
    out_x[count++] = x;
  };

  if (c1.kind == Curve::Kind::line && c2.kind == Curve::Kind::line) {
    if (c1.a != c2.a) emit((c2.b - c1.b) / (c1.a - c2.a));
  } else if (c1.kind == Curve::Kind::arc && c2.kind == Curve::Kind::arc) {
    // Equal-radius circles; reuse the midpoint construction.
    const double r = c1.radius;
    const double dx = c2.center.x - c1.center.x;
    const double dy = c2.center.y - c1.center.y;
    const double d2 = dx * dx + dy * dy;
    if (d2 == 0.0 || d2 > 4.0 * r * r) return 0;
    const double mx = 0.5 * (c1.center.x + c2.center.x);
    const double my = 0.5 * (c1.center.y + c2.center.y);
    const double h = std::sqrt(std::max(r * r - d2 / 4.0, 0.0));
    const double d = std::sqrt(d2);
    const double ux = -dy / d, uy = dx / d;
    for (int sgn : {+1, -1}) {
      const double x = mx + sgn * h * ux;
      const double y = my + sgn * h * uy;
      if (on_arc(c1, x, y) && on_arc(c2, x, y)) emit(x);
      if (h == 0.0) break;  // tangency: one candidate
    }
  } else {
    const Curve& arc = c1.kind == Curve::Kind::arc ? c1 : c2;
    const Curve& line = c1.kind == Curve::Kind::arc ? c2 : c1;
    // (x-cx)^2 + (a*x + b - cy)^2 = r^2
    const double cx = arc.center.x;
    const double e = line.b - arc.center.y;
    const double qa = 1.0 + line.a * line.a;
    const double qb = 2.0 * (line.a * e - cx);
    const double qc = cx * cx + e * e - arc.radius * arc.radius;
    double roots[2];
    const int nr = solve_quadratic(qa, qb, qc, roots);
    for (int i = 0; i < nr; ++i) {
      const double x = roots[i];
      const double y = line.a * x + line.b;
      if (on_arc(arc, x, y)) emit(x);
    }
  }

  if (count == 2 && out_x[0] > out_x[1]) std::swap(out_x[0], out_x[1]);
  return count;
}

}  // namespace sepcover
