#include "sepcover/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sepcover/cutting.hpp"
#include "sepcover/solver.hpp"

namespace sepcover {

namespace {

struct Box {
  double xl = 0, xr = 1, yb = 0, yt = 1;
  void grow(double x, double y) {
    xl = std::min(xl, x);
    xr = std::max(xr, x);
    yb = std::min(yb, y);
    yt = std::max(yt, y);
  }
};

const char* kLevelColors[] = {"#1f77b4", "#ff7f0e", "#2ca02c",
                              "#d62728", "#9467bd", "#8c564b"};

class SvgWriter {
 public:
  explicit SvgWriter(const Box& box) : box_(box) {
    const double w = box.xr - box.xl, h = box.yt - box.yb;
    os_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << box.xl
        << " " << -box.yt << " " << w << " " << h << "\">\n";
    stroke_ = 0.002 * std::max(w, h);
  }

  // y is negated: SVG's y axis points down.
  void line(double x1, double y1, double x2, double y2, const char* cls,
            const char* color) {
    os_ << "<line class=\"" << cls << "\" x1=\"" << x1 << "\" y1=\"" << -y1
        << "\" x2=\"" << x2 << "\" y2=\"" << -y2 << "\" stroke=\"" << color
        << "\" stroke-width=\"" << stroke_ << "\"/>\n";
  }

  void circle(double cx, double cy, double r, const std::string& cls) {
    os_ << "<circle class=\"" << cls << "\" cx=\"" << cx << "\" cy=\"" << -cy
        << "\" r=\"" << r << "\" fill=\"none\" stroke=\"#555\""
        << " stroke-width=\"" << stroke_ << "\"/>\n";
  }

  void marker(double x, double y) {
    const double s = 4 * stroke_;
    os_ << "<rect class=\"point\" x=\"" << x - s / 2 << "\" y=\""
        << -y - s / 2 << "\" width=\"" << s << "\" height=\"" << s
        << "\" fill=\"#d62728\"/>\n";
  }

  void polyline(const std::vector<Point>& pts, const char* color) {
    os_ << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"" << stroke_ << "\" points=\"";
    for (const Point& p : pts) os_ << p.x << "," << -p.y << " ";
    os_ << "\"/>\n";
  }

  void comment(const std::string& text) { os_ << "<!-- " << text << " -->\n"; }
  void open_group(const char* cls, int level) {
    os_ << "<g class=\"" << cls << "\" data-level=\"" << level << "\">\n";
  }
  void close_group() { os_ << "</g>\n"; }

  std::string finish() {
    os_ << "</svg>\n";
    return os_.str();
  }

 private:
  Box box_;
  double stroke_;
  std::ostringstream os_;
};

std::vector<Point> sample_curve(const Curve& c, double xl, double xr,
                                int steps = 64) {
  std::vector<Point> pts;
  const double a = std::max(xl, c.xl), b = std::min(xr, c.xr);
  if (!(a <= b)) return pts;
  for (int i = 0; i <= steps; ++i) {
    const double x = a + (b - a) * i / steps;
    pts.push_back({x, c.y_at(x)});
  }
  return pts;
}

Box instance_box(const CoverageInstance& inst) {
  Box box;
  bool first = true;
  auto grow = [&](double x, double y) {
    if (first) {
      box = {x, x, y, y};
      first = false;
    } else {
      box.grow(x, y);
    }
  };
  for (const Point& p : inst.points) grow(p.x, p.y);
  for (const WeightedDisk& d : inst.disks) {
    grow(d.center.x - inst.radius, d.center.y - inst.radius);
    grow(d.center.x + inst.radius, d.center.y + inst.radius);
  }
  const double m = 0.1 * std::max(box.xr - box.xl, box.yt - box.yb) + 0.1;
  box.xl -= m;
  box.xr += m;
  box.yb -= m;
  box.yt += m;
  return box;
}

}  // namespace

std::string HierCutting::to_svg() const {
  Box box{-1, 1, -1, 1};
  for (int cid = 0; cid < n_input_; ++cid) {
    const Curve& c = curves_[cid];
    if (c.kind == Curve::Kind::arc) {
      box.grow(c.xl, c.y_at(0.5 * (c.xl + c.xr)));
      box.grow(c.xr, 0);
    } else {
      box.grow(-3, c.y_at(-3));
      box.grow(3, c.y_at(3));
    }
  }
  SvgWriter svg(box);
  const CuttingStats st = stats();
  svg.comment("cutting-stats {\"levels\":" + std::to_string(st.levels) +
              ",\"cells\":" + std::to_string(st.cells) +
              ",\"leaves\":" + std::to_string(st.leaves) +
              ",\"max_leaf_conflict\":" + std::to_string(st.max_leaf_conflict) +
              ",\"sum_conflict\":" + std::to_string(st.sum_conflict) + "}");

  for (std::size_t id = 0; id < cells_.size(); ++id) {
    const Cell& c = cells_[id];
    const char* color = kLevelColors[c.level % 6];
    svg.open_group("cell", c.level);
    const double xl = std::max(c.xl, box.xl), xr = std::min(c.xr, box.xr);
    if (xl < xr) {
      auto clampy = [&](double y) { return std::clamp(y, box.yb, box.yt); };
      if (c.top != Cell::kNoBoundary)
        svg.polyline(sample_curve(curves_[c.top], xl, xr), color);
      if (c.bottom != Cell::kNoBoundary)
        svg.polyline(sample_curve(curves_[c.bottom], xl, xr), color);
      svg.line(xl, clampy(y_bottom(c, xl)), xl, clampy(y_top(c, xl)), "wall",
               color);
      svg.line(xr, clampy(y_bottom(c, xr)), xr, clampy(y_top(c, xr)), "wall",
               color);
    }
    svg.close_group();
  }
  for (int cid = 0; cid < n_input_; ++cid)
    svg.polyline(sample_curve(curves_[cid], box.xl, box.xr), "#333");
  return svg.finish();
}

std::string render_svg(const CoverageInstance& inst, const Solution* sol,
                       const RenderOptions& opts) {
  if (opts.show_cutting || opts.dual) {
    const detail::FastInputs in = detail::dual_inputs_coverage(inst);
    if (opts.show_cutting) {
      int r = opts.r;
      if (r <= 0)
        r = std::max(1, std::min(static_cast<int>(std::ceil(
                                     std::sqrt(std::max(1, inst.m())))),
                                 static_cast<int>(in.curves.size())));
      r = std::min(r, std::max(1, static_cast<int>(in.curves.size())));
      HierCutting cut = HierCutting::build(in.curves, r, opts.rho, opts.seed,
                                           HierCutting::Domain::lower_halfplane);
      return cut.to_svg();
    }
    Box box{-1, 1, -1, 1};
    for (const Curve& c : in.curves) {
      box.grow(c.xl, c.y_at(0.5 * (c.xl + c.xr)));
      box.grow(c.xr, 0);
    }
    for (const Point& q : in.dual_points) box.grow(q.x, q.y);
    SvgWriter svg(box);
    svg.line(box.xl, 0, box.xr, 0, "sepline", "#000");
    for (const Curve& c : in.curves)
      svg.polyline(sample_curve(c, box.xl, box.xr), "#555");
    for (const Point& q : in.dual_points) svg.marker(q.x, q.y);
    return svg.finish();
  }

  const Box box = instance_box(inst);
  SvgWriter svg(box);
  svg.line(box.xl, 0, box.xr, 0, "sepline", "#000");
  std::vector<char> chosen(inst.m(), 0);
  if (sol)
    for (int j : sol->chosen) chosen[j] = 1;
  for (int j = 0; j < inst.m(); ++j) {
    svg.circle(inst.disks[j].center.x, inst.disks[j].center.y, inst.radius,
               chosen[j] ? "disk chosen" : "disk");
  }
  for (const Point& p : inst.points) svg.marker(p.x, p.y);
  return svg.finish();
}

}  // namespace sepcover
