#include "sepcover/instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace sepcover {

using nlohmann::json;

bool ValidationReport::has_errors() const {
  return std::any_of(issues.begin(), issues.end(), [](const Issue& i) {
    return i.severity == Issue::Severity::error;
  });
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const Issue& i : issues) {
    os << (i.severity == Issue::Severity::error ? "error: " : "warning: ")
       << i.message << "\n";
  }
  return os.str();
}

namespace {

void check_finite(ValidationReport& rep, double v, const std::string& what) {
  if (!std::isfinite(v)) {
    rep.issues.push_back(
        {Issue::Severity::error, what + " is not finite"});
  }
}

void check_x_ties_and_dups(ValidationReport& rep,
                           const std::vector<Point>& pts) {
  std::vector<int> order(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return pts[a].x < pts[b].x; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    const Point& a = pts[order[i - 1]];
    const Point& b = pts[order[i]];
    if (a.x == b.x) {
      if (a.y == b.y) {
        rep.issues.push_back({Issue::Severity::error,
                              "duplicate point at (" + std::to_string(a.x) +
                                  ", " + std::to_string(a.y) + ")"});
      } else {
        rep.issues.push_back({Issue::Severity::warning,
                              "x-tie between points " +
                                  std::to_string(order[i - 1]) + " and " +
                                  std::to_string(order[i])});
      }
    }
  }
}

}  // namespace

ValidationReport validate(const CoverageInstance& inst, bool check_coverage,
                          bool exact) {
  ValidationReport rep;
  if (!(inst.radius > 0))
    rep.issues.push_back({Issue::Severity::error, "radius must be positive"});
  for (int i = 0; i < inst.n(); ++i) {
    const Point& p = inst.points[i];
    check_finite(rep, p.x, "point " + std::to_string(i) + " x");
    check_finite(rep, p.y, "point " + std::to_string(i) + " y");
    if (p.y < 0)
      rep.issues.push_back({Issue::Severity::error,
                            "point " + std::to_string(i) + " below line"});
  }
  for (int j = 0; j < inst.m(); ++j) {
    const WeightedDisk& d = inst.disks[j];
    check_finite(rep, d.center.x, "disk " + std::to_string(j) + " center x");
    check_finite(rep, d.center.y, "disk " + std::to_string(j) + " center y");
    if (d.center.y > 0)
      rep.issues.push_back({Issue::Severity::error,
                            "disk " + std::to_string(j) + " center above line"});
    if (!(d.weight > 0))
      rep.issues.push_back({Issue::Severity::error,
                            "disk " + std::to_string(j) +
                                " weight must be positive"});
  }
  check_x_ties_and_dups(rep, inst.points);

  if (check_coverage) {
    for (int i = 0; i < inst.n(); ++i) {
      bool covered = false;
      for (int j = 0; j < inst.m() && !covered; ++j)
        covered = disk_contains(inst.disk(j), inst.points[i]);
      if (!covered)
        rep.issues.push_back({Issue::Severity::warning,
                              "point " + std::to_string(i) +
                                  " uncovered (instance infeasible)"});
    }
  }
  if (exact) {
    const mpq_class r2 = mpq_class(inst.radius) * mpq_class(inst.radius);
    for (int i = 0; i < inst.n(); ++i) {
      for (int j = 0; j < inst.m(); ++j) {
        const mpq_class dx =
            mpq_class(inst.points[i].x) - mpq_class(inst.disks[j].center.x);
        const mpq_class dy =
            mpq_class(inst.points[i].y) - mpq_class(inst.disks[j].center.y);
        if (dx * dx + dy * dy == r2)
          rep.issues.push_back({Issue::Severity::warning,
                                "point " + std::to_string(i) +
                                    " exactly on boundary of disk " +
                                    std::to_string(j)});
      }
    }
  }
  return rep;
}

ValidationReport validate(const HittingInstance& inst) {
  ValidationReport rep;
  if (!(inst.radius > 0))
    rep.issues.push_back({Issue::Severity::error, "radius must be positive"});
  std::vector<Point> pts;
  for (int i = 0; i < inst.n(); ++i) {
    const WeightedDisk& p = inst.points[i];
    pts.push_back(p.center);
    if (p.center.y < 0)
      rep.issues.push_back({Issue::Severity::error,
                            "point " + std::to_string(i) + " below line"});
    if (!(p.weight > 0))
      rep.issues.push_back({Issue::Severity::error,
                            "point " + std::to_string(i) +
                                " weight must be positive"});
  }
  for (int j = 0; j < inst.m(); ++j) {
    if (inst.disks[j].y > 0)
      rep.issues.push_back({Issue::Severity::error,
                            "disk " + std::to_string(j) + " center above line"});
  }
  check_x_ties_and_dups(rep, pts);
  return rep;
}

ValidationReport validate(const HalfplaneInstance& inst) {
  ValidationReport rep;
  for (int i = 0; i < inst.n(); ++i) {
    check_finite(rep, inst.points[i].x, "point " + std::to_string(i) + " x");
    check_finite(rep, inst.points[i].y, "point " + std::to_string(i) + " y");
  }
  for (int j = 0; j < inst.m(); ++j) {
    check_finite(rep, inst.halfplanes[j].h.a,
                 "halfplane " + std::to_string(j) + " slope");
    check_finite(rep, inst.halfplanes[j].h.b,
                 "halfplane " + std::to_string(j) + " intercept");
    if (!(inst.halfplanes[j].weight > 0))
      rep.issues.push_back({Issue::Severity::error,
                            "halfplane " + std::to_string(j) +
                                " weight must be positive"});
  }
  check_x_ties_and_dups(rep, inst.points);
  return rep;
}

// ---------------------------------------------------------------------------
// Generation

Profile profile_from_string(const std::string& s) {
  if (s == "uniform") return Profile::uniform;
  if (s == "clustered") return Profile::clustered;
  if (s == "adversarial-overlap") return Profile::adversarial_overlap;
  throw std::invalid_argument("unknown profile: " + s);
}

std::string to_string(Profile p) {
  switch (p) {
    case Profile::uniform: return "uniform";
    case Profile::clustered: return "clustered";
    case Profile::adversarial_overlap: return "adversarial-overlap";
  }
  return "?";
}

namespace {

// Hand-rolled uniform doubles: identical streams across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  double uniform(double a, double b) {
    const double u = (eng_() >> 11) * 0x1.0p-53;
    return a + (b - a) * u;
  }
  std::uint64_t bits() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

struct Window {
  double width;
  double ymax;  // points in [0, ymax]
  double ymin;  // centers in [ymin, 0]
};

Window window_for(Profile profile, int n, int m, double r) {
  Window w;
  w.ymax = 0.9 * r;
  w.ymin = -0.9 * r;
  if (profile == Profile::adversarial_overlap) {
    // Everything inside a ~2r-wide window so the dual arcs pairwise cross.
    w.width = 2.5 * r;
  } else {
    w.width = r * (1.0 + std::max(n, m) / 4.0);
  }
  return w;
}

// A point inside disk j, above the line; the midpoint of the disk's upper
// reach always qualifies.
Point point_inside(Rng& rng, const Point& c, double r) {
  for (int t = 0; t < 64; ++t) {
    const double x = rng.uniform(c.x - r, c.x + r);
    const double y = rng.uniform(0.0, c.y + r);
    const Point p{x, y};
    if (y >= 0 && disk_contains(Disk{c, r}, p, 0.0)) return p;
  }
  return {c.x, 0.5 * (c.y + r)};
}

}  // namespace

CoverageInstance generate(int n, int m, std::uint64_t seed,
                          const GenOptions& opts) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("generate: n and m must be >= 1");
  const double r = opts.radius;
  if (!(r > 0)) throw std::invalid_argument("generate: radius must be > 0");

  Rng rng(seed);
  const Window w = window_for(opts.profile, n, m, r);

  CoverageInstance inst;
  inst.radius = r;
  inst.disks.reserve(m);
  inst.points.reserve(n);

  std::vector<double> cluster_x;
  if (opts.profile == Profile::clustered) {
    const int k = std::max(1, static_cast<int>(std::sqrt(std::min(n, m)) / 2));
    for (int c = 0; c < k; ++c) cluster_x.push_back(rng.uniform(0, w.width));
  }
  auto sample_x = [&](double span) {
    if (cluster_x.empty()) return rng.uniform(0, span);
    const double cx = cluster_x[rng.bits() % cluster_x.size()];
    return std::clamp(cx + rng.uniform(-2.0 * r, 2.0 * r), 0.0, span);
  };

  for (int j = 0; j < m; ++j) {
    const Point c{sample_x(w.width), rng.uniform(w.ymin, 0.0)};
    inst.disks.push_back({c, rng.uniform(1.0, 100.0)});
  }
  for (int i = 0; i < n; ++i) {
    Point p{sample_x(w.width), rng.uniform(0.0, w.ymax)};
    bool covered = false;
    for (int j = 0; j < m && !covered; ++j)
      covered = disk_contains(inst.disk(j), p);
    if (!covered) {
      const int j = static_cast<int>(rng.bits() % m);
      p = point_inside(rng, inst.disks[j].center, r);
    }
    inst.points.push_back(p);
  }
  if (opts.infeasible) {
    // Plant the last point far beyond every disk's reach.
    inst.points.back() = {w.width + 10.0 * r, 0.05 * r};
  }
  return inst;
}

HittingInstance generate_hitting(int n, int m, std::uint64_t seed,
                                 const GenOptions& opts) {
  // Reuse the coverage generator and swap the weights onto the points;
  // every disk must contain a point, which is the mirrored condition.
  CoverageInstance cov = generate(m, n, seed, opts);  // m points, n disks
  HittingInstance hit;
  hit.radius = cov.radius;
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (int j = 0; j < cov.m(); ++j) {
    // Points of the hitting instance sit above the line.
    hit.points.push_back({{cov.disks[j].center.x, -cov.disks[j].center.y},
                          rng.uniform(1.0, 100.0)});
  }
  // An uncovered coverage point (the infeasible plant) maps to a disk no
  // point can hit, which is exactly the infeasible hitting case.
  for (int i = 0; i < cov.n(); ++i)
    hit.disks.push_back({cov.points[i].x, -cov.points[i].y});
  return hit;
}

HalfplaneInstance generate_halfplanes(int n, int m, std::uint64_t seed,
                                      const GenOptions& opts) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("generate: n and m must be >= 1");
  Rng rng(seed);
  HalfplaneInstance inst;
  for (int j = 0; j < m; ++j) {
    inst.halfplanes.push_back(
        {{rng.uniform(-2.0, 2.0), rng.uniform(-1.0, 3.0)},
         rng.uniform(1.0, 100.0)});
  }
  for (int i = 0; i < n; ++i) {
    Point p{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
    bool covered = false;
    for (int j = 0; j < m && !covered; ++j)
      covered = halfplane_contains(inst.halfplanes[j].h, p, 0.0);
    if (!covered) {
      // Drop the point onto a random halfplane's boundary-minus-margin.
      const int j = static_cast<int>(rng.bits() % m);
      const HalfplaneLower& h = inst.halfplanes[j].h;
      p.y = h.a * p.x + h.b - rng.uniform(0.1, 1.0);
    }
    inst.points.push_back(p);
  }
  if (opts.infeasible) {
    double top = inst.halfplanes[0].h.b;
    for (const auto& wh : inst.halfplanes)
      top = std::max(top, wh.h.a * 0.0 + wh.h.b);
    inst.points.back() = {0.0, top + 10.0};
  }
  return inst;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

json point_to_json(const Point& p) { return json::array({p.x, p.y}); }

Point point_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::runtime_error("parse error: " + where +
                             " must be a [x, y] number pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

const json& require(const json& j, const char* field,
                    const std::string& where) {
  auto it = j.find(field);
  if (it == j.end())
    throw std::runtime_error("parse error: missing field \"" +
                             std::string(field) + "\" in " + where);
  return *it;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("parse error: ") + e.what());
  }
}

}  // namespace

std::string to_json(const CoverageInstance& inst) {
  json j;
  j["radius"] = inst.radius;
  j["points"] = json::array();
  for (const Point& p : inst.points) j["points"].push_back(point_to_json(p));
  j["disks"] = json::array();
  for (const WeightedDisk& d : inst.disks)
    j["disks"].push_back({{"center", point_to_json(d.center)},
                          {"weight", d.weight}});
  return j.dump(2) + "\n";
}

std::string to_json(const HittingInstance& inst) {
  json j;
  j["radius"] = inst.radius;
  j["points"] = json::array();
  for (const WeightedDisk& p : inst.points)
    j["points"].push_back({{"p", point_to_json(p.center)},
                           {"weight", p.weight}});
  j["disks"] = json::array();
  for (const Point& c : inst.disks) j["disks"].push_back(point_to_json(c));
  return j.dump(2) + "\n";
}

std::string to_json(const HalfplaneInstance& inst) {
  json j;
  j["points"] = json::array();
  for (const Point& p : inst.points) j["points"].push_back(point_to_json(p));
  j["halfplanes"] = json::array();
  for (const WeightedHalfplane& h : inst.halfplanes)
    j["halfplanes"].push_back(
        {{"a", h.h.a}, {"b", h.h.b}, {"weight", h.weight}});
  return j.dump(2) + "\n";
}

CoverageInstance coverage_from_json(const std::string& text) {
  const json j = parse(text);
  CoverageInstance inst;
  const json& radius = require(j, "radius", "instance");
  if (!radius.is_number() || !(radius.get<double>() > 0))
    throw std::runtime_error("parse error: \"radius\" must be a positive number");
  inst.radius = radius.get<double>();
  int i = 0;
  for (const json& p : require(j, "points", "instance"))
    inst.points.push_back(point_from_json(p, "points[" + std::to_string(i++) + "]"));
  i = 0;
  for (const json& d : require(j, "disks", "instance")) {
    const std::string where = "disks[" + std::to_string(i++) + "]";
    const json& w = require(d, "weight", where);
    if (!w.is_number())
      throw std::runtime_error("parse error: \"weight\" must be a number in " +
                               where);
    inst.disks.push_back(
        {point_from_json(require(d, "center", where), where + ".center"),
         w.get<double>()});
  }
  return inst;
}

HittingInstance hitting_from_json(const std::string& text) {
  const json j = parse(text);
  HittingInstance inst;
  inst.radius = require(j, "radius", "instance").get<double>();
  int i = 0;
  for (const json& p : require(j, "points", "instance")) {
    const std::string where = "points[" + std::to_string(i++) + "]";
    inst.points.push_back(
        {point_from_json(require(p, "p", where), where + ".p"),
         require(p, "weight", where).get<double>()});
  }
  i = 0;
  for (const json& d : require(j, "disks", "instance"))
    inst.disks.push_back(point_from_json(d, "disks[" + std::to_string(i++) + "]"));
  return inst;
}

HalfplaneInstance halfplanes_from_json(const std::string& text) {
  const json j = parse(text);
  HalfplaneInstance inst;
  int i = 0;
  for (const json& p : require(j, "points", "instance"))
    inst.points.push_back(point_from_json(p, "points[" + std::to_string(i++) + "]"));
  i = 0;
  for (const json& h : require(j, "halfplanes", "instance")) {
    const std::string where = "halfplanes[" + std::to_string(i++) + "]";
    if (h.contains("side") && h["side"].get<std::string>() != "lower")
      throw std::runtime_error(
          "parse error: only lower halfplanes are supported; the general "
          "mixed-halfplane problem is out of scope (" + where + ")");
    inst.halfplanes.push_back(
        {{require(h, "a", where).get<double>(),
          require(h, "b", where).get<double>()},
         require(h, "weight", where).get<double>()});
  }
  return inst;
}

InstanceKind kind_of_json(const std::string& text) {
  const json j = parse(text);
  if (j.contains("halfplanes")) return InstanceKind::halfplane;
  if (j.contains("points") && !j["points"].empty() && j["points"][0].is_object())
    return InstanceKind::hitting;
  return InstanceKind::coverage;
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path);
  out << text;
}

}  // namespace sepcover
