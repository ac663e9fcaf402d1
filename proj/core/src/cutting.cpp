#include "sepcover/cutting.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

namespace sepcover {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Inflation margin on the curve-crosses-cell test. Conservative: a curve
// within this vertical distance of a cell counts as crossing, so "not
// crossed" guarantees the whole closed cell lies strictly on one side.
constexpr double kCrossTol = 1e-7;

double sample_x(double u, double v) {
  const bool iu = std::isinf(u), iv = std::isinf(v);
  if (iu && iv) return 0.0;
  if (iu) return v - 1.0;
  if (iv) return u + 1.0;
  return 0.5 * (u + v);
}

struct Piece {
  int cid;
  double x0, x1;
};

struct GapCell {
  double xl, xr;
  int bottom, top;
};

}  // namespace

double HierCutting::y_top(const Cell& c, double x) const {
  return c.top == Cell::kNoBoundary ? kInf : curves_[c.top].y_at(x);
}

double HierCutting::y_bottom(const Cell& c, double x) const {
  return c.bottom == Cell::kNoBoundary ? -kInf : curves_[c.bottom].y_at(x);
}

bool HierCutting::in_conflict(int cell_id, int curve) const {
  const auto& v = cells_[cell_id].conflicts;
  return std::binary_search(v.begin(), v.end(), curve);
}

bool HierCutting::cell_contains(int id, const Point& q) const {
  const Cell& c = cells_[id];
  if (q.x < c.xl || q.x > c.xr) return false;
  return q.y >= y_bottom(c, q.x) && q.y <= y_top(c, q.x);
}

// ---------------------------------------------------------------------------
// Construction

class CuttingBuilder {
 public:
  CuttingBuilder(HierCutting& out, std::uint64_t seed, Counters* counters)
      : h_(out), rng_(seed), counters_(counters) {}

  void run();

 private:
  HierCutting& h_;
  std::mt19937_64 rng_;
  Counters* counters_;

  double y_top_at(const Cell& c, double x) const { return h_.y_top(c, x); }
  double y_bot_at(const Cell& c, double x) const { return h_.y_bottom(c, x); }

  // Maximal x-intervals where curve cid runs strictly inside the cell's open
  // region, inflated vertically by tol.
  std::vector<std::pair<double, double>> pieces_inside(const Cell& cell,
                                                       int cid,
                                                       double tol) const;
  bool crosses(const Cell& cell, int cid, double tol) const;

  std::vector<GapCell> decompose(const Cell& cell,
                                 const std::vector<int>& sample) const;

  Point rep_of(const Cell& c) const;
  void refine_cell(int sid, int level, std::size_t bound);
  void carry_cell(int sid, int level);
  int push_child(int parent_id, int level, const GapCell& g);
};

std::vector<std::pair<double, double>> CuttingBuilder::pieces_inside(
    const Cell& cell, int cid, double tol) const {
  std::vector<std::pair<double, double>> out;
  if (cid == cell.top || cid == cell.bottom) return out;
  const Curve& c = h_.curves_[cid];
  const double A = std::max(cell.xl, c.xl);
  const double B = std::min(cell.xr, c.xr);
  if (!(A < B)) return out;

  double xs[8];
  int nx = 0;
  xs[nx++] = A;
  xs[nx++] = B;
  for (int bd : {cell.top, cell.bottom}) {
    if (bd == Cell::kNoBoundary) continue;
    double roots[2];
    const int nr = curve_intersections(c, h_.curves_[bd], roots);
    for (int i = 0; i < nr; ++i)
      if (roots[i] > A && roots[i] < B) xs[nx++] = roots[i];
  }
  std::sort(xs, xs + nx);

  for (int i = 0; i + 1 < nx; ++i) {
    const double u = xs[i], v = xs[i + 1];
    if (!(u < v)) continue;
    const double xm = sample_x(u, v);
    const double y = c.y_at(xm);
    const bool inside =
        y > y_bot_at(cell, xm) - tol && y < y_top_at(cell, xm) + tol;
    if (!inside) continue;
    if (!out.empty() && out.back().second == u) {
      out.back().second = v;
    } else {
      out.emplace_back(u, v);
    }
  }
  return out;
}

bool CuttingBuilder::crosses(const Cell& cell, int cid, double tol) const {
  if (counters_) ++counters_->build_cross_tests;
  return !pieces_inside(cell, cid, tol).empty();
}

std::vector<GapCell> CuttingBuilder::decompose(
    const Cell& cell, const std::vector<int>& sample) const {
  std::vector<Piece> pieces;
  for (int cid : sample) {
    for (auto [x0, x1] : pieces_inside(cell, cid, 0.0))
      pieces.push_back({cid, x0, x1});
  }
  if (pieces.empty()) {
    return {GapCell{cell.xl, cell.xr, cell.bottom, cell.top}};
  }

  // Event x-coordinates: cell walls, piece endpoints, pairwise crossings.
  std::vector<double> ev;
  auto push_finite = [&](double x) {
    if (std::isfinite(x)) ev.push_back(x);
  };
  push_finite(cell.xl);
  push_finite(cell.xr);
  for (const Piece& p : pieces) {
    push_finite(p.x0);
    push_finite(p.x1);
  }
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      if (pieces[i].cid == pieces[j].cid) continue;
      double roots[2];
      const int nr = curve_intersections(h_.curves_[pieces[i].cid],
                                         h_.curves_[pieces[j].cid], roots);
      const double lo = std::max(pieces[i].x0, pieces[j].x0);
      const double hi = std::min(pieces[i].x1, pieces[j].x1);
      for (int t = 0; t < nr; ++t)
        if (roots[t] >= lo && roots[t] <= hi) push_finite(roots[t]);
    }
  }
  std::sort(ev.begin(), ev.end());
  ev.erase(std::unique(ev.begin(), ev.end()), ev.end());

  std::vector<double> borders;
  if (std::isinf(cell.xl)) borders.push_back(cell.xl);
  borders.insert(borders.end(), ev.begin(), ev.end());
  if (std::isinf(cell.xr)) borders.push_back(cell.xr);

  // Sweep the slabs left to right, stacking active pieces and merging gaps
  // bounded by the same curve pair across slab boundaries.
  struct Open {
    double xl;
    bool seen;
  };
  std::map<std::pair<int, int>, Open> open;
  std::vector<GapCell> out;
  std::vector<std::pair<double, int>> stack;

  auto gap_positive = [&](double x, int lo, int hi) {
    const double yl = lo == Cell::kNoBoundary ? -kInf : h_.curves_[lo].y_at(x);
    const double yh = hi == Cell::kNoBoundary ? kInf : h_.curves_[hi].y_at(x);
    return yh > yl;
  };

  for (std::size_t s = 0; s + 1 < borders.size(); ++s) {
    const double u = borders[s], v = borders[s + 1];
    if (!(u < v)) continue;
    const double xm = sample_x(u, v);
    const double yb = y_bot_at(cell, xm);
    const double yt = y_top_at(cell, xm);

    stack.clear();
    for (const Piece& p : pieces) {
      if (p.x0 <= u && p.x1 >= v) {
        const double y = h_.curves_[p.cid].y_at(xm);
        if (y > yb && y < yt) stack.emplace_back(y, p.cid);
      }
    }
    std::sort(stack.begin(), stack.end());

    for (auto& [key, o] : open) o.seen = false;

    auto visit = [&](int lo, int hi) {
      const auto key = std::make_pair(lo, hi);
      auto it = open.find(key);
      if (it != open.end() && !it->second.seen && gap_positive(u, lo, hi)) {
        it->second.seen = true;  // gap continues through this slab
        return;
      }
      if (it != open.end() && !it->second.seen) {
        out.push_back({it->second.xl, u, lo, hi});
        it->second = {u, true};
        return;
      }
      open[key] = {u, true};
    };

    int prev = cell.bottom;
    for (const auto& [y, cid] : stack) {
      visit(prev, cid);
      prev = cid;
    }
    visit(prev, cell.top);

    for (auto it = open.begin(); it != open.end();) {
      if (!it->second.seen) {
        out.push_back({it->second.xl, u, it->first.first, it->first.second});
        it = open.erase(it);
      } else {
        ++it;
      }
    }
  }
  for (const auto& [key, o] : open)
    out.push_back({o.xl, cell.xr, key.first, key.second});

  return out;
}

Point CuttingBuilder::rep_of(const Cell& c) const {
  const double xm = sample_x(c.xl, c.xr);
  const double yb = y_bot_at(c, xm);
  const double yt = y_top_at(c, xm);
  double y;
  if (std::isinf(yb) && std::isinf(yt)) {
    y = 0.0;
  } else if (std::isinf(yb)) {
    y = yt - 1.0;
  } else if (std::isinf(yt)) {
    y = yb + 1.0;
  } else {
    y = 0.5 * (yb + yt);
  }
  return {xm, y};
}

int CuttingBuilder::push_child(int parent_id, int level, const GapCell& g) {
  Cell c;
  c.id = static_cast<int>(h_.cells_.size());
  c.level = level;
  c.parent = parent_id;
  c.xl = g.xl;
  c.xr = g.xr;
  c.bottom = g.bottom;
  c.top = g.top;
  h_.cells_.push_back(std::move(c));
  h_.cells_[parent_id].children.push_back(h_.cells_.back().id);
  h_.levels_[level].push_back(h_.cells_.back().id);
  return h_.cells_.back().id;
}

void CuttingBuilder::carry_cell(int sid, int level) {
  // push_child may reallocate cells_, so do not hold references across it
  const GapCell g{h_.cells_[sid].xl, h_.cells_[sid].xr, h_.cells_[sid].bottom,
                  h_.cells_[sid].top};
  const int cid = push_child(sid, level, g);
  h_.cells_[cid].rep = h_.cells_[sid].rep;
  h_.cells_[cid].conflicts = h_.cells_[sid].conflicts;
}

void CuttingBuilder::refine_cell(int sid, int level, std::size_t bound) {
  // Las Vegas: sample, decompose, check the crossing bound on every child;
  // on failure grow the sample, eventually shrinking the inflation margin
  // so grazing curves cannot starve progress.
  const std::size_t nconf = h_.cells_[sid].conflicts.size();
  const double ratio =
      static_cast<double>(nconf) / std::max<std::size_t>(bound, 1);
  const std::size_t s0 = std::max<std::size_t>(
      4, static_cast<std::size_t>(std::ceil(2.5 * ratio * std::log(ratio + 1.0))));

  for (int attempt = 0;; ++attempt) {
    if (attempt > 60)
      throw std::runtime_error("cutting: crossing bound unattainable");
    if (attempt > 0 && counters_) ++counters_->build_resamples;
    ++h_.resamples_;

    std::size_t want = std::min(nconf, s0 << std::min(attempt, 8));
    double tol = kCrossTol;
    if (attempt >= 6) tol = std::max(1e-15, kCrossTol * std::pow(0.1, attempt - 5));

    // sample `want` conflict curves without replacement
    std::vector<int> pool = h_.cells_[sid].conflicts;
    for (std::size_t i = 0; i < want; ++i) {
      const std::size_t j =
          i + static_cast<std::size_t>(rng_() % (pool.size() - i));
      std::swap(pool[i], pool[j]);
    }
    pool.resize(want);

    const std::vector<GapCell> geom = decompose(h_.cells_[sid], pool);

    // Child conflict lists from the parent's list; reject on bound violation.
    std::vector<std::vector<int>> confs(geom.size());
    bool ok = true;
    for (std::size_t g = 0; g < geom.size() && ok; ++g) {
      Cell probe;
      probe.xl = geom[g].xl;
      probe.xr = geom[g].xr;
      probe.bottom = geom[g].bottom;
      probe.top = geom[g].top;
      for (int cid : h_.cells_[sid].conflicts) {
        if (crosses(probe, cid, tol)) {
          confs[g].push_back(cid);
          if (confs[g].size() > bound) {
            ok = false;
            break;
          }
        }
      }
    }
    if (!ok) continue;

    for (std::size_t g = 0; g < geom.size(); ++g) {
      const int cid = push_child(sid, level, geom[g]);
      Cell& c = h_.cells_[cid];
      c.conflicts = std::move(confs[g]);
      c.rep = rep_of(c);
    }
    h_.max_fanout_ = std::max(h_.max_fanout_, geom.size());
    return;
  }
}

void CuttingBuilder::run() {
  const int n = h_.n_input_;
  h_.levels_.assign(h_.k_ + 1, {});

  Cell root;
  root.id = 0;
  root.level = 0;
  if (h_.domain_ == HierCutting::Domain::lower_halfplane)
    root.top = n;  // synthetic y=0 line appended by build()
  h_.cells_.push_back(root);
  h_.levels_[0].push_back(0);
  {
    Cell& rc = h_.cells_[0];
    for (int cid = 0; cid < n; ++cid)
      if (crosses(rc, cid, kCrossTol)) rc.conflicts.push_back(cid);
    rc.rep = rep_of(rc);
  }

  for (int level = 1; level <= h_.k_; ++level) {
    double denom = std::pow(static_cast<double>(h_.rho_), level);
    denom = std::min(denom, static_cast<double>(h_.r_));
    const auto bound = static_cast<std::size_t>(
        std::floor(static_cast<double>(n) / denom));
    const std::vector<int> prev = h_.levels_[level - 1];
    for (int sid : prev) {
      if (h_.cells_[sid].conflicts.size() <= bound) {
        carry_cell(sid, level);
      } else {
        refine_cell(sid, level, bound);
      }
    }
  }

  h_.by_curve_.assign(n, {});
  for (const Cell& c : h_.cells_) {
    for (int cid : c.conflicts) h_.by_curve_[cid].push_back(c.id);
  }
}

HierCutting HierCutting::build(std::vector<Curve> curves, int r, int rho,
                               std::uint64_t seed, Domain domain,
                               Counters* counters) {
  const int n = static_cast<int>(curves.size());
  if (r < 1 || r > std::max(1, n))
    throw std::invalid_argument("cutting: r out of range [1, n]");
  if (rho < 2) throw std::invalid_argument("cutting: rho must be >= 2");

  HierCutting h;
  h.n_input_ = n;
  h.r_ = r;
  h.rho_ = rho;
  h.domain_ = domain;
  h.k_ = 0;
  for (long long p = 1; p < r; p *= rho) ++h.k_;

  h.curves_ = std::move(curves);
  if (domain == Domain::lower_halfplane)
    h.curves_.push_back(Curve::from_line(-1, 0.0, 0.0));

  CuttingBuilder(h, seed, counters).run();
  return h;
}

int HierCutting::locate(const Point& q, Counters* counters) const {
  if (!cell_contains(0, q))
    throw std::domain_error("locate: point outside the cutting domain");
  int cur = 0;
  while (!cells_[cur].children.empty()) {
    int found = -1;
    for (int ch : cells_[cur].children) {
      if (counters) ++counters->locate_steps;
      if (cell_contains(ch, q)) {
        found = ch;
        break;
      }
    }
    if (found < 0) {
      // Roundoff pushed q off every child; take the least-violating one.
      double best = kInf;
      for (int ch : cells_[cur].children) {
        const Cell& c = cells_[ch];
        double viol = 0.0;
        if (std::isfinite(c.xl)) viol = std::max(viol, c.xl - q.x);
        if (std::isfinite(c.xr)) viol = std::max(viol, q.x - c.xr);
        const double x = std::clamp(q.x, c.xl, c.xr);
        const double yb = y_bottom(c, x), yt = y_top(c, x);
        if (std::isfinite(yb)) viol = std::max(viol, yb - q.y);
        if (std::isfinite(yt)) viol = std::max(viol, q.y - yt);
        if (viol < best) {
          best = viol;
          found = ch;
        }
      }
      assert(found >= 0);
    }
    cur = found;
  }
  return cur;
}

Located locate_points(const HierCutting& cutting,
                      const std::vector<Point>& pts, Counters* counters) {
  Located loc;
  loc.leaf_of.resize(pts.size());
  loc.points_in.resize(cutting.num_cells());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const int leaf = cutting.locate(pts[i], counters);
    loc.leaf_of[i] = leaf;
    loc.points_in[leaf].push_back(static_cast<int>(i));
  }
  return loc;
}

CuttingStats HierCutting::stats() const {
  CuttingStats s;
  s.levels = k_;
  s.cells = cells_.size();
  s.leaves = leaves().size();
  s.resamples = resamples_;
  s.max_fanout = max_fanout_;
  for (const Cell& c : cells_) s.sum_conflict += c.conflicts.size();
  for (int leaf : leaves())
    s.max_leaf_conflict = std::max(s.max_leaf_conflict,
                                   cells_[leaf].conflicts.size());
  s.c_cells = static_cast<double>(cells_.size()) /
              (static_cast<double>(r_) * static_cast<double>(r_));
  return s;
}

}  // namespace sepcover
