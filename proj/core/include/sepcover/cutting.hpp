#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sepcover/counters.hpp"
#include "sepcover/curve.hpp"

namespace sepcover {

/// A pseudo-trapezoid: vertical sides at xl/xr, top and bottom each a piece
/// of an x-monotone curve or unbounded. kNoBoundary marks an unbounded side.
struct Cell {
  static constexpr int kNoBoundary = -1;

  int id = 0;
  int level = 0;
  int parent = -1;
  std::vector<int> children;

  double xl = -std::numeric_limits<double>::infinity();
  double xr = std::numeric_limits<double>::infinity();
  int top = kNoBoundary;     // curve id bounding the cell from above
  int bottom = kNoBoundary;  // curve id bounding the cell from below

  Point rep;                  // interior point, fixed at construction
  std::vector<int> conflicts; // sorted curve ids crossing the open cell
};

struct CuttingStats {
  int levels = 0;           // k
  std::size_t cells = 0;
  std::size_t leaves = 0;
  std::size_t max_leaf_conflict = 0;
  std::size_t sum_conflict = 0;   // over all cells, all levels
  std::size_t max_fanout = 0;
  std::size_t resamples = 0;
  double c_cells = 0;       // cells / r^2
};

enum class ChildTag { crossed, inside, outside };

/// Hierarchical (1/r)-cutting of a family of curves, built by randomized
/// refinement and verified structurally (Las Vegas): every returned level-l
/// cell is crossed by at most n/min(rho^l, r) curves.
class HierCutting {
 public:
  enum class Domain { lower_halfplane, plane };

  /// Builds the cutting. `curves` are the n input curves (ids = positions);
  /// for Domain::lower_halfplane a synthetic y=0 line is appended internally
  /// as the root's top boundary. Throws std::invalid_argument when r is out
  /// of [1, max(1, n)].
  static HierCutting build(std::vector<Curve> curves, int r, int rho,
                           std::uint64_t seed, Domain domain,
                           Counters* counters = nullptr);

  int k() const { return k_; }
  int r() const { return r_; }
  int num_curves() const { return n_input_; }
  Domain domain() const { return domain_; }

  const Cell& cell(int id) const { return cells_[id]; }
  std::size_t num_cells() const { return cells_.size(); }
  const std::vector<int>& leaves() const { return levels_.back(); }
  const std::vector<int>& level(int l) const { return levels_[l]; }
  const std::vector<Curve>& curves() const { return curves_; }

  /// Cells whose conflict list contains curve d, ascending by cell id.
  const std::vector<int>& cells_crossed_by(int d) const { return by_curve_[d]; }

  bool is_leaf(int id) const { return cells_[id].level == k_; }
  bool in_conflict(int cell_id, int curve) const;

  /// Closed membership of q in the cell region.
  bool cell_contains(int id, const Point& q) const;

  /// Leaf containing q; descends level by level picking the first child (by
  /// id) whose closed region contains q. Throws std::domain_error when q is
  /// outside the root domain.
  int locate(const Point& q, Counters* counters = nullptr) const;

  /// Tags each child of an internal cell crossed by curve d: crossed when the
  /// child's conflict list contains d, otherwise inside/outside by testing
  /// the stored representative point with `inside_region`.
  template <class InsideFn>
  void classify_children(int cell_id, int d, InsideFn&& inside_region,
                         std::vector<ChildTag>& out) const {
    const Cell& c = cells_[cell_id];
    out.clear();
    out.reserve(c.children.size());
    for (int ch : c.children) {
      if (in_conflict(ch, d)) {
        out.push_back(ChildTag::crossed);
      } else {
        out.push_back(inside_region(cells_[ch].rep) ? ChildTag::inside
                                                    : ChildTag::outside);
      }
    }
  }

  CuttingStats stats() const;

  /// Debug SVG: all cells colored per level, input curves overlaid.
  std::string to_svg() const;

 private:
  std::vector<Curve> curves_;  // input curves (+ synthetic boundary at back)
  int n_input_ = 0;
  int r_ = 1;
  int rho_ = 4;
  int k_ = 0;
  Domain domain_ = Domain::lower_halfplane;

  std::vector<Cell> cells_;
  std::vector<std::vector<int>> levels_;
  std::vector<std::vector<int>> by_curve_;
  std::size_t resamples_ = 0;
  std::size_t max_fanout_ = 0;

  double y_top(const Cell& c, double x) const;
  double y_bottom(const Cell& c, double x) const;

  friend class CuttingBuilder;
};

/// Point-location result for a batch of points against a cutting's leaves.
struct Located {
  std::vector<int> leaf_of;                  // per point
  std::vector<std::vector<int>> points_in;   // per cell id (empty off-leaf)
};

Located locate_points(const HierCutting& cutting,
                      const std::vector<Point>& pts,
                      Counters* counters = nullptr);

}  // namespace sepcover
