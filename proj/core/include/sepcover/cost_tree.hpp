#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "sepcover/cutting.hpp"
#include "sepcover/exact.hpp"
#include "sepcover/indexed_heap.hpp"

namespace sepcover {

/// Lazy cost decomposition over the cutting tree.
///
/// Two invariants are maintained at every step:
///   1. cost(q) = w(q) + lambda(q) + sum of lambda(cell) over the ancestor
///      path of q's leaf (path includes the leaf).
///   2. minCost(leaf) = min over its points of w(q) + lambda(q);
///      minCost(internal) = min over children of minCost(child) +
///      lambda(child).
///
/// Every nonzero lambda assignment appends its element to the dirty list of
/// each ancestor cell; duplicates are allowed and draining tolerates
/// re-processing. Internal cells keep an indexed heap over their children so
/// a child update costs O(log fanout) instead of a full rescan.
template <class R>
class CostTree {
 public:
  CostTree(const HierCutting& cutting, const Located& located,
           const std::vector<double>& weights, Counters* counters)
      : cut_(cutting), loc_(located), w_(weights), counters_(counters) {
    const int m = static_cast<int>(w_.size());
    const auto cells = static_cast<int>(cut_.num_cells());
    lambda_q_.assign(m, R{});
    lambda_c_.assign(cells, R{});
    min_cost_.assign(cells, num<R>::inf());
    min_arg_.assign(cells, -1);
    dirty_.assign(cells, {});
    stamp_q_ = std::vector<Stamp>(m);
    stamp_c_ = std::vector<Stamp>(cells);

    local_of_q_.assign(m, -1);
    leaf_heap_.resize(cells);
    child_heap_.resize(cells);
    child_ordinal_.assign(cells, -1);

    for (int leaf : cut_.leaves()) {
      const auto& pts = loc_.points_in[leaf];
      std::vector<R> keys(pts.size());
      for (std::size_t t = 0; t < pts.size(); ++t) {
        local_of_q_[pts[t]] = static_cast<int>(t);
        keys[t] = num<R>::from_double(w_[pts[t]]);
      }
      leaf_heap_[leaf].init(std::move(keys));
      refresh_leaf(leaf);
    }
    // Internal minCost bottom-up; lambdas are all zero at this point.
    for (int level = cut_.k() - 1; level >= 0; --level) {
      for (int id : cut_.level(level)) {
        const Cell& c = cut_.cell(id);
        std::vector<R> keys(c.children.size());
        for (std::size_t t = 0; t < c.children.size(); ++t) {
          child_ordinal_[c.children[t]] = static_cast<int>(t);
          keys[t] = min_cost_[c.children[t]];
        }
        child_heap_[id].init(std::move(keys));
        refresh_internal(id);
      }
    }
    subtree_points_.assign(cut_.num_cells(), 0);
    for (int level = cut_.k(); level >= 0; --level) {
      for (int id : cut_.level(level)) {
        if (cut_.is_leaf(id)) {
          subtree_points_[id] = static_cast<int>(loc_.points_in[id].size());
        } else {
          for (int ch : cut_.cell(id).children)
            subtree_points_[id] += subtree_points_[ch];
        }
      }
    }
  }

  /// FindMinCost over the region of curve d: scans crossed leaves point by
  /// point and takes whole-subtree minima for children fully inside the
  /// region. Read-only. Returns the minimum cost and its point, or
  /// (infinity, -1) when the region holds no dual point.
  template <class InsidePointFn, class InsideAtFn>
  std::pair<R, int> find_min_cost(int d, InsidePointFn inside_point,
                                  InsideAtFn inside_at) const {
    R best = num<R>::inf();
    int arg = -1;
    auto consider = [&](const R& v, int q) {
      if (v < best || (v == best && q >= 0 && (arg < 0 || q < arg))) {
        best = v;
        arg = q;
      }
    };
    for (int cid : cut_.cells_crossed_by(d)) {
      if (cut_.is_leaf(cid)) {
        const R asum = ancestor_sum(cid);
        for (int q : loc_.points_in[cid]) {
          bump(counters_->find_point_scans);
          if (inside_point(q)) {
            R c = num<R>::from_double(w_[q]) + lambda_q_[q] + asum;
            consider(c, q);
          }
        }
      } else {
        for (int ch : cut_.cell(cid).children) {
          bump(counters_->find_child_evals);
          if (cut_.in_conflict(ch, d)) continue;      // handled at its level
          if (num<R>::is_inf(min_cost_[ch])) continue;  // empty subtree
          if (!inside_at(cut_.cell(ch).rep)) continue;
          consider(min_cost_[ch] + ancestor_sum(ch), min_arg_[ch]);
        }
      }
    }
    return {best, arg};
  }

  /// ResetCost: establishes cost(q) = w(q) + delta for every q outside the
  /// region of d. Crossed leaves update point by point; fully-outside
  /// children of crossed internal cells are drained and given a single cell
  /// lambda. `iter` is the 1-based iteration index and `arg_disk` the disk
  /// attaining delta, recorded as backtracking provenance.
  template <class InsidePointFn, class InsideAtFn>
  void reset_cost(int d, const R& delta, int iter, int arg_disk,
                  InsidePointFn inside_point, InsideAtFn inside_at) {
    for (int cid : cut_.cells_crossed_by(d)) {
      if (cut_.is_leaf(cid)) {
        for (int q : loc_.points_in[cid]) {
          bump(counters_->reset_point_updates);
          if (inside_point(q)) continue;
          set_lambda_q(q, delta - ancestor_sum(cid), iter, arg_disk);
        }
      } else {
        for (int ch : cut_.cell(cid).children) {
          bump(counters_->find_child_evals);
          if (cut_.in_conflict(ch, d)) continue;
          if (subtree_empty(ch)) continue;  // lambda stays 0 forever
          if (inside_at(cut_.cell(ch).rep)) continue;
          drain(ch);
          const int par = cut_.cell(ch).parent;
          set_lambda_c(ch, delta - ancestor_sum(par), iter, arg_disk);
        }
      }
    }
  }

  /// Invariant-1 evaluation of a single point's cost.
  R cost_of(int q) const {
    return num<R>::from_double(w_[q]) + lambda_q_[q] +
           ancestor_sum(loc_.leaf_of[q]);
  }

  /// Backtracking provenance for q: the newest reset stamped on q itself or
  /// any cell on its ancestor path. iteration 0 means "never reset" (cost is
  /// still the bare weight).
  std::pair<int, int> provenance_of(int q) const {
    Stamp s = stamp_q_[q];
    for (int cur = loc_.leaf_of[q]; cur >= 0; cur = cut_.cell(cur).parent) {
      if (stamp_c_[cur].iter > s.iter) s = stamp_c_[cur];
    }
    return {s.iter, s.arg};
  }

  /// Root minimum (over all dual points), for diagnostics.
  R root_min() const { return min_cost_[0]; }

  const std::vector<R>& point_lambdas() const { return lambda_q_; }
  const std::vector<R>& cell_lambdas() const { return lambda_c_; }
  std::size_t dirty_size(int cell) const { return dirty_[cell].size(); }

  /// (iteration, argmin disk) of the reset that last assigned this cell's
  /// lambda; iteration 0 if never.
  std::pair<int, int> cell_stamp(int cell) const {
    return {stamp_c_[cell].iter, stamp_c_[cell].arg};
  }

  /// Debug checker: both algorithm invariants plus dirty-list completeness,
  /// compared against a lockstep-maintained naive cost array. `tol` is the
  /// relative tolerance for Invariant 1 in double mode (0 for Exact).
  void check_invariants(const std::vector<R>& shadow, double tol) const {
    const int m = static_cast<int>(w_.size());
    for (int q = 0; q < m; ++q) {
      if (!approx_eq(cost_of(q), shadow[q], tol))
        throw std::logic_error("invariant 1 violated at point " +
                               std::to_string(q));
    }
    for (std::size_t id = 0; id < cut_.num_cells(); ++id) {
      const int cid = static_cast<int>(id);
      R expect = num<R>::inf();
      if (cut_.is_leaf(cid)) {
        for (int q : loc_.points_in[cid]) {
          const R v = num<R>::from_double(w_[q]) + lambda_q_[q];
          if (v < expect) expect = v;
        }
      } else {
        for (int ch : cut_.cell(cid).children) {
          const R v = min_cost_[ch] + lambda_c_[ch];
          if (v < expect) expect = v;
        }
      }
      if (!(expect == min_cost_[cid]))
        throw std::logic_error("invariant 2 violated at cell " +
                               std::to_string(cid));
    }
    // Dirty-list completeness: every nonzero lambda is registered with each
    // required ancestor.
    for (int q = 0; q < m; ++q) {
      if (lambda_q_[q] == R{}) continue;
      for (int cur = loc_.leaf_of[q]; cur >= 0; cur = cut_.cell(cur).parent)
        if (!dirty_contains(cur, false, q))
          throw std::logic_error("dirty-list completeness violated (point)");
    }
    for (std::size_t id = 0; id < cut_.num_cells(); ++id) {
      if (lambda_c_[id] == R{}) continue;
      for (int cur = cut_.cell(static_cast<int>(id)).parent; cur >= 0;
           cur = cut_.cell(cur).parent)
        if (!dirty_contains(cur, true, static_cast<int>(id)))
          throw std::logic_error("dirty-list completeness violated (cell)");
    }
  }

  /// After a subtree was drained and re-assigned, everything strictly below
  /// must carry zero lambda.
  void assert_drained(int cell) const {
    for (int ch : cut_.cell(cell).children) {
      if (!(lambda_c_[ch] == R{}))
        throw std::logic_error("drained subtree has nonzero cell lambda");
      assert_drained(ch);
    }
    if (cut_.is_leaf(cell)) {
      for (int q : loc_.points_in[cell])
        if (!(lambda_q_[q] == R{}))
          throw std::logic_error("drained subtree has nonzero point lambda");
    }
  }

  /// Cheap structural fingerprint; find_min_cost must not change it.
  std::uint64_t state_hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t v) {
      h ^= v;
      h *= 1099511628211ULL;
    };
    for (const R& v : lambda_q_) mix(hash_scalar(v));
    for (const R& v : lambda_c_) mix(hash_scalar(v));
    for (const R& v : min_cost_) mix(hash_scalar(v));
    for (const auto& l : dirty_) mix(l.size());
    return h;
  }

 private:
  struct Stamp {
    int iter = 0;
    int arg = -1;
  };
  struct Elem {
    bool is_cell;
    int id;
  };

  const HierCutting& cut_;
  const Located& loc_;
  std::vector<double> w_;
  Counters* counters_;

  std::vector<R> lambda_q_;
  std::vector<R> lambda_c_;
  std::vector<R> min_cost_;
  std::vector<int> min_arg_;
  std::vector<std::vector<Elem>> dirty_;
  std::vector<IndexedHeap<R>> leaf_heap_;
  std::vector<IndexedHeap<R>> child_heap_;
  std::vector<int> child_ordinal_;
  std::vector<int> local_of_q_;
  std::vector<int> subtree_points_;
  std::vector<Stamp> stamp_q_;
  std::vector<Stamp> stamp_c_;

  static void bump(std::uint64_t& c) { ++c; }

  bool subtree_empty(int cell) const { return subtree_points_[cell] == 0; }

  bool dirty_contains(int cell, bool is_cell, int id) const {
    for (const Elem& e : dirty_[cell])
      if (e.is_cell == is_cell && e.id == id) return true;
    return false;
  }

  static std::uint64_t hash_scalar(double v) {
    std::uint64_t u;
    static_assert(sizeof(u) == sizeof(v));
    __builtin_memcpy(&u, &v, sizeof(u));
    return u;
  }
  static std::uint64_t hash_scalar(const Exact& v) {
    return hash_scalar(v.to_double());
  }

  static bool approx_eq(const R& a, const R& b, double tol) {
    if (a == b) return true;
    if constexpr (std::is_same_v<R, double>) {
      const double scale = std::max({std::abs(a), std::abs(b), 1.0});
      return std::abs(a - b) <= tol * scale;
    }
    return false;
  }

  /// Sum of cell lambdas over the ancestor path of `cell`, inclusive.
  R ancestor_sum(int cell) const {
    R s{};
    for (int cur = cell; cur >= 0; cur = cut_.cell(cur).parent) {
      bump(counters_->ancestor_steps);
      s += lambda_c_[cur];
    }
    return s;
  }

  void refresh_leaf(int leaf) {
    if (leaf_heap_[leaf].empty()) {
      min_cost_[leaf] = num<R>::inf();
      min_arg_[leaf] = -1;
      return;
    }
    const int local = leaf_heap_[leaf].top();
    min_cost_[leaf] = leaf_heap_[leaf].key(local);
    min_arg_[leaf] = loc_.points_in[leaf][local];
  }

  void refresh_internal(int cell) {
    if (child_heap_[cell].empty()) {  // cannot happen: internal cells split
      min_cost_[cell] = num<R>::inf();
      min_arg_[cell] = -1;
      return;
    }
    const int ord = child_heap_[cell].top();
    const int ch = cut_.cell(cell).children[ord];
    min_cost_[cell] = child_heap_[cell].key(ord);
    min_arg_[cell] = min_arg_[ch];
  }

  /// Re-publishes minCost(cell) into its parent's child heap and walks to the
  /// root unconditionally (no early exit, so the walk cost is the stated
  /// O(log r) regardless of where changes stop propagating).
  void update_up(int cell) {
    int cur = cell;
    while (true) {
      const int par = cut_.cell(cur).parent;
      if (par < 0) break;
      bump(counters_->ancestor_steps);
      child_heap_[par].set_key(child_ordinal_[cur],
                               min_cost_[cur] + lambda_c_[cur]);
      bump(counters_->heap_ops);
      refresh_internal(par);
      cur = par;
    }
  }

  void append_dirty_path(int from_cell, const Elem& e) {
    for (int cur = from_cell; cur >= 0; cur = cut_.cell(cur).parent) {
      dirty_[cur].push_back(e);
      bump(counters_->list_appends);
    }
  }

  void set_lambda_q(int q, R val, int iter, int arg_disk) {
    lambda_q_[q] = std::move(val);
    stamp_q_[q] = {iter, arg_disk};
    const int leaf = loc_.leaf_of[q];
    leaf_heap_[leaf].set_key(local_of_q_[q],
                             num<R>::from_double(w_[q]) + lambda_q_[q]);
    bump(counters_->heap_ops);
    refresh_leaf(leaf);
    update_up(leaf);
    if (!(lambda_q_[q] == R{})) append_dirty_path(leaf, {false, q});
  }

  void set_lambda_c(int cell, R val, int iter, int arg_disk) {
    lambda_c_[cell] = std::move(val);
    stamp_c_[cell] = {iter, arg_disk};
    update_up(cell);
    if (!(lambda_c_[cell] == R{}))
      append_dirty_path(cut_.cell(cell).parent, {true, cell});
  }

  void zero_lambda_q(int q) {
    lambda_q_[q] = R{};
    const int leaf = loc_.leaf_of[q];
    leaf_heap_[leaf].set_key(local_of_q_[q], num<R>::from_double(w_[q]));
    bump(counters_->heap_ops);
    refresh_leaf(leaf);
    update_up(leaf);
  }

  void drain(int cell) {
    // Dirty lists may hold duplicates and already-zero elements; zeroing is
    // idempotent so they are simply skipped.
    std::vector<Elem> items;
    items.swap(dirty_[cell]);
    for (const Elem& e : items) {
      bump(counters_->drain_pops);
      if (e.is_cell) {
        if (lambda_c_[e.id] == R{}) continue;
        lambda_c_[e.id] = R{};
        update_up(e.id);
      } else {
        if (lambda_q_[e.id] == R{}) continue;
        zero_lambda_q(e.id);
      }
    }
  }
};

}  // namespace sepcover
