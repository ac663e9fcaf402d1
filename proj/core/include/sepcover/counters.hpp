#pragma once

#include <cstdint>

namespace sepcover {

/// Exact event counts gathered during a solve. These are the observable form
/// of the structure's cost guarantees and feed the bench CSV and the
/// log-log scaling fit.
struct Counters {
  // cutting construction + point location
  std::uint64_t build_cross_tests = 0;
  std::uint64_t build_resamples = 0;
  std::uint64_t locate_steps = 0;

  // cost-tree operations
  std::uint64_t find_point_scans = 0;   // points examined in crossed leaves
  std::uint64_t find_child_evals = 0;   // children classified in crossed cells
  std::uint64_t reset_point_updates = 0;
  std::uint64_t drain_pops = 0;         // dirty-list elements removed
  std::uint64_t list_appends = 0;       // dirty-list elements appended
  std::uint64_t heap_ops = 0;
  std::uint64_t ancestor_steps = 0;     // cells visited in ancestor walks

  // simple solvers: inner-loop iterations
  std::uint64_t scan_ops = 0;

  std::uint64_t total() const {
    return build_cross_tests + build_resamples + locate_steps +
           find_point_scans + find_child_evals + reset_point_updates +
           drain_pops + list_appends + heap_ops + ancestor_steps + scan_ops;
  }

  Counters& operator+=(const Counters& o) {
    build_cross_tests += o.build_cross_tests;
    build_resamples += o.build_resamples;
    locate_steps += o.locate_steps;
    find_point_scans += o.find_point_scans;
    find_child_evals += o.find_child_evals;
    reset_point_updates += o.reset_point_updates;
    drain_pops += o.drain_pops;
    list_appends += o.list_appends;
    heap_ops += o.heap_ops;
    ancestor_steps += o.ancestor_steps;
    scan_ops += o.scan_ops;
    return *this;
  }
};

}  // namespace sepcover
