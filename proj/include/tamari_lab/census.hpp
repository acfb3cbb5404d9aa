#pragma once

#include <cstdint>
#include <vector>

namespace tamari_lab {

class Lab;

enum class Exec { serial, parallel };

// One full sweep over the intervals of size n: totals, the breakdown by the
// left border length of the upper endpoint, and the count of new intervals.
struct IntervalCensus {
  int n = 0;
  std::uint64_t total = 0;
  std::uint64_t indecomposable_total = 0;
  std::uint64_t new_total = 0;
  std::vector<std::uint64_t> by_border;        // [k]: intervals with L(hi) == k
  std::vector<std::uint64_t> indec_by_border;  // same, lower endpoint indecomposable

  friend bool operator==(const IntervalCensus& a, const IntervalCensus& b) {
    return a.n == b.n && a.total == b.total &&
           a.indecomposable_total == b.indecomposable_total &&
           a.new_total == b.new_total && a.by_border == b.by_border &&
           a.indec_by_border == b.indec_by_border;
  }
};

// Reference implementation: plain loop over intervals, newness decided by the
// public find_cuts. Kept deliberately simple; the parallel kernel is tested
// against it.
IntervalCensus census_intervals_serial(int n, Lab& lab);

// OpenMP kernel: per-tree span tables turn the newness test into a handful of
// bitset lookups, and lower endpoints are swept in parallel.
IntervalCensus census_intervals_parallel(int n, Lab& lab);

IntervalCensus census_intervals(int n, Lab& lab, Exec how);

}  // namespace tamari_lab
