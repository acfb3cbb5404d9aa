#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tamari_lab/binary_tree.hpp"

namespace tamari_lab {

class Lab;

// An interval [lo, hi] of the Tamari lattice: lo.size() == hi.size() and
// lo <= hi. Construct through make_interval / parse_interval / the
// enumerators, which validate; the operations below assume validity.
struct Interval {
  BinaryTree lo;
  BinaryTree hi;

  int size() const { return lo.size(); }

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

struct IntervalLess {
  bool operator()(const Interval& a, const Interval& b) const {
    if (int c = BinaryTree::compare(a.lo, b.lo); c != 0) return c < 0;
    return BinaryTree::compare(a.hi, b.hi) < 0;
  }
};

// SemanticError unless lo and hi have equal size and lo <= hi.
Interval make_interval(const BinaryTree& lo, const BinaryTree& hi, Lab& lab);

// Text form "lo;hi", e.g. "(.(..));((..).)".
Interval parse_interval(std::string_view text, Lab& lab);
std::string interval_to_text(const Interval& i);

// All intervals of size n: lo index ascending, then hi index ascending.
std::vector<Interval> enumerate_intervals(int n, Lab& lab);

// Maximal factorization t = t1 / t2 / ... / tk, deepest factor first; every
// factor is /-indecomposable and k = L(t) - 1. SemanticError on the leaf.
std::vector<BinaryTree> tree_decomposition(const BinaryTree& t);

// Sizes of the maximal factors, deepest first.
std::vector<int> composition_of(const BinaryTree& t);

// True when a is b with some adjacent parts merged (equality allowed).
bool coarser_or_equal(const std::vector<int>& a, const std::vector<int>& b);

// t is /-indecomposable iff its root carries a leaf on the left.
bool is_indecomposable(const BinaryTree& t);
bool is_indecomposable(const Interval& i);

// Componentwise: [lo, hi] / [lo', hi'] = [lo/lo', hi/hi'].
Interval interval_slash(const Interval& j, const Interval& k);

// Maximal factorization of an interval, deepest factor first: factor sizes
// follow the maximal factorization of lo, and the matching runs of hi's
// factors are fused back with /. Recomposing with interval_slash returns i.
std::vector<Interval> interval_decomposition(const Interval& i);

// Y *s J for 1 <= s <= L(hi(J)): the indecomposable interval
// [Y\lo(J), add_left_edge(hi(J), s)]. SemanticError when s is out of range.
Interval y_star(const Interval& j, int segment);

// Inverse of y_star on indecomposable intervals other than [Y, Y]: recovers
// (J, s) with y_star(J, s) == i. SemanticError otherwise.
std::pair<Interval, int> indecomposable_factor(const Interval& i);

}  // namespace tamari_lab
