#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "tamari_lab/interval.hpp"
#include "tamari_lab/plane_tree.hpp"

namespace tamari_lab {

class Lab;

// A proper range of leaves (numbered 0..n from the left, both bounds
// inclusive) spanned by an internal node of both endpoints of an interval,
// such that the spanned pair and the contracted pair are both intervals.
struct Cut {
  int leaf_lo = 0;
  int leaf_hi = 0;

  int width() const { return leaf_hi - leaf_lo; }  // size of the spanned subtree

  friend bool operator==(const Cut& a, const Cut& b) {
    return a.leaf_lo == b.leaf_lo && a.leaf_hi == b.leaf_hi;
  }
  friend bool operator<(const Cut& a, const Cut& b) {
    return a.leaf_lo != b.leaf_lo ? a.leaf_lo < b.leaf_lo
                                  : a.leaf_hi < b.leaf_hi;
  }
};

// Leaf spans of the internal nodes of t, sorted; span (a, b) means the node's
// subtree has leaves a..b. The root spans (0, size).
std::vector<std::pair<int, int>> node_spans(const BinaryTree& t);

// The subtree of t spanning exactly leaves a..b; (a, b) must be a node span.
BinaryTree subtree_spanning(const BinaryTree& t, int a, int b);

// t with the node spanning leaves a..b contracted to a leaf.
BinaryTree contract_span(const BinaryTree& t, int a, int b);

// All cuts of the interval, sorted. The cut family is always laminar.
std::vector<Cut> find_cuts(const Interval& i, Lab& lab);

// An interval is new when it admits no cut at all.
bool is_new(const Interval& i, Lab& lab);

// How an interval splits into new pieces: a skeleton plane tree whose leaves
// match the interval's leaves, plus one new interval per internal node, keyed
// by the child-index path from the root (root = empty path). A node with
// arity v carries a piece of size v - 1.
struct Decoupage {
  PlaneTree skeleton;
  std::map<std::vector<int>, Interval> pieces;
};

// Substitutes the pieces back into the skeleton: the piece at an internal
// node has one leaf per child, and each child's graft replaces the matching
// leaf. SemanticError when arities and piece sizes disagree or pieces are
// missing; the result is validated as an interval.
Interval graft(const PlaneTree& skeleton,
               const std::map<std::vector<int>, Interval>& pieces, Lab& lab);
Interval graft(const Decoupage& d, Lab& lab);

// The unique decomposition of an interval into new pieces, obtained by
// contracting every cut at once. graft(decoupage(i)) == i.
Decoupage decoupage(const Interval& i, Lab& lab);

// Number of new intervals of size n, from the census kernel.
std::uint64_t count_new(int n, Lab& lab);

// 3 * 2^(n-2) * (2n-2)! / ((n-1)! (n+1)!) for n >= 2; SemanticError below.
mpz_class closed_new_count(int n);

}  // namespace tamari_lab
