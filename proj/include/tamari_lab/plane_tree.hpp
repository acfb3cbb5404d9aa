#pragma once

#include <string>
#include <vector>

namespace tamari_lab {

// Planar rooted tree in which every internal node has at least two children.
// These index the skeletons of interval decoupages: a tree with n+1 leaves
// describes a way to split an interval of size n.
struct PlaneTree {
  std::vector<PlaneTree> children;

  bool is_leaf() const { return children.empty(); }
  int leaf_count() const;
  int internal_count() const;

  friend bool operator==(const PlaneTree& a, const PlaneTree& b) {
    return a.children == b.children;
  }
};

// True if every internal node has at least two children.
bool valences_ok(const PlaneTree& t);

// All valid plane trees with n + 1 leaves, n >= 1; deterministic order
// (children chosen left to right, each by leaf count ascending). Little
// Schroeder counts: 1, 3, 11, 45, 197, ...
const std::vector<PlaneTree>& enumerate_plane_trees(int n);

// Text form matching the binary-tree grammar: leaf "." and internal node
// "(" children ")", e.g. "(...)" for the root with three leaves.
std::string encode(const PlaneTree& t);

}  // namespace tamari_lab
