#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace tamari_lab {

// Planar binary tree. A default-constructed value is the leaf; internal nodes
// are shared and immutable, so copies are cheap and trees can be reused across
// threads. size() counts internal nodes: the leaf has size 0.
class BinaryTree {
 public:
  BinaryTree() = default;

  static BinaryTree leaf() { return BinaryTree(); }
  static BinaryTree node(const BinaryTree& left, const BinaryTree& right);

  bool is_leaf() const { return node_ == nullptr; }
  int size() const;
  int leaf_count() const { return size() + 1; }

  // Only valid on internal nodes.
  const BinaryTree& left() const;
  const BinaryTree& right() const;

  friend bool operator==(const BinaryTree& a, const BinaryTree& b) {
    return compare(a, b) == 0;
  }
  friend bool operator!=(const BinaryTree& a, const BinaryTree& b) {
    return compare(a, b) != 0;
  }

  // Total order: by size, then recursively by left subtree, then right.
  // On same-size trees this is exactly the enumeration order.
  static int compare(const BinaryTree& a, const BinaryTree& b);

 private:
  struct Node;

  explicit BinaryTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

struct BinaryTree::Node {
  BinaryTree left;
  BinaryTree right;
  int size;
};

inline BinaryTree BinaryTree::node(const BinaryTree& left,
                                   const BinaryTree& right) {
  return BinaryTree(std::make_shared<const Node>(
      Node{left, right, left.size() + right.size() + 1}));
}

inline int BinaryTree::size() const { return node_ ? node_->size : 0; }
inline const BinaryTree& BinaryTree::left() const { return node_->left; }
inline const BinaryTree& BinaryTree::right() const { return node_->right; }

struct TreeLess {
  bool operator()(const BinaryTree& a, const BinaryTree& b) const {
    return BinaryTree::compare(a, b) < 0;
  }
};

// Text form: leaf "." and node "(" left right ")".
std::string encode(const BinaryTree& t);

// Parses the whole string; throws ParseError with a byte offset otherwise.
// `base_offset` shifts reported offsets when the text is embedded in a larger
// input (interval parsing).
BinaryTree decode(std::string_view text, std::size_t base_offset = 0);

// All trees with n internal nodes, ordered by left-subtree size ascending and
// recursively within. The order is part of the stable output contract. The
// returned reference stays valid for the process lifetime.
const std::vector<BinaryTree>& enumerate_binary_trees(int n);

// S/T: grafts the root of S onto the leftmost leaf of T.
BinaryTree slash(const BinaryTree& s, const BinaryTree& t);
// S\T: grafts the root of T onto the rightmost leaf of S.
BinaryTree backslash(const BinaryTree& s, const BinaryTree& t);
// S∨T: new root with S on the left and T on the right.
BinaryTree vee(const BinaryTree& s, const BinaryTree& t);

// L(T): number of segments of the left border, i.e. internal nodes on the left
// spine plus one. Defined for nonleaf trees only; L >= 2.
int left_border_length(const BinaryTree& t);

// Inserts a new node carrying a leaf on segment `segment` of the left border,
// 1 = segment at the root. The inserted node becomes the deepest node of the
// new left spine, so the result always has left border length segment + 1.
// Requires 1 <= segment <= L(t); the leaf tree is allowed only with segment 1.
BinaryTree add_left_edge(const BinaryTree& t, int segment);

// Removes the deepest node of the left spine, replacing it by its right
// subtree. Inverse of add_left_edge: remove(add(t, s)) == t for every valid s,
// and add(remove(u), L(u) - 1) == u for nonleaf u.
BinaryTree remove_left_edge(const BinaryTree& t);

}  // namespace tamari_lab
