#include "tamari_lab/binary_tree.hpp"

#include <map>
#include <mutex>

#include "tamari_lab/errors.hpp"

namespace tamari_lab {

int BinaryTree::compare(const BinaryTree& a, const BinaryTree& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  if (a.node_ == b.node_) return 0;  // shared structure, also both-leaf
  // Same nonzero size from here on, so both are internal nodes.
  if (int c = compare(a.left(), b.left()); c != 0) return c;
  return compare(a.right(), b.right());
}

namespace {

void encode_into(const BinaryTree& t, std::string& out) {
  if (t.is_leaf()) {
    out += '.';
    return;
  }
  out += '(';
  encode_into(t.left(), out);
  encode_into(t.right(), out);
  out += ')';
}

BinaryTree parse_tree(std::string_view s, std::size_t& pos, std::size_t base) {
  if (pos >= s.size()) throw ParseError("unexpected end of input", base + pos);
  char c = s[pos];
  if (c == '.') {
    ++pos;
    return BinaryTree::leaf();
  }
  if (c == '(') {
    ++pos;
    BinaryTree left = parse_tree(s, pos, base);
    BinaryTree right = parse_tree(s, pos, base);
    if (pos >= s.size() || s[pos] != ')')
      throw ParseError("expected ')'", base + pos);
    ++pos;
    return BinaryTree::node(left, right);
  }
  throw ParseError(std::string("unexpected character '") + c + "'", base + pos);
}

}  // namespace

std::string encode(const BinaryTree& t) {
  std::string out;
  out.reserve(3 * static_cast<std::size_t>(t.size()) + 1);
  encode_into(t, out);
  return out;
}

BinaryTree decode(std::string_view text, std::size_t base_offset) {
  std::size_t pos = 0;
  BinaryTree t = parse_tree(text, pos, base_offset);
  if (pos != text.size())
    throw ParseError("trailing characters after tree", base_offset + pos);
  return t;
}

const std::vector<BinaryTree>& enumerate_binary_trees(int n) {
  if (n < 0) throw SemanticError("tree size must be nonnegative");
  static std::mutex mu;
  static std::map<int, std::vector<BinaryTree>> cache;
  std::scoped_lock lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  // Fill bottom-up so the recursion below always hits the cache.
  for (int m = 0; m <= n; ++m) {
    if (cache.contains(m)) continue;
    std::vector<BinaryTree> trees;
    if (m == 0) {
      trees.push_back(BinaryTree::leaf());
    } else {
      for (int l = 0; l <= m - 1; ++l) {
        const auto& lefts = cache.at(l);
        const auto& rights = cache.at(m - 1 - l);
        for (const auto& left : lefts)
          for (const auto& right : rights)
            trees.push_back(BinaryTree::node(left, right));
      }
    }
    cache.emplace(m, std::move(trees));
  }
  return cache.at(n);
}

BinaryTree slash(const BinaryTree& s, const BinaryTree& t) {
  if (t.is_leaf()) return s;
  return BinaryTree::node(slash(s, t.left()), t.right());
}

BinaryTree backslash(const BinaryTree& s, const BinaryTree& t) {
  if (s.is_leaf()) return t;
  return BinaryTree::node(s.left(), backslash(s.right(), t));
}

BinaryTree vee(const BinaryTree& s, const BinaryTree& t) {
  return BinaryTree::node(s, t);
}

int left_border_length(const BinaryTree& t) {
  if (t.is_leaf()) throw SemanticError("left border length of the leaf tree");
  int len = 1;
  for (BinaryTree cur = t; !cur.is_leaf(); cur = cur.left()) ++len;
  return len;
}

BinaryTree add_left_edge(const BinaryTree& t, int segment) {
  if (segment < 1) throw SemanticError("left border segment must be >= 1");
  if (segment == 1) return BinaryTree::node(BinaryTree::leaf(), t);
  if (t.is_leaf())
    throw SemanticError("left border segment out of range");
  return BinaryTree::node(add_left_edge(t.left(), segment - 1), t.right());
}

BinaryTree remove_left_edge(const BinaryTree& t) {
  if (t.is_leaf()) throw SemanticError("cannot remove a left edge from the leaf");
  if (t.left().is_leaf()) return t.right();
  return BinaryTree::node(remove_left_edge(t.left()), t.right());
}

}  // namespace tamari_lab
