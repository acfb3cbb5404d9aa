#pragma once

#include <cstdint>
#include <map>

#include "tamari_lab/binary_tree.hpp"

namespace tamari_lab {

// Integer-coefficient formal sum of binary trees, truncated by tree size:
// terms with size() > max_size are dropped on insertion. Zero coefficients are
// never stored, and terms follow the total order on trees (size, then
// enumeration rank), which fixes the output order everywhere.
class TreeSeries {
 public:
  using Terms = std::map<BinaryTree, std::int64_t, TreeLess>;

  explicit TreeSeries(int max_size) : max_size_(max_size) {}
  static TreeSeries single(const BinaryTree& t, int max_size,
                           std::int64_t coeff = 1) {
    TreeSeries s(max_size);
    s.add(t, coeff);
    return s;
  }

  int max_size() const { return max_size_; }
  const Terms& terms() const { return terms_; }
  std::int64_t coeff(const BinaryTree& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? 0 : it->second;
  }

  void add(const BinaryTree& t, std::int64_t c) {
    if (c == 0 || t.size() > max_size_) return;
    auto [it, inserted] = terms_.emplace(t, c);
    if (!inserted && (it->second += c) == 0) terms_.erase(it);
  }
  void add(const TreeSeries& other) {
    for (const auto& [t, c] : other.terms_) add(t, c);
  }

  TreeSeries truncated(int max_size) const {
    TreeSeries out(max_size);
    for (const auto& [t, c] : terms_) out.add(t, c);
    return out;
  }

  friend TreeSeries operator+(const TreeSeries& a, const TreeSeries& b) {
    TreeSeries out = a.truncated(std::min(a.max_size_, b.max_size_));
    for (const auto& [t, c] : b.terms_) out.add(t, c);
    return out;
  }
  friend TreeSeries operator-(const TreeSeries& a, const TreeSeries& b) {
    TreeSeries out = a.truncated(std::min(a.max_size_, b.max_size_));
    for (const auto& [t, c] : b.terms_) out.add(t, -c);
    return out;
  }

 private:
  int max_size_;
  Terms terms_;
};

// Equality of all terms of size <= through.
bool equal_through(const TreeSeries& a, const TreeSeries& b, int through);

}  // namespace tamari_lab
