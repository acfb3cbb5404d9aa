#pragma once

#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "tamari_lab/binary_tree.hpp"
#include "tamari_lab/tree_series.hpp"

namespace tamari_lab {

class Lab;

// All trees obtained from t by one upward rotation: some subtree of the form
// A ∨ (B ∨ C) is rewritten to (A ∨ B) ∨ C. These are exactly the covers of t
// in the Tamari order.
std::vector<BinaryTree> rotations_up(const BinaryTree& t);

// The Tamari lattice on trees with n internal nodes. Elements follow the
// frozen enumeration order; the full order relation is materialized as one
// reachability bitset per element, so leq() is a bit lookup. Immutable once
// built and safe to share across threads.
class TamariPoset {
 public:
  static TamariPoset build(int n);  // n >= 1; size caps live in Lab

  int tree_size() const { return n_; }
  int element_count() const { return static_cast<int>(elements_.size()); }
  const std::vector<BinaryTree>& elements() const { return elements_; }
  const BinaryTree& element(int id) const { return elements_[id]; }

  // SemanticError if t does not have n internal nodes.
  int index_of(const BinaryTree& t) const;

  bool leq(int a, int b) const {
    return (reach_[static_cast<std::size_t>(a) * words_ +
                   static_cast<std::size_t>(b) / 64] >>
            (b % 64)) &
           1u;
  }

  // Covering successors (single rotations), sorted by element index.
  const std::vector<std::vector<int>>& up_covers() const { return up_covers_; }

  std::uint64_t up_set_size(int a) const;
  std::uint64_t interval_count() const;  // sum of all up-set sizes

  template <typename F>
  void for_each_geq(int a, F&& f) const {
    const std::uint64_t* row = &reach_[static_cast<std::size_t>(a) * words_];
    for (int w = 0; w < words_; ++w) {
      std::uint64_t bits = row[w];
      while (bits) {
        int bit = std::countr_zero(bits);
        f(w * 64 + bit);
        bits &= bits - 1;
      }
    }
  }

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<BinaryTree> elements_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<int>> up_covers_;
  std::vector<std::uint64_t> reach_;  // row a: bitset of {b : a <= b}
};

// Tamari order on equal-sized trees; SemanticError on size mismatch.
bool tamari_leq(const BinaryTree& s, const BinaryTree& t, Lab& lab);

// S * T: sum of all trees U with S\T <= U <= S/T. The leaf acts as the unit.
TreeSeries star_trees(const BinaryTree& s, const BinaryTree& t, Lab& lab);

}  // namespace tamari_lab
