#include "tamari_lab/tamari.hpp"

#include <algorithm>

#include "tamari_lab/errors.hpp"
#include "tamari_lab/lab.hpp"

namespace tamari_lab {

namespace {

void collect_rotations(const BinaryTree& t, std::vector<BinaryTree>& out) {
  if (t.is_leaf()) return;
  const BinaryTree& a = t.left();
  const BinaryTree& r = t.right();
  if (!r.is_leaf()) {
    // A ∨ (B ∨ C)  ->  (A ∨ B) ∨ C at the root.
    out.push_back(BinaryTree::node(BinaryTree::node(a, r.left()), r.right()));
  }
  std::vector<BinaryTree> sub;
  collect_rotations(a, sub);
  for (const auto& a2 : sub) out.push_back(BinaryTree::node(a2, r));
  sub.clear();
  collect_rotations(r, sub);
  for (const auto& r2 : sub) out.push_back(BinaryTree::node(a, r2));
}

}  // namespace

std::vector<BinaryTree> rotations_up(const BinaryTree& t) {
  std::vector<BinaryTree> out;
  collect_rotations(t, out);
  return out;
}

TamariPoset TamariPoset::build(int n) {
  if (n < 1) throw SemanticError("Tamari poset needs n >= 1");
  TamariPoset p;
  p.n_ = n;
  p.elements_ = enumerate_binary_trees(n);
  const int m = p.element_count();
  p.words_ = (m + 63) / 64;
  p.index_.reserve(static_cast<std::size_t>(m) * 2);
  for (int i = 0; i < m; ++i) p.index_.emplace(encode(p.elements_[i]), i);

  p.up_covers_.resize(m);
  for (int i = 0; i < m; ++i) {
    auto rots = rotations_up(p.elements_[i]);
    auto& succ = p.up_covers_[i];
    succ.reserve(rots.size());
    for (const auto& r : rots) succ.push_back(p.index_.at(encode(r)));
    std::sort(succ.begin(), succ.end());
  }

  // Reachability: process elements in reverse topological order of the
  // rotation DAG, then OR successor rows into each row.
  std::vector<int> topo;
  topo.reserve(m);
  std::vector<signed char> state(m, 0);  // 0 new, 1 on stack, 2 done
  std::vector<std::pair<int, std::size_t>> stack;
  for (int root = 0; root < m; ++root) {
    if (state[root] != 0) continue;
    stack.emplace_back(root, 0);
    state[root] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < p.up_covers_[v].size()) {
        int w = p.up_covers_[v][next++];
        if (state[w] == 0) {
          state[w] = 1;
          stack.emplace_back(w, 0);
        } else if (state[w] == 1) {
          throw InternalError("rotation digraph has a cycle");
        }
      } else {
        state[v] = 2;
        topo.push_back(v);
        stack.pop_back();
      }
    }
  }

  p.reach_.assign(static_cast<std::size_t>(m) * p.words_, 0);
  for (int v : topo) {  // successors of v are already complete
    std::uint64_t* row = &p.reach_[static_cast<std::size_t>(v) * p.words_];
    row[v / 64] |= std::uint64_t{1} << (v % 64);
    for (int w : p.up_covers_[v]) {
      const std::uint64_t* src = &p.reach_[static_cast<std::size_t>(w) * p.words_];
      for (int k = 0; k < p.words_; ++k) row[k] |= src[k];
    }
  }
  return p;
}

int TamariPoset::index_of(const BinaryTree& t) const {
  if (t.size() != n_)
    throw SemanticError("tree size does not match this poset");
  return index_.at(encode(t));
}

std::uint64_t TamariPoset::up_set_size(int a) const {
  const std::uint64_t* row = &reach_[static_cast<std::size_t>(a) * words_];
  std::uint64_t total = 0;
  for (int k = 0; k < words_; ++k) total += std::popcount(row[k]);
  return total;
}

std::uint64_t TamariPoset::interval_count() const {
  std::uint64_t total = 0;
  for (int a = 0; a < element_count(); ++a) total += up_set_size(a);
  return total;
}

bool tamari_leq(const BinaryTree& s, const BinaryTree& t, Lab& lab) {
  if (s.size() != t.size())
    throw SemanticError("Tamari order only relates trees of equal size");
  if (s.is_leaf()) return true;
  const TamariPoset& p = lab.poset(s.size());
  return p.leq(p.index_of(s), p.index_of(t));
}

TreeSeries star_trees(const BinaryTree& s, const BinaryTree& t, Lab& lab) {
  if (s.is_leaf()) return TreeSeries::single(t, t.size());
  if (t.is_leaf()) return TreeSeries::single(s, s.size());
  const int n = s.size() + t.size();
  const TamariPoset& p = lab.poset(n);
  const int lo = p.index_of(backslash(s, t));
  const int hi = p.index_of(slash(s, t));
  TreeSeries out(n);
  p.for_each_geq(lo, [&](int u) {
    if (p.leq(u, hi)) out.add(p.element(u), 1);
  });
  return out;
}

}  // namespace tamari_lab
