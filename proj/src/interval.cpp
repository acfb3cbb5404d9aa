#include "tamari_lab/interval.hpp"

#include <algorithm>

#include "tamari_lab/errors.hpp"
#include "tamari_lab/lab.hpp"

namespace tamari_lab {

Interval make_interval(const BinaryTree& lo, const BinaryTree& hi, Lab& lab) {
  if (lo.size() != hi.size())
    throw SemanticError("interval endpoints must have equal size");
  if (lo.size() == 0)
    throw SemanticError("intervals are defined for size >= 1");
  if (!tamari_leq(lo, hi, lab))
    throw SemanticError("not an interval: " + encode(lo) + " is not below " +
                        encode(hi));
  return Interval{lo, hi};
}

Interval parse_interval(std::string_view text, Lab& lab) {
  auto sep = text.find(';');
  if (sep == std::string_view::npos)
    throw ParseError("expected ';' between the two trees", text.size());
  BinaryTree lo = decode(text.substr(0, sep), 0);
  BinaryTree hi = decode(text.substr(sep + 1), sep + 1);
  return make_interval(lo, hi, lab);
}

std::string interval_to_text(const Interval& i) {
  return encode(i.lo) + ";" + encode(i.hi);
}

std::vector<Interval> enumerate_intervals(int n, Lab& lab) {
  const TamariPoset& p = lab.poset(n);
  std::vector<Interval> out;
  out.reserve(p.interval_count());
  for (int lo = 0; lo < p.element_count(); ++lo)
    p.for_each_geq(lo, [&](int hi) {
      out.push_back(Interval{p.element(lo), p.element(hi)});
    });
  return out;
}

std::vector<BinaryTree> tree_decomposition(const BinaryTree& t) {
  if (t.is_leaf()) throw SemanticError("cannot factor the leaf tree");
  // Cutting every edge of the left spine is the maximal factorization: the
  // factor at spine node v is v with its left subtree pruned to a leaf, and
  // deeper spine nodes come first.
  std::vector<BinaryTree> factors;
  for (BinaryTree cur = t; !cur.is_leaf(); cur = cur.left())
    factors.push_back(BinaryTree::node(BinaryTree::leaf(), cur.right()));
  std::reverse(factors.begin(), factors.end());
  return factors;
}

std::vector<int> composition_of(const BinaryTree& t) {
  std::vector<int> parts;
  for (BinaryTree cur = t; !cur.is_leaf(); cur = cur.left())
    parts.push_back(cur.right().size() + 1);
  std::reverse(parts.begin(), parts.end());
  return parts;
}

bool coarser_or_equal(const std::vector<int>& a, const std::vector<int>& b) {
  // a coarsens b iff the partial sums of a all occur among those of b.
  std::size_t j = 0;
  int sum_a = 0, sum_b = 0;
  for (int part : a) {
    sum_a += part;
    while (j < b.size() && sum_b < sum_a) sum_b += b[j++];
    if (sum_b != sum_a) return false;
  }
  return j == b.size();
}

bool is_indecomposable(const BinaryTree& t) {
  return !t.is_leaf() && t.left().is_leaf();
}

bool is_indecomposable(const Interval& i) { return is_indecomposable(i.lo); }

Interval interval_slash(const Interval& j, const Interval& k) {
  return Interval{slash(j.lo, k.lo), slash(j.hi, k.hi)};
}

std::vector<Interval> interval_decomposition(const Interval& i) {
  std::vector<BinaryTree> lo_factors = tree_decomposition(i.lo);
  std::vector<BinaryTree> hi_factors = tree_decomposition(i.hi);
  // The composition of lo coarsens the composition of hi, so hi's factors can
  // be fused in consecutive runs matching lo's factor sizes.
  std::vector<Interval> out;
  out.reserve(lo_factors.size());
  std::size_t j = 0;
  for (const auto& lo_f : lo_factors) {
    if (j >= hi_factors.size())
      throw InternalError("interval factor fusion ran out of parts");
    BinaryTree hi_f = hi_factors[j++];
    while (hi_f.size() < lo_f.size() && j < hi_factors.size())
      hi_f = slash(hi_f, hi_factors[j++]);
    if (hi_f.size() != lo_f.size())
      throw InternalError("interval factor sizes failed to align");
    out.push_back(Interval{lo_f, hi_f});
  }
  if (j != hi_factors.size())
    throw InternalError("interval factor fusion left spare parts");
  return out;
}

Interval y_star(const Interval& j, int segment) {
  int border = left_border_length(j.hi);
  if (segment < 1 || segment > border)
    throw SemanticError("segment must be in 1.." + std::to_string(border));
  BinaryTree leaf;
  BinaryTree y = BinaryTree::node(leaf, leaf);
  return Interval{backslash(y, j.lo), add_left_edge(j.hi, segment)};
}

std::pair<Interval, int> indecomposable_factor(const Interval& i) {
  if (!is_indecomposable(i))
    throw SemanticError("interval is decomposable");
  if (i.size() == 1)
    throw SemanticError("[Y;Y] has no smaller factor");
  return {Interval{i.lo.right(), remove_left_edge(i.hi)},
          left_border_length(i.hi) - 1};
}

}  // namespace tamari_lab
