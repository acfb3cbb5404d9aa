#include "tamari_lab/new_intervals.hpp"

#include <algorithm>

#include "tamari_lab/census.hpp"
#include "tamari_lab/errors.hpp"
#include "tamari_lab/lab.hpp"
#include "tamari_lab/rational.hpp"

namespace tamari_lab {

namespace {

struct SpanEntry {
  int lo;
  int hi;
  BinaryTree subtree;
};

void collect_spans(const BinaryTree& t, int offset,
                   std::vector<SpanEntry>& out) {
  if (t.is_leaf()) return;
  out.push_back({offset, offset + t.size(), t});
  collect_spans(t.left(), offset, out);
  collect_spans(t.right(), offset + t.left().size() + 1, out);
}

std::vector<SpanEntry> span_entries(const BinaryTree& t) {
  std::vector<SpanEntry> out;
  collect_spans(t, 0, out);
  std::sort(out.begin(), out.end(), [](const SpanEntry& a, const SpanEntry& b) {
    return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
  });
  return out;
}

// t with the node spanning [a, b] replaced by a leaf; (a, b) must be a node
// span of t. `offset` is the leaf index where t starts.
BinaryTree replace_span(const BinaryTree& t, int offset, int a, int b) {
  if (offset == a && offset + t.size() == b) return BinaryTree::leaf();
  int left_end = offset + t.left().size();
  if (b <= left_end)
    return BinaryTree::node(replace_span(t.left(), offset, a, b), t.right());
  return BinaryTree::node(t.left(),
                          replace_span(t.right(), left_end + 1, a, b));
}

// Subtree of t spanning exactly [a, b].
BinaryTree subtree_at(const BinaryTree& t, int offset, int a, int b) {
  if (offset == a && offset + t.size() == b) return t;
  int left_end = offset + t.left().size();
  if (b <= left_end) return subtree_at(t.left(), offset, a, b);
  return subtree_at(t.right(), left_end + 1, a, b);
}

// t with every range in `ranges` (disjoint node spans, absolute coordinates)
// contracted to a leaf.
BinaryTree contract_ranges(const BinaryTree& t, int offset,
                           const std::vector<std::pair<int, int>>& ranges) {
  if (t.is_leaf()) return t;
  std::pair<int, int> own{offset, offset + t.size()};
  if (std::binary_search(ranges.begin(), ranges.end(), own))
    return BinaryTree::leaf();
  int left_end = offset + t.left().size();
  return BinaryTree::node(contract_ranges(t.left(), offset, ranges),
                          contract_ranges(t.right(), left_end + 1, ranges));
}

}  // namespace

std::vector<std::pair<int, int>> node_spans(const BinaryTree& t) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : span_entries(t)) out.emplace_back(e.lo, e.hi);
  return out;
}

BinaryTree subtree_spanning(const BinaryTree& t, int a, int b) {
  return subtree_at(t, 0, a, b);
}

BinaryTree contract_span(const BinaryTree& t, int a, int b) {
  return replace_span(t, 0, a, b);
}

std::vector<Cut> find_cuts(const Interval& i, Lab& lab) {
  const int n = i.size();
  auto lo_spans = span_entries(i.lo);
  auto hi_spans = span_entries(i.hi);
  std::vector<Cut> cuts;
  std::size_t a = 0, b = 0;
  while (a < lo_spans.size() && b < hi_spans.size()) {
    const SpanEntry& sl = lo_spans[a];
    const SpanEntry& sh = hi_spans[b];
    if (sl.lo != sh.lo || sl.hi != sh.hi) {
      if (sl.lo != sh.lo ? sl.lo < sh.lo : sl.hi < sh.hi)
        ++a;
      else
        ++b;
      continue;
    }
    ++a, ++b;
    int width = sl.hi - sl.lo;
    if (width == n) continue;  // the shared root span is not a cut
    const TamariPoset& sub_poset = lab.poset(width);
    if (!sub_poset.leq(sub_poset.index_of(sl.subtree),
                       sub_poset.index_of(sh.subtree)))
      continue;
    BinaryTree q_lo = replace_span(i.lo, 0, sl.lo, sl.hi);
    BinaryTree q_hi = replace_span(i.hi, 0, sh.lo, sh.hi);
    const TamariPoset& quot_poset = lab.poset(n - width);
    if (!quot_poset.leq(quot_poset.index_of(q_lo), quot_poset.index_of(q_hi)))
      continue;
    cuts.push_back(Cut{sl.lo, sl.hi});
  }
  return cuts;
}

bool is_new(const Interval& i, Lab& lab) { return find_cuts(i, lab).empty(); }

namespace {

struct CutForest {
  std::vector<Cut> cuts;                  // sorted
  std::vector<std::vector<int>> children; // per cut, indices of maximal cuts inside
  std::vector<int> roots;                 // maximal cuts overall
};

CutForest build_forest(std::vector<Cut> cuts) {
  // Sort outer-first so a stack walk recovers the containment forest.
  std::sort(cuts.begin(), cuts.end(), [](const Cut& x, const Cut& y) {
    return x.leaf_lo != y.leaf_lo ? x.leaf_lo < y.leaf_lo
                                  : x.leaf_hi > y.leaf_hi;
  });
  CutForest f;
  f.cuts = cuts;
  f.children.resize(cuts.size());
  std::vector<int> stack;
  for (int c = 0; c < static_cast<int>(cuts.size()); ++c) {
    while (!stack.empty() && cuts[stack.back()].leaf_hi < cuts[c].leaf_lo)
      stack.pop_back();
    if (!stack.empty()) {
      const Cut& top = cuts[stack.back()];
      if (!(top.leaf_lo <= cuts[c].leaf_lo && cuts[c].leaf_hi <= top.leaf_hi))
        throw InternalError("cut family is not laminar");
      f.children[stack.back()].push_back(c);
    } else {
      f.roots.push_back(c);
    }
    stack.push_back(c);
  }
  return f;
}

struct DecoupageBuilder {
  const Interval& whole;
  const CutForest& forest;
  Lab& lab;
  Decoupage out;

  // Assembles the skeleton node for the range [a, b] whose maximal sub-cuts
  // are `kids`, records its piece under `path`, and returns the node.
  PlaneTree assemble(int a, int b, const std::vector<int>& kids,
                     std::vector<int>& path) {
    std::vector<std::pair<int, int>> kid_ranges;
    kid_ranges.reserve(kids.size());
    for (int k : kids)
      kid_ranges.emplace_back(forest.cuts[k].leaf_lo, forest.cuts[k].leaf_hi);

    BinaryTree piece_lo =
        contract_ranges(subtree_at(whole.lo, 0, a, b), a, kid_ranges);
    BinaryTree piece_hi =
        contract_ranges(subtree_at(whole.hi, 0, a, b), a, kid_ranges);
    if (!tamari_leq(piece_lo, piece_hi, lab))
      throw InternalError("decoupage produced a non-interval piece");
    out.pieces.emplace(path, Interval{piece_lo, piece_hi});

    PlaneTree node;
    int pos = a;
    for (std::size_t k = 0; k < kids.size(); ++k) {
      auto [ca, cb] = kid_ranges[k];
      for (; pos < ca; ++pos) node.children.push_back(PlaneTree{});
      path.push_back(static_cast<int>(node.children.size()));
      node.children.push_back(
          assemble(ca, cb, forest.children[kids[k]], path));
      path.pop_back();
      pos = cb + 1;
    }
    for (; pos <= b; ++pos) node.children.push_back(PlaneTree{});
    return node;
  }
};

BinaryTree substitute_leaves(const BinaryTree& t,
                             const std::vector<BinaryTree>& reps,
                             std::size_t& next) {
  if (t.is_leaf()) return reps[next++];
  BinaryTree left = substitute_leaves(t.left(), reps, next);
  BinaryTree right = substitute_leaves(t.right(), reps, next);
  return BinaryTree::node(left, right);
}

std::pair<BinaryTree, BinaryTree> graft_node(
    const PlaneTree& node, const std::map<std::vector<int>, Interval>& pieces,
    std::vector<int>& path) {
  auto it = pieces.find(path);
  if (it == pieces.end())
    throw SemanticError("missing piece for a skeleton node");
  const Interval& piece = it->second;
  const int arity = static_cast<int>(node.children.size());
  if (arity < 2) throw SemanticError("skeleton node with fewer than 2 children");
  if (piece.size() != arity - 1)
    throw SemanticError("piece size does not match skeleton arity");
  std::vector<BinaryTree> lo_reps, hi_reps;
  lo_reps.reserve(node.children.size());
  hi_reps.reserve(node.children.size());
  for (int c = 0; c < arity; ++c) {
    if (node.children[c].is_leaf()) {
      lo_reps.push_back(BinaryTree::leaf());
      hi_reps.push_back(BinaryTree::leaf());
    } else {
      path.push_back(c);
      auto [sub_lo, sub_hi] = graft_node(node.children[c], pieces, path);
      path.pop_back();
      lo_reps.push_back(sub_lo);
      hi_reps.push_back(sub_hi);
    }
  }
  std::size_t next = 0;
  BinaryTree lo = substitute_leaves(piece.lo, lo_reps, next);
  next = 0;
  BinaryTree hi = substitute_leaves(piece.hi, hi_reps, next);
  return {lo, hi};
}

}  // namespace

Interval graft(const PlaneTree& skeleton,
               const std::map<std::vector<int>, Interval>& pieces, Lab& lab) {
  if (skeleton.is_leaf())
    throw SemanticError("skeleton must have an internal root");
  std::vector<int> path;
  auto [lo, hi] = graft_node(skeleton, pieces, path);
  std::size_t internal = static_cast<std::size_t>(skeleton.internal_count());
  if (pieces.size() != internal)
    throw SemanticError("pieces do not match the skeleton's internal nodes");
  return make_interval(lo, hi, lab);
}

Interval graft(const Decoupage& d, Lab& lab) {
  return graft(d.skeleton, d.pieces, lab);
}

Decoupage decoupage(const Interval& i, Lab& lab) {
  CutForest forest = build_forest(find_cuts(i, lab));
  DecoupageBuilder builder{i, forest, lab, Decoupage{}};
  std::vector<int> path;
  builder.out.skeleton = builder.assemble(0, i.size(), forest.roots, path);
  return std::move(builder.out);
}

std::uint64_t count_new(int n, Lab& lab) { return lab.census(n).new_total; }

mpz_class closed_new_count(int n) {
  if (n < 2) throw SemanticError("closed form for new intervals needs n >= 2");
  mpz_class num = 3 * factorial(2 * n - 2);
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), n - 2);
  return num / (factorial(n - 1) * factorial(n + 1));
}

}  // namespace tamari_lab
