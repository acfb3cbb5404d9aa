#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "tamari_lab/binary_tree.hpp"
#include "tamari_lab/dendriform.hpp"
#include "tamari_lab/errors.hpp"
#include "tamari_lab/lab.hpp"
#include "tamari_lab/tamari.hpp"

using namespace tamari_lab;

namespace {

const BinaryTree kLeaf = BinaryTree::leaf();
const BinaryTree kY = BinaryTree::node(kLeaf, kLeaf);
const BinaryTree kDroite = backslash(kY, kY);
const BinaryTree kGauche = slash(kY, kY);

BinaryTree right_comb(int n) {
  BinaryTree t;
  for (int i = 0; i < n; ++i) t = BinaryTree::node(kLeaf, t);
  return t;
}

BinaryTree left_comb(int n) {
  BinaryTree t;
  for (int i = 0; i < n; ++i) t = BinaryTree::node(t, kLeaf);
  return t;
}

// Independent oracle for the order: breadth-first closure of single
// rotations, touching nothing of TamariPoset's reachability tables.
std::set<std::string> upward_closure(const BinaryTree& t) {
  std::set<std::string> seen{encode(t)};
  std::vector<BinaryTree> frontier{t};
  while (!frontier.empty()) {
    std::vector<BinaryTree> next;
    for (const auto& cur : frontier)
      for (const auto& up : rotations_up(cur))
        if (seen.insert(encode(up)).second) next.push_back(up);
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

TEST_CASE("rotations from the small trees") {
  CHECK(rotations_up(kLeaf).empty());
  CHECK(rotations_up(kY).empty());
  auto from_droite = rotations_up(kDroite);
  REQUIRE(from_droite.size() == 1);
  CHECK(from_droite[0] == kGauche);
  CHECK(rotations_up(kGauche).empty());
  CHECK(rotations_up(right_comb(3)).size() == 2);
}

TEST_CASE("every rotation goes strictly up") {
  Lab lab;
  for (int n = 2; n <= 5; ++n)
    for (const auto& t : enumerate_binary_trees(n))
      for (const auto& r : rotations_up(t)) {
        CHECK(r.size() == n);
        CHECK(r != t);
        CHECK(tamari_leq(t, r, lab));
        CHECK_FALSE(tamari_leq(r, t, lab));
      }
}

TEST_CASE("order predicate on the two-node lattice") {
  Lab lab;
  CHECK(tamari_leq(kDroite, kDroite, lab));
  CHECK(tamari_leq(kDroite, kGauche, lab));
  CHECK_FALSE(tamari_leq(kGauche, kDroite, lab));
  CHECK_THROWS_AS(tamari_leq(kY, kGauche, lab), SemanticError);
}

TEST_CASE("poset sizes and order pair counts") {
  Lab lab;
  CHECK(lab.poset(1).element_count() == 1);
  CHECK(lab.poset(1).interval_count() == 1);
  CHECK(lab.poset(3).element_count() == 5);
  CHECK(lab.poset(3).interval_count() == 13);
  CHECK(lab.poset(4).element_count() == 14);
  CHECK(lab.poset(4).interval_count() == 68);
  CHECK_THROWS_AS(TamariPoset::build(0), SemanticError);
}

TEST_CASE("the five-element poset is the pentagon") {
  Lab lab;
  const TamariPoset& p = lab.poset(3);
  std::size_t cover_count = 0;
  for (const auto& succ : p.up_covers()) cover_count += succ.size();
  CHECK(cover_count == 5);
}

TEST_CASE("poset order agrees with the rotation closure, n <= 6") {
  Lab lab;
  for (int n = 1; n <= 6; ++n) {
    const TamariPoset& p = lab.poset(n);
    for (int a = 0; a < p.element_count(); ++a) {
      auto reachable = upward_closure(p.element(a));
      std::size_t up_size = 0;
      for (int b = 0; b < p.element_count(); ++b)
        if (p.leq(a, b)) {
          ++up_size;
          CHECK(reachable.count(encode(p.element(b))) == 1);
        }
      CHECK(up_size == reachable.size());
    }
  }
}

TEST_CASE("the order is reflexive, antisymmetric and transitive, n <= 6") {
  Lab lab;
  for (int n = 1; n <= 6; ++n) {
    const TamariPoset& p = lab.poset(n);
    const int m = p.element_count();
    for (int a = 0; a < m; ++a) {
      CHECK(p.leq(a, a));
      p.for_each_geq(a, [&](int b) {
        if (b != a) CHECK_FALSE(p.leq(b, a));
        p.for_each_geq(b, [&](int c) { CHECK(p.leq(a, c)); });
      });
    }
  }
}

TEST_CASE("unique extremes: right comb at the bottom, left comb at the top") {
  Lab lab;
  for (int n = 1; n <= 6; ++n) {
    const TamariPoset& p = lab.poset(n);
    int bottom = p.index_of(right_comb(n));
    int top = p.index_of(left_comb(n));
    for (int a = 0; a < p.element_count(); ++a) {
      CHECK(p.leq(bottom, a));
      CHECK(p.leq(a, top));
    }
  }
}

TEST_CASE("every pair has a least upper and a greatest lower bound, n <= 5") {
  Lab lab;
  for (int n = 1; n <= 5; ++n) {
    const TamariPoset& p = lab.poset(n);
    const int m = p.element_count();
    for (int a = 0; a < m; ++a)
      for (int b = a; b < m; ++b) {
        std::vector<int> uppers, lowers;
        for (int u = 0; u < m; ++u) {
          if (p.leq(a, u) && p.leq(b, u)) uppers.push_back(u);
          if (p.leq(u, a) && p.leq(u, b)) lowers.push_back(u);
        }
        int join_candidates = 0, meet_candidates = 0;
        for (int u : uppers) {
          bool minimal = true;
          for (int v : uppers)
            if (v != u && p.leq(v, u)) minimal = false;
          if (minimal) ++join_candidates;
        }
        for (int u : lowers) {
          bool maximal = true;
          for (int v : lowers)
            if (v != u && p.leq(u, v)) maximal = false;
          if (maximal) ++meet_candidates;
        }
        CHECK(join_candidates == 1);
        CHECK(meet_candidates == 1);
      }
  }
}

TEST_CASE("star of the small trees") {
  Lab lab;
  TreeSeries yy = star_trees(kY, kY, lab);
  CHECK(yy.terms().size() == 2);
  CHECK(yy.coeff(kDroite) == 1);
  CHECK(yy.coeff(kGauche) == 1);

  TreeSeries yg = star_trees(kY, kGauche, lab);
  REQUIRE(yg.terms().size() == 3);
  CHECK(yg.coeff(decode("(.((..).))")) == 1);
  CHECK(yg.coeff(decode("((.(..)).)")) == 1);
  CHECK(yg.coeff(decode("(((..).).)")) == 1);

  for (const auto& t : enumerate_binary_trees(3)) {
    TreeSeries left_unit = star_trees(kLeaf, t, lab);
    TreeSeries right_unit = star_trees(t, kLeaf, lab);
    CHECK(left_unit.terms().size() == 1);
    CHECK(left_unit.coeff(t) == 1);
    CHECK(right_unit.terms().size() == 1);
    CHECK(right_unit.coeff(t) == 1);
  }
}

TEST_CASE("star spans exactly the interval between backslash and slash") {
  Lab lab;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; a + b <= 5; ++b)
      for (const auto& s : enumerate_binary_trees(a))
        for (const auto& t : enumerate_binary_trees(b)) {
          TreeSeries st = star_trees(s, t, lab);
          const TamariPoset& p = lab.poset(a + b);
          for (const auto& u : p.elements()) {
            bool inside = tamari_leq(backslash(s, t), u, lab) &&
                          tamari_leq(u, slash(s, t), lab);
            CHECK(st.coeff(u) == (inside ? 1 : 0));
          }
        }
}

TEST_CASE("star is associative for total sizes <= 5") {
  Lab lab;
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; a + b <= 5; ++b)
      for (int c = 0; a + b + c <= 5; ++c)
        for (const auto& s : enumerate_binary_trees(a))
          for (const auto& t : enumerate_binary_trees(b))
            for (const auto& u : enumerate_binary_trees(c)) {
              const int total = a + b + c;
              TreeSeries su = TreeSeries::single(u, c);
              TreeSeries ss = TreeSeries::single(s, a);
              TreeSeries lhs = series_star(star_trees(s, t, lab), su, lab);
              TreeSeries rhs = series_star(ss, star_trees(t, u, lab), lab);
              CHECK(equal_through(lhs, rhs, total));
            }
}

TEST_CASE("left star by the one-node tree adds one left edge per segment") {
  Lab lab;
  for (int n = 1; n <= 5; ++n)
    for (const auto& t : enumerate_binary_trees(n)) {
      TreeSeries expected(n + 1);
      for (int s = 1; s <= left_border_length(t); ++s)
        expected.add(add_left_edge(t, s), 1);
      TreeSeries got = star_trees(kY, t, lab);
      CHECK(equal_through(got, expected, n + 1));
    }
}
