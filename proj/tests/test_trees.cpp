#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>
#include <vector>

#include "tamari_lab/binary_tree.hpp"
#include "tamari_lab/errors.hpp"
#include "tamari_lab/plane_tree.hpp"

using namespace tamari_lab;

namespace {

const BinaryTree kLeaf = BinaryTree::leaf();
const BinaryTree kY = BinaryTree::node(kLeaf, kLeaf);
const BinaryTree kDroite = BinaryTree::node(kLeaf, kY);  // (.(..))
const BinaryTree kGauche = BinaryTree::node(kY, kLeaf);  // ((..).)

std::size_t parse_failure_offset(const std::string& text) {
  try {
    decode(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  FAIL("expected a parse error for ", text);
  return static_cast<std::size_t>(-1);
}

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

}  // namespace

TEST_CASE("encoding of the small trees") {
  CHECK(encode(kLeaf) == ".");
  CHECK(encode(kY) == "(..)");
  CHECK(encode(kDroite) == "(.(..))");
  CHECK(encode(kGauche) == "((..).)");
  CHECK(decode("(.(..))") == kDroite);
  CHECK(decode(".") == kLeaf);
}

TEST_CASE("decode(encode(t)) is the identity up to size 6") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& t : enumerate_binary_trees(n)) {
      CHECK(decode(encode(t)) == t);
      CHECK(t.size() == n);
      CHECK(t.leaf_count() == n + 1);
    }
}

TEST_CASE("parse errors carry the byte offset of the failure") {
  CHECK(parse_failure_offset("") == 0);
  CHECK(parse_failure_offset("x") == 0);
  CHECK(parse_failure_offset("(.") == 2);    // missing right subtree
  CHECK(parse_failure_offset("(..") == 3);   // missing ')'
  CHECK(parse_failure_offset("(..x") == 3);  // ')' expected
  CHECK(parse_failure_offset("(..).") == 4); // trailing characters
  CHECK(parse_failure_offset("((..)") == 5);
  CHECK(parse_failure_offset("(.z)") == 2);
  // base_offset shifts the reported position.
  try {
    decode("(.", 10);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 12);
  }
}

TEST_CASE("enumeration sizes are the Catalan numbers") {
  const std::vector<std::size_t> catalan = {1,  1,   2,   5,    14,   42,
                                            132, 429, 1430, 4862, 16796};
  for (int n = 0; n <= 10; ++n)
    CHECK(enumerate_binary_trees(n).size() == catalan[n]);
  CHECK(enumerate_binary_trees(0).front() == kLeaf);
  CHECK(enumerate_binary_trees(1).front() == kY);
  CHECK_THROWS_AS(enumerate_binary_trees(-1), SemanticError);
}

TEST_CASE("enumeration order is frozen: left subtree size ascending") {
  const auto& y3 = enumerate_binary_trees(3);
  REQUIRE(y3.size() == 5);
  CHECK(encode(y3[0]) == "(.(.(..)))");
  CHECK(encode(y3[1]) == "(.((..).))");
  CHECK(encode(y3[2]) == "((..)(..))");
  CHECK(encode(y3[3]) == "((.(..)).)");
  CHECK(encode(y3[4]) == "(((..).).)");
  for (int n = 1; n <= 6; ++n) {
    const auto& ts = enumerate_binary_trees(n);
    CHECK(ts.front() == right_comb(n));
    CHECK(ts.back() == left_comb(n));
    for (std::size_t i = 0; i + 1 < ts.size(); ++i)
      CHECK(ts[i].left().size() <= ts[i + 1].left().size());
  }
}

TEST_CASE("compare is the total order behind the enumeration") {
  CHECK(BinaryTree::compare(kY, kY) == 0);
  CHECK(BinaryTree::compare(kLeaf, kY) < 0);
  CHECK(BinaryTree::compare(kDroite, kGauche) < 0);  // smaller left subtree
  CHECK(BinaryTree::compare(kGauche, decode("(.(.(..)))")) < 0);  // size first
  // Same size: compare ranks trees exactly as the enumeration lists them.
  for (int n = 2; n <= 5; ++n) {
    const auto& ts = enumerate_binary_trees(n);
    for (std::size_t i = 0; i < ts.size(); ++i)
      for (std::size_t j = 0; j < ts.size(); ++j) {
        int structural = BinaryTree::compare(ts[i], ts[j]);
        CHECK((structural < 0) == (i < j));
        CHECK((structural == 0) == (i == j));
        CHECK(structural == -BinaryTree::compare(ts[j], ts[i]));
      }
  }
}

TEST_CASE("slash, backslash and vee on the small trees") {
  CHECK(slash(kY, kY) == kGauche);
  CHECK(backslash(kY, kY) == kDroite);
  CHECK(encode(slash(kDroite, kY)) == "((.(..)).)");
  CHECK(encode(backslash(kY, kGauche)) == "(.((..).))");
  CHECK(vee(kLeaf, kLeaf) == kY);
  CHECK(vee(kLeaf, kY) == kDroite);
  CHECK(vee(kY, kLeaf) == kGauche);
  CHECK(encode(vee(kY, kY)) == "((..)(..))");
}

TEST_CASE("the leaf is a unit for slash and backslash") {
  for (int n = 0; n <= 4; ++n)
    for (const auto& t : enumerate_binary_trees(n)) {
      CHECK(slash(kLeaf, t) == t);
      CHECK(slash(t, kLeaf) == t);
      CHECK(backslash(kLeaf, t) == t);
      CHECK(backslash(t, kLeaf) == t);
    }
}

TEST_CASE("slash and backslash are associative, total size <= 8") {
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; a + b <= 6; ++b)
      for (int c = 0; a + b + c <= 8; ++c)
        for (const auto& ta : enumerate_binary_trees(a))
          for (const auto& tb : enumerate_binary_trees(b))
            for (const auto& tc : enumerate_binary_trees(c)) {
              CHECK(slash(slash(ta, tb), tc) == slash(ta, slash(tb, tc)));
              CHECK(backslash(backslash(ta, tb), tc) ==
                    backslash(ta, backslash(tb, tc)));
            }
}

TEST_CASE("grafting sizes add; vee adds one") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (const auto& ta : enumerate_binary_trees(a))
        for (const auto& tb : enumerate_binary_trees(b)) {
          CHECK(slash(ta, tb).size() == a + b);
          CHECK(backslash(ta, tb).size() == a + b);
          CHECK(vee(ta, tb).size() == a + b + 1);
        }
}

TEST_CASE("left border length of the small trees") {
  CHECK(left_border_length(kY) == 2);
  CHECK(left_border_length(kGauche) == 3);
  CHECK(left_border_length(kDroite) == 2);
  CHECK(left_border_length(left_comb(5)) == 6);
  CHECK(left_border_length(right_comb(5)) == 2);
  CHECK_THROWS_AS(left_border_length(kLeaf), SemanticError);
}

TEST_CASE("left border length is additive under slash") {
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; a + b <= 5; ++b)
      for (const auto& ta : enumerate_binary_trees(a))
        for (const auto& tb : enumerate_binary_trees(b))
          CHECK(left_border_length(slash(ta, tb)) ==
                left_border_length(ta) + left_border_length(tb) - 1);
}

TEST_CASE("adding a left edge lands on the requested segment") {
  CHECK(add_left_edge(kLeaf, 1) == kY);
  CHECK(add_left_edge(kY, 1) == kDroite);
  CHECK(add_left_edge(kY, 2) == kGauche);
  for (int n = 0; n <= 5; ++n)
    for (const auto& t : enumerate_binary_trees(n)) {
      int border = t.is_leaf() ? 1 : left_border_length(t);
      for (int s = 1; s <= border; ++s) {
        BinaryTree grown = add_left_edge(t, s);
        CHECK(grown.size() == n + 1);
        CHECK(left_border_length(grown) == s + 1);
        CHECK(remove_left_edge(grown) == t);
      }
    }
}

TEST_CASE("removing then re-adding the deepest left edge is the identity") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& t : enumerate_binary_trees(n)) {
      BinaryTree shrunk = remove_left_edge(t);
      CHECK(shrunk.size() == n - 1);
      CHECK(add_left_edge(shrunk, left_border_length(t) - 1) == t);
    }
}

TEST_CASE("left edge operations reject out-of-range input") {
  CHECK_THROWS_AS(add_left_edge(kY, 0), SemanticError);
  CHECK_THROWS_AS(add_left_edge(kY, 3), SemanticError);
  CHECK_THROWS_AS(add_left_edge(kLeaf, 2), SemanticError);
  CHECK_THROWS_AS(remove_left_edge(kLeaf), SemanticError);
}

TEST_CASE("plane tree enumeration: little Schroeder counts, all valences >= 3") {
  const std::vector<std::size_t> schroeder = {1, 3, 11, 45, 197, 903};
  for (int n = 1; n <= 6; ++n) {
    const auto& ts = enumerate_plane_trees(n);
    CHECK(ts.size() == schroeder[n - 1]);
    std::set<std::string> seen;
    for (const auto& t : ts) {
      CHECK(valences_ok(t));
      CHECK(t.leaf_count() == n + 1);
      CHECK(seen.insert(encode(t)).second);  // pairwise distinct
    }
  }
}

TEST_CASE("plane tree encoding of the small skeletons") {
  const auto& p1 = enumerate_plane_trees(1);
  REQUIRE(p1.size() == 1);
  CHECK(encode(p1[0]) == "(..)");
  CHECK(p1[0].internal_count() == 1);
  std::set<std::string> p2;
  for (const auto& t : enumerate_plane_trees(2)) p2.insert(encode(t));
  CHECK(p2 == std::set<std::string>{"(...)", "((..).)", "(.(..))"});
}
