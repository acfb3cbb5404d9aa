#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tamari_lab/plane_tree.hpp"
#include "tamari_lab/y_series.hpp"

namespace tamari_lab {

class Lab;

// Rooted tree without a planar structure: children form a multiset. The
// representation is canonical (children sorted by encoding), so equality and
// ordering are string comparisons on the cached encoding "(" + children + ")".
class RootedTree {
 public:
  RootedTree();  // the one-node tree
  explicit RootedTree(std::vector<RootedTree> children);

  const std::vector<RootedTree>& children() const { return impl_->children; }
  int node_count() const { return impl_->nodes; }
  const std::string& encoding() const { return impl_->enc; }

  friend bool operator==(const RootedTree& a, const RootedTree& b) {
    return a.impl_ == b.impl_ || a.impl_->enc == b.impl_->enc;
  }

 private:
  struct Impl {
    std::vector<RootedTree> children;
    std::string enc;
    int nodes;
  };
  std::shared_ptr<const Impl> impl_;
};

struct RootedTreeLess {
  bool operator()(const RootedTree& a, const RootedTree& b) const {
    if (a.node_count() != b.node_count())
      return a.node_count() < b.node_count();
    return a.encoding() < b.encoding();
  }
};

// All rooted trees with the given node count, each exactly once, ordered by
// (node_count, encoding) recursively. Counts 1, 1, 2, 4, 9, 20, 48, ...
const std::vector<RootedTree>& enumerate_rooted_trees(int nodes);

// Order of the automorphism group: the product over all nodes and over the
// isomorphism classes of their children of (multiplicity)!.
mpz_class aut_order(const RootedTree& a);

// Shape of a plane tree: its internal nodes with the planar structure
// forgotten; the shape's root is the internal node carrying the plane tree's
// root. Needs at least one internal node.
RootedTree shape(const PlaneTree& t);

// Rational formal sum of rooted trees, truncated by node count.
class RootedTreeSeries {
 public:
  using Terms = std::map<RootedTree, mpq_class, RootedTreeLess>;

  explicit RootedTreeSeries(int max_nodes) : max_nodes_(max_nodes) {}

  int max_nodes() const { return max_nodes_; }
  const Terms& terms() const { return terms_; }
  mpq_class coeff(const RootedTree& t) const;
  void add(const RootedTree& t, const mpq_class& c);

  friend RootedTreeSeries operator+(const RootedTreeSeries& a,
                                    const RootedTreeSeries& b);
  friend RootedTreeSeries operator-(const RootedTreeSeries& a,
                                    const RootedTreeSeries& b);
  friend RootedTreeSeries operator*(const mpq_class& c,
                                    const RootedTreeSeries& a);

 private:
  int max_nodes_;
  Terms terms_;
};

bool equal_through(const RootedTreeSeries& a, const RootedTreeSeries& b,
                   int through);

// A <- B: sum over the nodes of A of "attach B's root below that node".
// Isomorphic results merge their multiplicities.
RootedTreeSeries graft_product(const RootedTree& a, const RootedTree& b);
RootedTreeSeries graft_product(const RootedTreeSeries& a,
                               const RootedTreeSeries& b);

// U_k: sum over all A with k nodes of (k-1)!/aut_order(A) * A.
RootedTreeSeries u_term(int k);

// U_{k+1} = sum over l of binom(k-1, l-1) U_l <- U_{k+1-l} for k+1 <= count.
bool check_u_recurrence(int count);
// Same recurrence over given terms; u[i] plays U_{i+1}.
bool check_u_recurrence_with(const std::vector<RootedTreeSeries>& u);

// nu_A(f): the one-node tree maps to f, and a root with children A_1..A_k
// maps to nu_{A_1}(f) ... nu_{A_k}(f) * f^(k). Trusted orders propagate.
YSeries nu_functional(const RootedTree& a, const YSeries& f);

// alpha_1 = nu, alpha_{k+1} = sum over l of binom(k-1, l-1) alpha_l' *
// alpha_{k+1-l}; results are capped at nu's order. Returns alpha_1..alpha_count.
std::vector<YSeries> alpha_list(int count, const YSeries& nu);
YSeries alpha(int k, const YSeries& nu);

// psi = sum over k >= 0 of alpha_{k+1} / k!, exact through y^order since the
// dropped terms have valuation k + 2 > order.
bool check_psi_sum(int order, Lab& lab);
bool check_psi_sum_with(const YSeries& nu, const YSeries& psi);

// For Psi = sum over k of alpha_{k+1} z^k / k!: the algebraic equation in
// (y, z), the PDE dPsi/dz = (dPsi/dy) Psi, Psi at z=1 equal to psi (trusted
// through y^(z_order + 2)), and Psi at z=0 equal to nu.
bool check_Psi_equation(int order, int z_order, Lab& lab);
bool check_Psi_equation_with(const YSeries& nu, const YSeries& psi,
                             int z_order);

}  // namespace tamari_lab
