#include "tamari_lab/prelie.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include "tamari_lab/errors.hpp"
#include "tamari_lab/lab.hpp"
#include "tamari_lab/rational.hpp"
#include "tamari_lab/series.hpp"

namespace tamari_lab {

RootedTree::RootedTree() {
  auto impl = std::make_shared<Impl>();
  impl->enc = "()";
  impl->nodes = 1;
  impl_ = std::move(impl);
}

RootedTree::RootedTree(std::vector<RootedTree> children) {
  std::sort(children.begin(), children.end(), RootedTreeLess{});
  auto impl = std::make_shared<Impl>();
  impl->enc = "(";
  impl->nodes = 1;
  for (const RootedTree& c : children) {
    impl->enc += c.encoding();
    impl->nodes += c.node_count();
  }
  impl->enc += ")";
  impl->children = std::move(children);
  impl_ = std::move(impl);
}

namespace {

// Chooses a non-decreasing sequence from the pool (sorted by size then
// encoding) whose sizes sum to `remaining`; every child multiset shows up
// exactly once.
void choose_children(const std::vector<RootedTree>& pool, int remaining,
                     std::size_t min_index, std::vector<RootedTree>& partial,
                     std::vector<RootedTree>& out) {
  if (remaining == 0) {
    out.push_back(RootedTree(partial));
    return;
  }
  for (std::size_t i = min_index; i < pool.size(); ++i) {
    if (pool[i].node_count() > remaining) break;
    partial.push_back(pool[i]);
    choose_children(pool, remaining - pool[i].node_count(), i, partial, out);
    partial.pop_back();
  }
}

}  // namespace

const std::vector<RootedTree>& enumerate_rooted_trees(int nodes) {
  if (nodes < 1) throw SemanticError("rooted trees need at least one node");
  static std::mutex mutex;
  static std::map<int, std::vector<RootedTree>> cache;
  {
    std::scoped_lock lock(mutex);
    auto it = cache.find(nodes);
    if (it != cache.end()) return it->second;
  }
  std::vector<RootedTree> result;
  if (nodes == 1) {
    result.push_back(RootedTree());
  } else {
    std::vector<RootedTree> pool;
    for (int m = 1; m < nodes; ++m) {
      const auto& level = enumerate_rooted_trees(m);
      pool.insert(pool.end(), level.begin(), level.end());
    }
    std::vector<RootedTree> partial;
    choose_children(pool, nodes - 1, 0, partial, result);
    std::sort(result.begin(), result.end(), RootedTreeLess{});
  }
  std::scoped_lock lock(mutex);
  return cache.try_emplace(nodes, std::move(result)).first->second;
}

mpz_class aut_order(const RootedTree& a) {
  mpz_class out = 1;
  const auto& kids = a.children();
  std::size_t i = 0;
  while (i < kids.size()) {
    std::size_t j = i;
    while (j < kids.size() && kids[j] == kids[i]) ++j;
    mpz_class sub = aut_order(kids[i]);
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), sub.get_mpz_t(),
               static_cast<unsigned long>(j - i));
    out *= factorial(j - i) * power;
    i = j;
  }
  return out;
}

RootedTree shape(const PlaneTree& t) {
  if (t.is_leaf()) throw SemanticError("a leaf has no shape");
  std::vector<RootedTree> kids;
  for (const PlaneTree& c : t.children)
    if (!c.is_leaf()) kids.push_back(shape(c));
  return RootedTree(std::move(kids));
}

mpq_class RootedTreeSeries::coeff(const RootedTree& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void RootedTreeSeries::add(const RootedTree& t, const mpq_class& c) {
  if (t.node_count() > max_nodes_ || c == 0) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {

// Smallest node count present, max_nodes + 1 for the zero series; the same
// role valuation() plays for YSeries when propagating trusted truncations.
int node_valuation(const RootedTreeSeries& a) {
  if (a.terms().empty()) return a.max_nodes() + 1;
  return a.terms().begin()->first.node_count();
}

}  // namespace

RootedTreeSeries operator+(const RootedTreeSeries& a,
                           const RootedTreeSeries& b) {
  RootedTreeSeries out(std::min(a.max_nodes(), b.max_nodes()));
  for (const auto& [t, c] : a.terms()) out.add(t, c);
  for (const auto& [t, c] : b.terms()) out.add(t, c);
  return out;
}

RootedTreeSeries operator-(const RootedTreeSeries& a,
                           const RootedTreeSeries& b) {
  RootedTreeSeries out(std::min(a.max_nodes(), b.max_nodes()));
  for (const auto& [t, c] : a.terms()) out.add(t, c);
  for (const auto& [t, c] : b.terms()) out.add(t, -c);
  return out;
}

RootedTreeSeries operator*(const mpq_class& c, const RootedTreeSeries& a) {
  RootedTreeSeries out(a.max_nodes());
  if (c == 0) return out;
  for (const auto& [t, v] : a.terms()) out.add(t, c * v);
  return out;
}

bool equal_through(const RootedTreeSeries& a, const RootedTreeSeries& b,
                   int through) {
  if (through > a.max_nodes() || through > b.max_nodes())
    throw InternalError("rooted tree series compared beyond truncation");
  for (const auto& [t, c] : a.terms())
    if (t.node_count() <= through && b.coeff(t) != c) return false;
  for (const auto& [t, c] : b.terms())
    if (t.node_count() <= through && a.coeff(t) != c) return false;
  return true;
}

namespace {

// All trees obtained by hanging b below one node of a, with repetitions.
void graft_everywhere(const RootedTree& a, const RootedTree& b,
                      std::vector<RootedTree>& out) {
  {
    std::vector<RootedTree> kids = a.children();
    kids.push_back(b);
    out.push_back(RootedTree(std::move(kids)));
  }
  const auto& kids = a.children();
  for (std::size_t i = 0; i < kids.size(); ++i) {
    std::vector<RootedTree> sub;
    graft_everywhere(kids[i], b, sub);
    for (RootedTree& v : sub) {
      std::vector<RootedTree> copy = kids;
      copy[i] = std::move(v);
      out.push_back(RootedTree(std::move(copy)));
    }
  }
}

}  // namespace

RootedTreeSeries graft_product(const RootedTree& a, const RootedTree& b) {
  RootedTreeSeries out(a.node_count() + b.node_count());
  std::vector<RootedTree> grafts;
  graft_everywhere(a, b, grafts);
  for (const RootedTree& g : grafts) out.add(g, 1);
  return out;
}

RootedTreeSeries graft_product(const RootedTreeSeries& a,
                               const RootedTreeSeries& b) {
  // A term of size m needs every split m = |A| + |B|, so the result is
  // trusted through min(max_a + val_b, max_b + val_a).
  int trusted = std::min(a.max_nodes() + node_valuation(b),
                         b.max_nodes() + node_valuation(a));
  RootedTreeSeries out(trusted);
  for (const auto& [ta, ca] : a.terms())
    for (const auto& [tb, cb] : b.terms()) {
      if (ta.node_count() + tb.node_count() > trusted) continue;
      std::vector<RootedTree> grafts;
      graft_everywhere(ta, tb, grafts);
      mpq_class c = ca * cb;
      for (const RootedTree& g : grafts) out.add(g, c);
    }
  return out;
}

RootedTreeSeries u_term(int k) {
  if (k < 1) throw SemanticError("u_term index starts at 1");
  RootedTreeSeries out(k);
  mpz_class num = factorial(static_cast<unsigned long>(k - 1));
  for (const RootedTree& a : enumerate_rooted_trees(k))
    out.add(a, rat(num, aut_order(a)));
  return out;
}

bool check_u_recurrence_with(const std::vector<RootedTreeSeries>& u) {
  for (std::size_t k = 1; k < u.size(); ++k) {
    // u[k] plays U_{k+1}.
    RootedTreeSeries rhs = graft_product(u[0], u[k - 1]);
    for (std::size_t l = 2; l <= k; ++l)
      rhs = rhs + mpq_class(binomial(k - 1, l - 1)) *
                      graft_product(u[l - 1], u[k - l]);
    if (!equal_through(rhs, u[k], static_cast<int>(k) + 1)) return false;
  }
  return true;
}

bool check_u_recurrence(int count) {
  if (count < 2) throw SemanticError("the recurrence starts at the second term");
  std::vector<RootedTreeSeries> u;
  u.reserve(count);
  for (int k = 1; k <= count; ++k) u.push_back(u_term(k));
  return check_u_recurrence_with(u);
}

YSeries nu_functional(const RootedTree& a, const YSeries& f) {
  YSeries out = f.derivative(static_cast<int>(a.children().size()));
  for (const RootedTree& c : a.children()) out = out * nu_functional(c, f);
  return out;
}

std::vector<YSeries> alpha_list(int count, const YSeries& nu) {
  if (count < 1) throw SemanticError("alpha index starts at 1");
  std::vector<YSeries> out;
  out.reserve(count);
  out.push_back(nu);
  for (int k = 1; k < count; ++k) {
    // alpha_{k+1}; the summands keep trusted order >= nu.order() because the
    // factors' valuations repay the derivative's lost order.
    YSeries next(nu.order());
    for (int l = 1; l <= k; ++l)
      next = next + mpq_class(binomial(k - 1, l - 1)) *
                        (out[l - 1].derivative() * out[k - l]);
    if (next.order() > nu.order()) next = next.truncated(nu.order());
    out.push_back(std::move(next));
  }
  return out;
}

YSeries alpha(int k, const YSeries& nu) {
  return alpha_list(k, nu).back();
}

bool check_psi_sum_with(const YSeries& nu, const YSeries& psi) {
  int through = std::min(nu.order(), psi.order());
  // alpha_{k+1} has valuation k + 2, so terms beyond k = through - 1 cannot
  // contribute through y^through.
  std::vector<YSeries> a = alpha_list(std::max(1, through), nu);
  YSeries sum(nu.order());
  mpq_class inv_factorial = 1;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k > 0) inv_factorial /= mpq_class(static_cast<long>(k));
    sum = sum + inv_factorial * a[k];
  }
  return equal_through(sum, psi, through);
}

bool check_psi_sum(int order, Lab& lab) {
  return check_psi_sum_with(compute_nu(order, lab), compute_psi(order, lab));
}

namespace {

// Series in z with YSeries coefficients; rows[k] goes with z^k and the row
// count is the trusted z-truncation.
using ZRows = std::vector<YSeries>;

ZRows z_mul(const ZRows& a, const ZRows& b) {
  std::size_t rows = std::min(a.size(), b.size());
  ZRows out;
  out.reserve(rows);
  for (std::size_t k = 0; k < rows; ++k) {
    YSeries row = a[0] * b[k];
    for (std::size_t i = 1; i <= k; ++i) row = row + a[i] * b[k - i];
    out.push_back(std::move(row));
  }
  return out;
}

ZRows z_add(const ZRows& a, const ZRows& b) {
  std::size_t rows = std::min(a.size(), b.size());
  ZRows out;
  out.reserve(rows);
  for (std::size_t k = 0; k < rows; ++k) out.push_back(a[k] + b[k]);
  return out;
}

struct PsiMonomial {
  int psi_power;
  int y_power;
  int z_power;
  long coeff;
};

// z^4 P^4 + (4zy - 8 + 11z) z^2 P^3
//   + (6z^2y^2 - z^2 + 33z^2y - 16zy + 16 - 12z) P^2
//   + (-8y^2 - 2zy + 1 + 4zy^3 - 12y + 33zy^2) P
//   + 11y^3 + y^4 - y^2 = 0
constexpr PsiMonomial kPsiEquation[] = {
    {4, 0, 4, 1},
    {3, 1, 3, 4},   {3, 0, 2, -8},  {3, 0, 3, 11},
    {2, 2, 2, 6},   {2, 0, 2, -1},  {2, 1, 2, 33},
    {2, 1, 1, -16}, {2, 0, 0, 16},  {2, 0, 1, -12},
    {1, 2, 0, -8},  {1, 1, 1, -2},  {1, 0, 0, 1},
    {1, 3, 1, 4},   {1, 1, 0, -12}, {1, 2, 1, 33},
    {0, 3, 0, 11},  {0, 4, 0, 1},   {0, 2, 0, -1},
};

}  // namespace

bool check_Psi_equation_with(const YSeries& nu, const YSeries& psi,
                             int z_order) {
  if (z_order < 1) throw SemanticError("need at least z order 1");
  const int n = nu.order();
  const int m = z_order;

  std::vector<YSeries> a = alpha_list(m + 1, nu);
  ZRows Psi;
  Psi.reserve(m + 1);
  mpq_class inv_factorial = 1;
  for (int k = 0; k <= m; ++k) {
    if (k > 0) inv_factorial /= mpq_class(static_cast<long>(k));
    Psi.push_back(inv_factorial * a[k]);
  }

  // (a) the algebraic equation, evaluated by Horner in Psi.
  std::vector<ZRows> coeffs(5, ZRows(m + 1, YSeries(n)));
  for (const PsiMonomial& mono : kPsiEquation) {
    if (mono.z_power > m || mono.y_power > n) continue;
    YSeries& row = coeffs[mono.psi_power][mono.z_power];
    row.set_coeff(mono.y_power, row.coeff(mono.y_power) + mono.coeff);
  }
  ZRows acc = coeffs[4];
  for (int p = 3; p >= 0; --p) acc = z_add(z_mul(acc, Psi), coeffs[p]);
  YSeries zero(n);
  for (const YSeries& row : acc)
    if (!equal_through(row, zero, n)) return false;

  // (b) dPsi/dz = (dPsi/dy) Psi, rows z^0..z^(m-1).
  ZRows dy;
  dy.reserve(Psi.size());
  for (const YSeries& row : Psi) dy.push_back(row.derivative());
  ZRows rhs = z_mul(dy, Psi);
  for (int k = 0; k + 1 <= m; ++k) {
    YSeries lhs = mpq_class(static_cast<long>(k + 1)) * Psi[k + 1];
    if (!equal_through(lhs, rhs[k], n)) return false;
  }

  // (c) z = 1 gives psi; the dropped alpha terms have valuation > m + 2.
  YSeries at_one = Psi[0];
  for (int k = 1; k <= m; ++k) at_one = at_one + Psi[k];
  int through = std::min(std::min(m + 2, n), psi.order());
  if (!equal_through(at_one, psi, through)) return false;

  // (d) z = 0 gives nu.
  return equal_through(Psi[0], nu, n);
}

bool check_Psi_equation(int order, int z_order, Lab& lab) {
  return check_Psi_equation_with(compute_nu(order, lab),
                                 compute_psi(order, lab), z_order);
}

}  // namespace tamari_lab
