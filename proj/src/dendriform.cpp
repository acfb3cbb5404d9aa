#include "tamari_lab/dendriform.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "tamari_lab/errors.hpp"
#include "tamari_lab/interval.hpp"
#include "tamari_lab/lab.hpp"
#include "tamari_lab/tamari.hpp"

namespace tamari_lab {

namespace {

// Smallest term size, max_size + 1 for the zero series; plays the role of the
// valuation when propagating trusted truncations through products.
int size_valuation(const TreeSeries& a) {
  if (a.terms().empty()) return a.max_size() + 1;
  return a.terms().begin()->first.size();
}

template <typename Keep>
TreeSeries down_counts(int max_size, Lab& lab, Keep&& keep) {
  if (max_size < 1) throw SemanticError("need max size at least 1");
  TreeSeries out(max_size);
  for (int n = 1; n <= max_size; ++n) {
    const TamariPoset& p = lab.poset(n);
    std::vector<std::int64_t> counts(p.element_count(), 0);
    for (int s = 0; s < p.element_count(); ++s) {
      if (!keep(p.element(s))) continue;
      p.for_each_geq(s, [&](int u) { ++counts[u]; });
    }
    for (int u = 0; u < p.element_count(); ++u)
      out.add(p.element(u), counts[u]);
  }
  return out;
}

}  // namespace

TreeSeries bold_Phi(int max_size, Lab& lab) {
  return down_counts(max_size, lab, [](const BinaryTree&) { return true; });
}

TreeSeries bold_Theta(int max_size, Lab& lab) {
  return down_counts(max_size, lab,
                     [](const BinaryTree& s) { return is_indecomposable(s); });
}

TreeSeries delta_series(int max_size) {
  if (max_size < 1) throw SemanticError("need max size at least 1");
  TreeSeries out(max_size);
  for (int t1 = 0; t1 < max_size; ++t1)
    for (int t2 = 0; t1 + t2 < max_size; ++t2) {
      std::int64_t c = ((t1 + t2) % 2 ? -1 : 1) * (t1 + 1);
      for (const BinaryTree& a : enumerate_binary_trees(t1))
        for (const BinaryTree& b : enumerate_binary_trees(t2))
          out.add(vee(a, b), c);
    }
  return out;
}

TreeSeries series_slash(const TreeSeries& a, const TreeSeries& b) {
  int trusted = std::min(a.max_size() + size_valuation(b),
                         b.max_size() + size_valuation(a));
  TreeSeries out(trusted);
  for (const auto& [s, cs] : a.terms())
    for (const auto& [t, ct] : b.terms()) {
      if (s.size() + t.size() > trusted) continue;
      out.add(slash(s, t), cs * ct);
    }
  return out;
}

TreeSeries series_star(const TreeSeries& a, const TreeSeries& b, Lab& lab) {
  int trusted = std::min(a.max_size() + size_valuation(b),
                         b.max_size() + size_valuation(a));
  TreeSeries out(trusted);
  for (const auto& [s, cs] : a.terms())
    for (const auto& [t, ct] : b.terms()) {
      if (s.size() + t.size() > trusted) continue;
      const TreeSeries sum = star_trees(s, t, lab);
      std::int64_t c = cs * ct;
      for (const auto& [u, cu] : sum.terms()) out.add(u, c * cu);
    }
  return out;
}

bool check_relaF_with(const TreeSeries& Phi, const TreeSeries& Theta,
                      Lab& lab) {
  int d = std::min(Phi.max_size(), Theta.max_size());
  BinaryTree leaf;
  TreeSeries y = TreeSeries::single(BinaryTree::node(leaf, leaf), d);

  if (!equal_through(Phi, Theta + series_slash(Phi, Theta), d)) return false;

  TreeSeries y_star_phi = series_star(y, Phi, lab);
  if (!equal_through(Theta, y + y_star_phi, d)) return false;

  TreeSeries rhs =
      y + series_slash(Phi, y) + y_star_phi + series_slash(Phi, y_star_phi);
  return equal_through(Phi, rhs, d);
}

bool check_relaF(int max_size, Lab& lab) {
  return check_relaF_with(bold_Phi(max_size, lab), bold_Theta(max_size, lab),
                          lab);
}

XYPoly project_to_xy(const TreeSeries& s) {
  XYPoly out(s.max_size());
  for (const auto& [t, c] : s.terms()) {
    int x_deg = left_border_length(t);
    out.set_coeff(t.size(), x_deg,
                  out.coeff(t.size(), x_deg) + mpq_class(static_cast<long>(c)));
  }
  return out;
}

}  // namespace tamari_lab
