#pragma once

#include "tamari_lab/tree_series.hpp"
#include "tamari_lab/xy_poly.hpp"

namespace tamari_lab {

class Lab;

// Interval generating series keyed by the upper tree: the coefficient of T is
// the number of intervals [S, T]. Starts Y + 2*((..).)  + (.(..)) + ...
TreeSeries bold_Phi(int max_size, Lab& lab);

// Same sum restricted to indecomposable intervals (those whose lower tree is
// /-indecomposable). Starts Y + ((..).) + (.(..)) + ...
TreeSeries bold_Theta(int max_size, Lab& lab);

// Sum over all tree pairs, including leaves, of (-1)^(t1+t2) (t1+1) T1 v T2
// where t_i counts internal nodes. Starts Y - 2*((..).) - (.(..)) + ...
TreeSeries delta_series(int max_size);

// Bilinear extensions of / and *; the trusted truncation of the result is
// min(a.max + val(b), b.max + val(a)), as for power series products.
TreeSeries series_slash(const TreeSeries& a, const TreeSeries& b);
TreeSeries series_star(const TreeSeries& a, const TreeSeries& b, Lab& lab);

// The three functional identities tying the interval series together:
//   Phi = Theta + Phi/Theta,
//   Theta = Y + Y*Phi,
//   Phi = Y + Phi/Y + Y*Phi + Phi/(Y*Phi),
// each compared through min(Phi.max_size, Theta.max_size).
bool check_relaF(int max_size, Lab& lab);
bool check_relaF_with(const TreeSeries& Phi, const TreeSeries& Theta,
                      Lab& lab);

// T -> x^L(T) y^|T|: sends the tree series onto the (x, y) interval series,
// e.g. bold_Phi onto the two-variable interval count series.
XYPoly project_to_xy(const TreeSeries& s);

}  // namespace tamari_lab
