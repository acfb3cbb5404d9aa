#pragma once

#include <vector>

#include <gmpxx.h>

#include "tamari_lab/y_series.hpp"

namespace tamari_lab {

// Series in y with polynomial coefficients in x, truncated at a trusted
// y-order like YSeries. Row k holds the x-polynomial at y^k with trailing
// zeros trimmed; x-degrees are never truncated.
class XYPoly {
 public:
  explicit XYPoly(int order);
  static XYPoly monomial(const mpq_class& c, int x_deg, int y_deg, int order);
  static XYPoly one(int order) { return monomial(1, 0, 0, order); }
  static XYPoly from_y_series(const YSeries& s);

  int order() const { return order_; }
  int y_valuation() const;  // order() + 1 when zero
  bool is_zero() const { return y_valuation() > order_; }

  const std::vector<mpq_class>& row(int k) const;
  mpq_class coeff(int y_deg, int x_deg) const;
  void set_coeff(int y_deg, int x_deg, const mpq_class& v);

  XYPoly truncated(int new_order) const;
  XYPoly dx() const;          // no loss of trusted y-order
  YSeries at_x1() const;      // substitute x = 1
  int max_x_degree() const;

  // Quotient by x^power; false when some row is not divisible.
  bool divide_by_x(int power, XYPoly& out) const;
  // Quotient by (x - 1); false when some row has a nonzero remainder.
  bool divide_by_x_minus_1(XYPoly& out) const;

  friend XYPoly operator+(const XYPoly& a, const XYPoly& b);
  friend XYPoly operator-(const XYPoly& a, const XYPoly& b);
  friend XYPoly operator*(const XYPoly& a, const XYPoly& b);
  friend XYPoly operator*(const mpq_class& c, const XYPoly& a);

 private:
  void trim(int k);

  int order_;
  std::vector<std::vector<mpq_class>> rows_;  // size order_ + 1
};

bool equal_through(const XYPoly& a, const XYPoly& b, int through);

}  // namespace tamari_lab
