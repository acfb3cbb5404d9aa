#pragma once

#include <vector>

#include <gmpxx.h>

namespace tamari_lab {

// Power series in y truncated at a trusted order: coefficients of y^0..y^order
// are exact rationals. Arithmetic propagates the trusted order; in particular
// differentiation loses one order and multiplication regains orders from the
// valuations, so checks can state exactly how far they are meaningful.
class YSeries {
 public:
  explicit YSeries(int order);
  static YSeries monomial(const mpq_class& c, int degree, int order);
  static YSeries one(int order) { return monomial(1, 0, order); }

  int order() const { return order_; }
  // Lowest degree with a nonzero coefficient; order() + 1 when zero.
  int valuation() const;
  bool is_zero() const { return valuation() > order_; }

  const mpq_class& coeff(int k) const;  // 0 <= k <= order
  void set_coeff(int k, const mpq_class& v);

  YSeries truncated(int new_order) const;  // new_order <= order
  YSeries derivative() const;              // trusted order drops by one
  YSeries derivative(int times) const;
  YSeries pow(int exponent) const;

  // Requires a nonzero constant term.
  YSeries inverse() const;
  // Requires constant term 1; Newton iteration, result checked by squaring.
  YSeries sqrt() const;

  friend YSeries operator+(const YSeries& a, const YSeries& b);
  friend YSeries operator-(const YSeries& a, const YSeries& b);
  friend YSeries operator-(const YSeries& a);
  friend YSeries operator*(const YSeries& a, const YSeries& b);
  friend YSeries operator*(const mpq_class& c, const YSeries& a);

 private:
  int order_;
  std::vector<mpq_class> coeffs_;  // size order_ + 1
};

// Coefficientwise equality through y^through; InternalError when either side
// is not trusted that far.
bool equal_through(const YSeries& a, const YSeries& b, int through);

}  // namespace tamari_lab
