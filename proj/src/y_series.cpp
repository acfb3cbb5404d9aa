#include "tamari_lab/y_series.hpp"

#include <algorithm>

#include "tamari_lab/errors.hpp"

namespace tamari_lab {

YSeries::YSeries(int order) : order_(order) {
  if (order < 0) throw InternalError("series order must be >= 0");
  coeffs_.resize(order_ + 1, 0);
}

YSeries YSeries::monomial(const mpq_class& c, int degree, int order) {
  YSeries s(order);
  if (degree <= order) s.coeffs_[degree] = c;
  return s;
}

int YSeries::valuation() const {
  for (int k = 0; k <= order_; ++k)
    if (coeffs_[k] != 0) return k;
  return order_ + 1;
}

const mpq_class& YSeries::coeff(int k) const {
  if (k < 0 || k > order_)
    throw InternalError("series coefficient index out of trusted range");
  return coeffs_[k];
}

void YSeries::set_coeff(int k, const mpq_class& v) {
  if (k < 0 || k > order_)
    throw InternalError("series coefficient index out of trusted range");
  coeffs_[k] = v;
}

YSeries YSeries::truncated(int new_order) const {
  if (new_order > order_)
    throw InternalError("cannot extend a series' trusted order");
  YSeries out(new_order);
  std::copy_n(coeffs_.begin(), new_order + 1, out.coeffs_.begin());
  return out;
}

YSeries YSeries::derivative() const {
  if (order_ < 1)
    throw InternalError("derivative of an order-0 series has no trusted terms");
  YSeries out(order_ - 1);
  for (int k = 0; k < order_; ++k) out.coeffs_[k] = (k + 1) * coeffs_[k + 1];
  return out;
}

YSeries YSeries::derivative(int times) const {
  YSeries out = *this;
  for (int i = 0; i < times; ++i) out = out.derivative();
  return out;
}

YSeries YSeries::pow(int exponent) const {
  if (exponent < 0) throw InternalError("negative series power");
  YSeries out = YSeries::one(order_);
  for (int i = 0; i < exponent; ++i) out = out * *this;
  return out;
}

YSeries operator+(const YSeries& a, const YSeries& b) {
  YSeries out(std::min(a.order_, b.order_));
  for (int k = 0; k <= out.order_; ++k)
    out.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
  return out;
}

YSeries operator-(const YSeries& a, const YSeries& b) {
  YSeries out(std::min(a.order_, b.order_));
  for (int k = 0; k <= out.order_; ++k)
    out.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
  return out;
}

YSeries operator-(const YSeries& a) {
  YSeries out(a.order_);
  for (int k = 0; k <= out.order_; ++k) out.coeffs_[k] = -a.coeffs_[k];
  return out;
}

YSeries operator*(const YSeries& a, const YSeries& b) {
  // Coefficient k of the product only involves exact coefficients of both
  // factors as long as k <= min(a.order + val(b), b.order + val(a)).
  const int order =
      std::min(a.order_ + b.valuation(), b.order_ + a.valuation());
  YSeries out(order);
  mpq_class term;
  for (int i = 0; i <= std::min(a.order_, order); ++i) {
    if (a.coeffs_[i] == 0) continue;
    const int jmax = std::min(b.order_, order - i);
    for (int j = 0; j <= jmax; ++j) {
      if (b.coeffs_[j] == 0) continue;
      term = a.coeffs_[i] * b.coeffs_[j];
      out.coeffs_[i + j] += term;
    }
  }
  return out;
}

YSeries operator*(const mpq_class& c, const YSeries& a) {
  YSeries out(a.order_);
  for (int k = 0; k <= out.order_; ++k) out.coeffs_[k] = c * a.coeffs_[k];
  return out;
}

YSeries YSeries::inverse() const {
  if (coeffs_[0] == 0)
    throw InternalError("series inverse needs a nonzero constant term");
  YSeries out(order_);
  out.coeffs_[0] = 1 / coeffs_[0];
  for (int k = 1; k <= order_; ++k) {
    mpq_class acc = 0;
    for (int j = 1; j <= k; ++j) acc += coeffs_[j] * out.coeffs_[k - j];
    out.coeffs_[k] = -acc / coeffs_[0];
  }
  return out;
}

YSeries YSeries::sqrt() const {
  if (coeffs_[0] != 1)
    throw InternalError("series sqrt needs constant term 1");
  YSeries x = YSeries::one(order_);
  mpq_class half(1, 2);
  // Newton for x^2 = a; each step doubles the correct order, so this is
  // more than enough, and the result is verified below anyway.
  int steps = 1;
  for (int reach = 1; reach <= order_; reach *= 2) ++steps;
  for (int i = 0; i < steps; ++i) x = half * (x + *this * x.inverse());
  if (!equal_through(x * x, *this, order_))
    throw InternalError("series sqrt failed to converge");
  return x;
}

bool equal_through(const YSeries& a, const YSeries& b, int through) {
  if (a.order() < through || b.order() < through)
    throw InternalError("series compared beyond their trusted order");
  for (int k = 0; k <= through; ++k)
    if (a.coeff(k) != b.coeff(k)) return false;
  return true;
}

}  // namespace tamari_lab
