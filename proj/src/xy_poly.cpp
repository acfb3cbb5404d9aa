#include "tamari_lab/xy_poly.hpp"

#include <algorithm>

#include "tamari_lab/errors.hpp"

namespace tamari_lab {

XYPoly::XYPoly(int order) : order_(order) {
  if (order < 0) throw InternalError("series order must be >= 0");
  rows_.resize(order_ + 1);
}

XYPoly XYPoly::monomial(const mpq_class& c, int x_deg, int y_deg, int order) {
  XYPoly p(order);
  if (y_deg <= order && c != 0) {
    p.rows_[y_deg].resize(x_deg + 1, 0);
    p.rows_[y_deg][x_deg] = c;
  }
  return p;
}

XYPoly XYPoly::from_y_series(const YSeries& s) {
  XYPoly p(s.order());
  for (int k = 0; k <= s.order(); ++k)
    if (s.coeff(k) != 0) p.rows_[k].assign(1, s.coeff(k));
  return p;
}

int XYPoly::y_valuation() const {
  for (int k = 0; k <= order_; ++k)
    if (!rows_[k].empty()) return k;
  return order_ + 1;
}

const std::vector<mpq_class>& XYPoly::row(int k) const {
  if (k < 0 || k > order_)
    throw InternalError("series row index out of trusted range");
  return rows_[k];
}

mpq_class XYPoly::coeff(int y_deg, int x_deg) const {
  const auto& r = row(y_deg);
  if (x_deg < 0 || x_deg >= static_cast<int>(r.size())) return 0;
  return r[x_deg];
}

void XYPoly::set_coeff(int y_deg, int x_deg, const mpq_class& v) {
  if (y_deg < 0 || y_deg > order_)
    throw InternalError("series row index out of trusted range");
  auto& r = rows_[y_deg];
  if (x_deg >= static_cast<int>(r.size())) r.resize(x_deg + 1, 0);
  r[x_deg] = v;
  trim(y_deg);
}

void XYPoly::trim(int k) {
  auto& r = rows_[k];
  while (!r.empty() && r.back() == 0) r.pop_back();
}

XYPoly XYPoly::truncated(int new_order) const {
  if (new_order > order_)
    throw InternalError("cannot extend a series' trusted order");
  XYPoly out(new_order);
  for (int k = 0; k <= new_order; ++k) out.rows_[k] = rows_[k];
  return out;
}

XYPoly XYPoly::dx() const {
  XYPoly out(order_);
  for (int k = 0; k <= order_; ++k) {
    const auto& r = rows_[k];
    if (r.size() < 2) continue;
    auto& o = out.rows_[k];
    o.resize(r.size() - 1);
    for (std::size_t d = 1; d < r.size(); ++d)
      o[d - 1] = static_cast<long>(d) * r[d];
    out.trim(k);
  }
  return out;
}

YSeries XYPoly::at_x1() const {
  YSeries s(order_);
  for (int k = 0; k <= order_; ++k) {
    mpq_class acc = 0;
    for (const auto& c : rows_[k]) acc += c;
    s.set_coeff(k, acc);
  }
  return s;
}

int XYPoly::max_x_degree() const {
  int deg = 0;
  for (const auto& r : rows_)
    deg = std::max(deg, static_cast<int>(r.size()) - 1);
  return deg;
}

bool XYPoly::divide_by_x(int power, XYPoly& out) const {
  out = XYPoly(order_);
  for (int k = 0; k <= order_; ++k) {
    const auto& r = rows_[k];
    if (r.empty()) continue;
    if (static_cast<int>(r.size()) <= power) return false;
    for (int d = 0; d < power; ++d)
      if (r[d] != 0) return false;
    out.rows_[k].assign(r.begin() + power, r.end());
  }
  return true;
}

bool XYPoly::divide_by_x_minus_1(XYPoly& out) const {
  out = XYPoly(order_);
  for (int k = 0; k <= order_; ++k) {
    const auto& r = rows_[k];
    if (r.empty()) continue;
    // Synthetic division from the top; the remainder is the value at x = 1.
    std::vector<mpq_class> q(r.size() - 1, 0);
    mpq_class carry = 0;
    for (int d = static_cast<int>(r.size()) - 1; d >= 1; --d) {
      carry += r[d];
      q[d - 1] = carry;
    }
    if (carry + r[0] != 0) return false;
    out.rows_[k] = std::move(q);
    out.trim(k);
  }
  return true;
}

XYPoly operator+(const XYPoly& a, const XYPoly& b) {
  XYPoly out(std::min(a.order_, b.order_));
  for (int k = 0; k <= out.order_; ++k) {
    const auto& ra = a.rows_[k];
    const auto& rb = b.rows_[k];
    auto& o = out.rows_[k];
    o.resize(std::max(ra.size(), rb.size()), 0);
    for (std::size_t d = 0; d < ra.size(); ++d) o[d] = ra[d];
    for (std::size_t d = 0; d < rb.size(); ++d) o[d] += rb[d];
    out.trim(k);
  }
  return out;
}

XYPoly operator-(const XYPoly& a, const XYPoly& b) {
  return a + mpq_class(-1) * b;
}

XYPoly operator*(const XYPoly& a, const XYPoly& b) {
  const int order =
      std::min(a.order_ + b.y_valuation(), b.order_ + a.y_valuation());
  XYPoly out(order);
  for (int i = 0; i <= std::min(a.order_, order); ++i) {
    const auto& ra = a.rows_[i];
    if (ra.empty()) continue;
    const int jmax = std::min(b.order_, order - i);
    for (int j = 0; j <= jmax; ++j) {
      const auto& rb = b.rows_[j];
      if (rb.empty()) continue;
      auto& o = out.rows_[i + j];
      if (o.size() < ra.size() + rb.size() - 1)
        o.resize(ra.size() + rb.size() - 1, 0);
      for (std::size_t da = 0; da < ra.size(); ++da) {
        if (ra[da] == 0) continue;
        for (std::size_t db = 0; db < rb.size(); ++db)
          if (rb[db] != 0) o[da + db] += ra[da] * rb[db];
      }
    }
  }
  for (int k = 0; k <= order; ++k) out.trim(k);
  return out;
}

XYPoly operator*(const mpq_class& c, const XYPoly& a) {
  XYPoly out(a.order_);
  if (c == 0) return out;
  for (int k = 0; k <= a.order_; ++k) {
    out.rows_[k].resize(a.rows_[k].size());
    for (std::size_t d = 0; d < a.rows_[k].size(); ++d)
      out.rows_[k][d] = c * a.rows_[k][d];
  }
  return out;
}

bool equal_through(const XYPoly& a, const XYPoly& b, int through) {
  if (a.order() < through || b.order() < through)
    throw InternalError("series compared beyond their trusted order");
  for (int k = 0; k <= through; ++k) {
    const auto& ra = a.row(k);
    const auto& rb = b.row(k);
    const std::size_t width = std::max(ra.size(), rb.size());
    for (std::size_t d = 0; d < width; ++d) {
      mpq_class ca = d < ra.size() ? ra[d] : mpq_class(0);
      mpq_class cb = d < rb.size() ? rb[d] : mpq_class(0);
      if (ca != cb) return false;
    }
  }
  return true;
}

}  // namespace tamari_lab
