#include "tamari_lab/series.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "tamari_lab/census.hpp"
#include "tamari_lab/errors.hpp"
#include "tamari_lab/lab.hpp"
#include "tamari_lab/new_intervals.hpp"
#include "tamari_lab/rational.hpp"

namespace tamari_lab {

namespace {

mpq_class from_count(std::uint64_t v) {
  return mpq_class(static_cast<unsigned long>(v));
}

}  // namespace

XYPoly compute_Phi(int order, Lab& lab) {
  XYPoly p(order);
  for (int n = 1; n <= order; ++n) {
    const IntervalCensus& c = lab.census(n);
    for (int k = 2; k <= n + 1; ++k)
      if (c.by_border[k] != 0) p.set_coeff(n, k, from_count(c.by_border[k]));
  }
  return p;
}

XYPoly compute_Theta(int order, Lab& lab) {
  XYPoly p(order);
  for (int n = 1; n <= order; ++n) {
    const IntervalCensus& c = lab.census(n);
    for (int k = 2; k <= n + 1; ++k)
      if (c.indec_by_border[k] != 0)
        p.set_coeff(n, k, from_count(c.indec_by_border[k]));
  }
  return p;
}

YSeries compute_phi(int order, Lab& lab) {
  YSeries s(order);
  for (int n = 1; n <= order; ++n)
    s.set_coeff(n, from_count(lab.census(n).total));
  return s;
}

YSeries compute_theta(int order, Lab& lab) {
  YSeries s(order);
  for (int n = 1; n <= order; ++n)
    s.set_coeff(n, from_count(lab.census(n).indecomposable_total));
  return s;
}

YSeries compute_psi(int order, Lab& lab) {
  YSeries s(order);
  for (int n = 1; n + 1 <= order; ++n)
    s.set_coeff(n + 1, from_count(lab.census(n).total));
  return s;
}

YSeries compute_nu(int order, Lab& lab) {
  YSeries s(order);
  for (int n = 1; n + 1 <= order; ++n)
    s.set_coeff(n + 1, from_count(lab.census(n).new_total));
  return s;
}

mpz_class closed_interval_count(int n) {
  if (n < 1) throw SemanticError("interval counts are defined for n >= 1");
  return 2 * factorial(4 * n + 1) / (factorial(n + 1) * factorial(3 * n + 2));
}

YSeries lagrange_tau(int order) {
  YSeries tau(order);
  const YSeries one = YSeries::one(order);
  const YSeries y = YSeries::monomial(1, 1, order);
  // Each pass fixes one more coefficient, since tau has valuation 1.
  for (int i = 0; i < order; ++i) tau = (y * (one + tau).pow(4)).truncated(order);
  return tau;
}

YSeries lagrange_phi(int order) {
  YSeries tau = lagrange_tau(order);
  const YSeries one = YSeries::one(order);
  return (tau * (one - tau - tau * tau)).truncated(order);
}

bool check_relaphi_with(const XYPoly& Phi, const YSeries& phi) {
  const int n = std::min(Phi.order(), phi.order());
  XYPoly dphi(0);
  if (!(Phi - XYPoly::from_y_series(phi)).divide_by_x_minus_1(dphi))
    return false;
  XYPoly phi_over_x(0);
  if (!Phi.divide_by_x(1, phi_over_x)) return false;
  const XYPoly one = XYPoly::one(n);
  XYPoly rhs =
      XYPoly::monomial(1, 2, 1, n) * (one + phi_over_x) * (one + dphi);
  return equal_through(rhs, Phi, n);
}

bool check_relaphi(int order, Lab& lab) {
  return check_relaphi_with(compute_Phi(order, lab), compute_phi(order, lab));
}

bool check_theta_relations_with(const XYPoly& Phi, const XYPoly& Theta,
                                const YSeries& phi) {
  const int n = std::min({Phi.order(), Theta.order(), phi.order()});
  XYPoly dphi(0);
  if (!(Phi - XYPoly::from_y_series(phi)).divide_by_x_minus_1(dphi))
    return false;
  const XYPoly x2y = XYPoly::monomial(1, 2, 1, n);
  if (!equal_through(Theta, x2y + x2y * dphi, n)) return false;
  XYPoly theta_over_x(0);
  if (!Theta.divide_by_x(1, theta_over_x)) return false;
  return equal_through(Phi, Theta + Phi * theta_over_x, n);
}

bool check_theta_relations(int order, Lab& lab) {
  return check_theta_relations_with(compute_Phi(order, lab),
                                    compute_Theta(order, lab),
                                    compute_phi(order, lab));
}

bool check_diffPhi_with(const XYPoly& Phi) {
  const int n = Phi.order();
  for (int k = 0; k <= n; ++k)
    if (Phi.coeff(k, 0) != 0) return false;  // Phi(0, y) = 0
  const XYPoly one = XYPoly::one(n);
  const XYPoly x = XYPoly::monomial(1, 1, 0, n);
  const XYPoly x2 = XYPoly::monomial(1, 2, 0, n);
  const XYPoly y = XYPoly::monomial(1, 0, 1, n);
  const XYPoly x_plus_phi_sq = (x + Phi) * (x + Phi);
  const XYPoly lhs = x2 * Phi.dx() * (one - x + y * x_plus_phi_sq);
  const XYPoly rhs = x_plus_phi_sq * (one - y * x2) - x2 * (one + Phi);
  return equal_through(lhs, rhs, n);
}

bool check_diffPhi(int order, Lab& lab) {
  return check_diffPhi_with(compute_Phi(order, lab));
}

namespace {

constexpr std::uint64_t kMaxi8Checksum = 0xa8577b730b4be994ull;

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ull;
  }
  return h;
}

struct Maxi8Term {
  int phi_power;
  XYPoly coefficient;
};

std::vector<Maxi8Term> load_maxi8(int order) {
  const std::string path = data_dir() + "/maxi8_equation.json";
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataFileError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string bytes = buf.str();
  if (fnv1a64(bytes) != kMaxi8Checksum)
    throw DataFileError("checksum mismatch for " + path);
  nlohmann::json doc = nlohmann::json::parse(bytes, nullptr, false);
  if (doc.is_discarded() || !doc.contains("terms"))
    throw DataFileError("malformed " + path);
  std::vector<Maxi8Term> terms;
  for (const auto& t : doc["terms"]) {
    Maxi8Term term{t.at("phi_power").get<int>(), XYPoly(order)};
    for (const auto& m : t.at("monomials")) {
      const int x_exp = m.at(0).get<int>();
      const int y_exp = m.at(1).get<int>();
      const long coeff = m.at(2).get<long>();
      term.coefficient =
          term.coefficient + XYPoly::monomial(coeff, x_exp, y_exp, order);
    }
    terms.push_back(std::move(term));
  }
  return terms;
}

}  // namespace

bool check_maxi8_with(const XYPoly& Phi) {
  const int n = Phi.order();
  const auto terms = load_maxi8(n);
  // Powers of Phi computed once; Phi has y-valuation 1, so every product
  // stays trusted through y^n.
  int max_power = 0;
  for (const auto& t : terms) max_power = std::max(max_power, t.phi_power);
  std::vector<XYPoly> powers;
  powers.reserve(max_power + 1);
  powers.push_back(XYPoly::one(n));
  for (int p = 1; p <= max_power; ++p)
    powers.push_back((powers.back() * Phi).truncated(n));
  XYPoly acc(n);
  for (const auto& t : terms)
    acc = acc + t.coefficient * powers[t.phi_power];
  return equal_through(acc, XYPoly(n), n);
}

bool check_maxi8(int order, Lab& lab) {
  return check_maxi8_with(compute_Phi(order, lab));
}

bool eqphi_holds(const YSeries& phi) {
  const int n = phi.order();
  auto y_poly = [n](std::initializer_list<std::pair<int, long>> monos) {
    YSeries s(n);
    for (auto [deg, c] : monos)
      if (deg <= n) s.set_coeff(deg, s.coeff(deg) + c);
    return s;
  };
  const YSeries a4 = y_poly({{3, 1}});                              // y^3
  const YSeries a3 = y_poly({{3, 4}, {2, 3}});                      // (4y+3) y^2
  const YSeries a2 = y_poly({{3, 6}, {2, 17}, {1, 3}});             // (6y^2+17y+3) y
  const YSeries a1 = y_poly({{3, 4}, {2, 25}, {1, -14}, {0, 1}});
  const YSeries a0 = y_poly({{3, 1}, {2, 11}, {1, -1}});            // y (y^2+11y-1)
  const YSeries acc = a4 * phi.pow(4) + a3 * phi.pow(3) + a2 * phi.pow(2) +
                      a1 * phi + a0;
  return equal_through(acc, YSeries(n), n);
}

bool psi_quartic_holds(const YSeries& psi) {
  const int n = psi.order();
  auto y_poly = [n](std::initializer_list<std::pair<int, long>> monos) {
    YSeries s(n);
    for (auto [deg, c] : monos)
      if (deg <= n) s.set_coeff(deg, s.coeff(deg) + c);
    return s;
  };
  const YSeries a3 = y_poly({{1, 4}, {0, 3}});
  const YSeries a2 = y_poly({{2, 6}, {1, 17}, {0, 3}});
  const YSeries a1 = y_poly({{3, 4}, {2, 25}, {1, -14}, {0, 1}});
  const YSeries a0 = y_poly({{4, 1}, {3, 11}, {2, -1}});            // y^2 (y^2+11y-1)
  const YSeries acc =
      psi.pow(4) + a3 * psi.pow(3) + a2 * psi.pow(2) + a1 * psi + a0;
  return equal_through(acc, YSeries(n), n);
}

bool check_eqphi(int order, Lab& lab) {
  return eqphi_holds(compute_phi(order, lab)) &&
         psi_quartic_holds(compute_psi(order, lab));
}

bool check_nu_with(const YSeries& nu) {
  const int n = nu.order();
  auto y_poly = [n](std::initializer_list<std::pair<int, long>> monos) {
    YSeries s(n);
    for (auto [deg, c] : monos)
      if (deg <= n) s.set_coeff(deg, s.coeff(deg) + c);
    return s;
  };
  // 16 nu^2 = (-1 + 12 y + 8 y^2) nu + y^2 - 11 y^3 - y^4.
  const YSeries lin = y_poly({{2, 8}, {1, 12}, {0, -1}});
  const YSeries cst = y_poly({{4, -1}, {3, -11}, {2, 1}});
  if (!equal_through(y_poly({{0, 16}}) * nu * nu, lin * nu + cst, n))
    return false;
  // nu = (-1 + 12 y + 8 y^2 + (1 - 8y)^(3/2)) / 32.
  const YSeries base = y_poly({{0, 1}, {1, -8}});
  const YSeries closed =
      rat(1, 32) * (lin + base * base.sqrt());
  if (!equal_through(nu, closed, n)) return false;
  // Coefficient of y^(m+1) counts the new intervals of size m.
  for (int m = 2; m + 1 <= n; ++m)
    if (nu.coeff(m + 1) != mpq_class(closed_new_count(m))) return false;
  return nu.coeff(0) == 0 && (n < 1 || nu.coeff(1) == 0) &&
         (n < 2 || nu.coeff(2) == 1);
}

bool check_nu(int order, Lab& lab) {
  return check_nu_with(compute_nu(order, lab));
}

std::string data_dir() {
  if (const char* env = std::getenv("TAMARI_LAB_DATA_DIR");
      env != nullptr && *env != '\0')
    return env;
#ifdef TAMARI_LAB_DATA_DIR
  return TAMARI_LAB_DATA_DIR;
#else
  return "data";
#endif
}

}  // namespace tamari_lab
