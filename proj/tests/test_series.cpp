#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tamari_lab/errors.hpp"
#include "tamari_lab/lab.hpp"
#include "tamari_lab/rational.hpp"
#include "tamari_lab/series.hpp"
#include "tamari_lab/xy_poly.hpp"
#include "tamari_lab/y_series.hpp"

using namespace tamari_lab;

TEST_CASE("series container basics") {
  YSeries s = YSeries::monomial(rat(3, 2), 2, 5);
  CHECK(s.order() == 5);
  CHECK(s.valuation() == 2);
  CHECK(s.coeff(2) == rat(3, 2));
  CHECK(s.coeff(3) == 0);
  CHECK(YSeries(4).is_zero());
  CHECK(YSeries(4).valuation() == 5);
  CHECK_THROWS_AS(s.coeff(6), InternalError);
  CHECK_THROWS_AS(s.truncated(7), InternalError);
  CHECK_THROWS_AS(YSeries(-1), InternalError);
}

TEST_CASE("derivatives lose one trusted order") {
  YSeries s = YSeries::monomial(1, 3, 5);  // y^3 through y^5
  YSeries d = s.derivative();
  CHECK(d.order() == 4);
  CHECK(d.coeff(2) == 3);
  CHECK(s.derivative(2).order() == 3);
  CHECK(s.derivative(2).coeff(1) == 6);
  CHECK_THROWS_AS(YSeries(0).derivative(), InternalError);
  CHECK_THROWS_AS(equal_through(d, d, 5), InternalError);
}

TEST_CASE("products regain trusted orders from valuations") {
  YSeries a = YSeries::monomial(1, 2, 3);  // valuation 2, trusted to y^3
  YSeries b = YSeries::monomial(1, 1, 3);  // valuation 1, trusted to y^3
  YSeries ab = a * b;
  CHECK(ab.order() == 4);  // min(3 + 1, 3 + 2)
  CHECK(ab.coeff(3) == 1);
  CHECK(ab.coeff(4) == 0);
}

TEST_CASE("inverse and square root are exact") {
  int n = 8;
  YSeries one_minus_y = YSeries::one(n) - YSeries::monomial(1, 1, n);
  YSeries inv = one_minus_y.inverse();
  for (int k = 0; k <= n; ++k) CHECK(inv.coeff(k) == 1);
  CHECK(equal_through(inv * one_minus_y, YSeries::one(n), n));

  YSeries arg = YSeries::one(n) - YSeries::monomial(8, 1, n);
  YSeries root = arg.sqrt();
  CHECK(equal_through(root * root, arg, n));
  CHECK(root.coeff(0) == 1);
  CHECK(root.coeff(1) == -4);
  CHECK(root.coeff(2) == -8);

  CHECK_THROWS_AS(YSeries(3).inverse(), InternalError);
  CHECK_THROWS_AS(YSeries::monomial(2, 0, 3).sqrt(), InternalError);
}

TEST_CASE("two-variable rows, substitution and division") {
  XYPoly p = XYPoly::monomial(2, 3, 1, 4);  // 2 x^3 y
  CHECK(p.order() == 4);
  CHECK(p.coeff(1, 3) == 2);
  CHECK(p.y_valuation() == 1);
  CHECK(p.max_x_degree() == 3);
  CHECK(p.dx().coeff(1, 2) == 6);
  CHECK(p.at_x1().coeff(1) == 2);

  XYPoly q(2);
  q.set_coeff(1, 0, -1);
  q.set_coeff(1, 1, 1);  // (x - 1) y
  XYPoly quotient(0);
  CHECK(q.divide_by_x_minus_1(quotient));
  CHECK(quotient.coeff(1, 0) == 1);
  XYPoly not_divisible = XYPoly::monomial(1, 0, 1, 2);  // y alone
  CHECK_FALSE(not_divisible.divide_by_x_minus_1(quotient));
  XYPoly xq = XYPoly::monomial(3, 2, 1, 2);
  CHECK(xq.divide_by_x(2, quotient));
  CHECK(quotient.coeff(1, 0) == 3);
  CHECK_FALSE(xq.divide_by_x(3, quotient));

  YSeries line = YSeries::monomial(5, 2, 3);
  CHECK(XYPoly::from_y_series(line).coeff(2, 0) == 5);
  CHECK(equal_through(XYPoly::from_y_series(line).at_x1(), line, 3));
}

TEST_CASE("interval series by size and left border, through y^3") {
  Lab lab;
  XYPoly Phi = compute_Phi(3, lab);
  CHECK(Phi.row(0).empty());
  CHECK(Phi.coeff(1, 2) == 1);
  CHECK(Phi.row(1) == std::vector<mpq_class>{0, 0, 1});
  CHECK(Phi.row(2) == std::vector<mpq_class>{0, 0, 1, 2});
  CHECK(Phi.row(3) == std::vector<mpq_class>{0, 0, 3, 5, 5});

  XYPoly Theta = compute_Theta(3, lab);
  CHECK(Theta.row(1) == std::vector<mpq_class>{0, 0, 1});
  CHECK(Theta.row(2) == std::vector<mpq_class>{0, 0, 1, 1});
  CHECK(Theta.row(3) == std::vector<mpq_class>{0, 0, 3, 3, 2});
}

TEST_CASE("one-variable series: totals, indecomposables, new intervals") {
  Lab lab;
  YSeries phi = compute_phi(8, lab);
  const std::vector<long> interval_counts = {1,   3,    13,   68,
                                             399, 2530, 16965, 118668};
  CHECK(phi.coeff(0) == 0);
  for (int n = 1; n <= 8; ++n) {
    CHECK(phi.coeff(n) == interval_counts[n - 1]);
    CHECK(phi.coeff(n) == mpq_class(closed_interval_count(n)));
  }

  YSeries theta = compute_theta(4, lab);
  CHECK(theta.coeff(0) == 0);
  CHECK(theta.coeff(1) == 1);
  CHECK(theta.coeff(2) == 2);
  CHECK(theta.coeff(3) == 8);
  CHECK(theta.coeff(4) == 41);

  YSeries nu = compute_nu(5, lab);
  CHECK(nu.coeff(0) == 0);
  CHECK(nu.coeff(1) == 0);
  CHECK(nu.coeff(2) == 1);
  CHECK(nu.coeff(3) == 1);
  CHECK(nu.coeff(4) == 3);
  CHECK(nu.coeff(5) == 12);

  YSeries psi = compute_psi(5, lab);
  CHECK(psi.coeff(0) == 0);
  CHECK(psi.coeff(1) == 0);
  for (int n = 2; n <= 5; ++n) CHECK(psi.coeff(n) == interval_counts[n - 2]);
}

TEST_CASE("substituting x = 1 collapses the refined series") {
  Lab lab;
  CHECK(equal_through(compute_Phi(6, lab).at_x1(), compute_phi(6, lab), 6));
  CHECK(equal_through(compute_Theta(6, lab).at_x1(), compute_theta(6, lab), 6));
}

TEST_CASE("closed interval count formula") {
  CHECK(closed_interval_count(1) == 1);
  CHECK(closed_interval_count(3) == 13);
  CHECK(closed_interval_count(6) == 2530);
  CHECK(closed_interval_count(8) == 118668);
  CHECK(closed_interval_count(8) ==
        2 * factorial(33) / (factorial(9) * factorial(26)));
  CHECK_THROWS_AS(closed_interval_count(0), SemanticError);
}

TEST_CASE("fixed point for tau and the interval series it carries") {
  YSeries tau = lagrange_tau(4);
  CHECK(tau.coeff(0) == 0);
  CHECK(tau.coeff(1) == 1);
  CHECK(tau.coeff(2) == 4);
  CHECK(tau.coeff(3) == 22);
  CHECK(tau.coeff(4) == 140);
  // tau = y (1 + tau)^4 exactly through the truncation.
  YSeries rhs = YSeries::monomial(1, 1, 4) * (YSeries::one(4) + tau).pow(4);
  CHECK(equal_through(rhs.truncated(4), tau, 4));

  YSeries phi = lagrange_phi(12);
  CHECK(phi.coeff(0) == 0);
  for (int n = 1; n <= 12; ++n)
    CHECK(phi.coeff(n) == mpq_class(closed_interval_count(n)));
}

TEST_CASE("functional equation for the refined series") {
  Lab lab;
  CHECK(check_relaphi(3, lab));
  CHECK(check_relaphi(6, lab));
  XYPoly Phi = compute_Phi(6, lab);
  YSeries phi = compute_phi(6, lab);
  XYPoly mutated = Phi + XYPoly::monomial(1, 2, 2, 6);
  CHECK_FALSE(check_relaphi_with(mutated, phi));
}

TEST_CASE("the two identities tying both refined series") {
  Lab lab;
  CHECK(check_theta_relations(3, lab));
  CHECK(check_theta_relations(6, lab));
  XYPoly Phi = compute_Phi(6, lab);
  XYPoly Theta = compute_Theta(6, lab);
  YSeries phi = compute_phi(6, lab);
  XYPoly mutated = Theta + XYPoly::monomial(1, 3, 2, 6);
  CHECK_FALSE(check_theta_relations_with(Phi, mutated, phi));
}

TEST_CASE("differential equation in x") {
  Lab lab;
  CHECK(check_diffPhi(3, lab));
  CHECK(check_diffPhi(6, lab));
  XYPoly Phi = compute_Phi(6, lab);
  for (int k = 0; k <= 6; ++k) CHECK(Phi.coeff(k, 0) == 0);
  XYPoly mutated = Phi + XYPoly::monomial(1, 2, 3, 6);
  CHECK_FALSE(check_diffPhi_with(mutated));
}

TEST_CASE("degree-eight algebraic equation") {
  Lab lab;
  CHECK(check_maxi8(4, lab));
  CHECK(check_maxi8(7, lab));
  // A different series cannot satisfy the same equation.
  CHECK_FALSE(check_maxi8_with(compute_Theta(6, lab)));
  XYPoly mutated = compute_Phi(6, lab) + XYPoly::monomial(1, 2, 4, 6);
  CHECK_FALSE(check_maxi8_with(mutated));
}

TEST_CASE("quartic equations for the one-variable series") {
  Lab lab;
  CHECK(check_eqphi(6, lab));
  CHECK(eqphi_holds(lagrange_phi(12)));
  CHECK(psi_quartic_holds(compute_psi(6, lab)));
  CHECK_FALSE(eqphi_holds(YSeries::monomial(1, 1, 6)));  // phi = y fails
  YSeries phi = compute_phi(6, lab);
  YSeries mutated = phi + YSeries::monomial(1, 3, 6);
  CHECK_FALSE(eqphi_holds(mutated));
  YSeries psi_mut = compute_psi(6, lab) + YSeries::monomial(1, 4, 6);
  CHECK_FALSE(psi_quartic_holds(psi_mut));
}

TEST_CASE("new-interval series: quadratic equation and closed form") {
  Lab lab;
  CHECK(check_nu(5, lab));
  CHECK(check_nu(8, lab));
  YSeries nu = compute_nu(6, lab);
  YSeries mutated = nu + YSeries::monomial(1, 4, 6);
  CHECK_FALSE(check_nu_with(mutated));
  // Closed form spelled out here as well: 32 nu = -1 + 12y + 8y^2 + (1-8y)^{3/2}.
  int n = 6;
  YSeries base = YSeries::one(n) - YSeries::monomial(8, 1, n);
  YSeries closed = rat(1, 32) * (YSeries::monomial(-1, 0, n) +
                                 YSeries::monomial(12, 1, n) +
                                 YSeries::monomial(8, 2, n) +
                                 base * base.sqrt());
  CHECK(equal_through(closed, nu, n));
}

TEST_CASE("data file is guarded by its checksum") {
  Lab lab;
  namespace fs = std::filesystem;
  const std::string original_dir = data_dir();
  std::ifstream in(original_dir + "/maxi8_equation.json", std::ios::binary);
  REQUIRE(in.good());
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  REQUIRE(!bytes.empty());

  fs::path tmp = fs::temp_directory_path() / "tamari_lab_data_test";
  fs::create_directories(tmp);

  // Missing file: the check must fail loudly, not silently pass.
  fs::remove(tmp / "maxi8_equation.json");
  setenv("TAMARI_LAB_DATA_DIR", tmp.c_str(), 1);
  CHECK_THROWS_AS(check_maxi8(3, lab), DataFileError);

  // Single corrupted byte: checksum mismatch.
  std::string corrupted = bytes;
  corrupted[corrupted.size() / 2] ^= 0x01;
  std::ofstream out(tmp / "maxi8_equation.json", std::ios::binary);
  out << corrupted;
  out.close();
  CHECK_THROWS_AS(check_maxi8(3, lab), DataFileError);

  // Intact copy: works from any directory.
  std::ofstream good(tmp / "maxi8_equation.json", std::ios::binary);
  good << bytes;
  good.close();
  CHECK(check_maxi8(3, lab));

  unsetenv("TAMARI_LAB_DATA_DIR");
  CHECK(check_maxi8(3, lab));
  fs::remove_all(tmp);
}
