#pragma once

#include <string>

#include <gmpxx.h>

#include "tamari_lab/xy_poly.hpp"
#include "tamari_lab/y_series.hpp"

namespace tamari_lab {

class Lab;

// Generating series over all intervals, from enumeration. Phi counts by
// y^size x^(left border of the upper endpoint); phi is Phi at x = 1; Theta
// and theta restrict to intervals with an indecomposable lower endpoint;
// psi = y * phi; nu counts new intervals by y^(size + 1).
XYPoly compute_Phi(int order, Lab& lab);
XYPoly compute_Theta(int order, Lab& lab);
YSeries compute_phi(int order, Lab& lab);
YSeries compute_theta(int order, Lab& lab);
YSeries compute_psi(int order, Lab& lab);
YSeries compute_nu(int order, Lab& lab);

// 2 (4n+1)! / ((n+1)! (3n+2)!), the number of intervals of size n >= 1.
mpz_class closed_interval_count(int n);

// tau = y (1 + tau)^4 and phi = tau (1 - tau - tau^2), both exact through
// y^order, without any enumeration.
YSeries lagrange_tau(int order);
YSeries lagrange_phi(int order);

// Functional equation Phi = x^2 y (1 + Phi/x)(1 + (Phi - phi)/(x - 1)).
// The division by (x - 1) must be exact; a failed division is a failed check.
bool check_relaphi(int order, Lab& lab);
bool check_relaphi_with(const XYPoly& Phi, const YSeries& phi);

// Theta = x^2 y + x^2 y (Phi - phi)/(x - 1) and Phi = Theta + Phi Theta / x.
bool check_theta_relations(int order, Lab& lab);
bool check_theta_relations_with(const XYPoly& Phi, const XYPoly& Theta,
                                const YSeries& phi);

// The x-derivative ODE for Phi, cleared of denominators:
//   x^2 dPhi/dx (1 - x + y (x + Phi)^2) = (x + Phi)^2 (1 - y x^2) - x^2 (1 + Phi),
// plus the initial condition Phi(0, y) = 0.
bool check_diffPhi(int order, Lab& lab);
bool check_diffPhi_with(const XYPoly& Phi);

// Degree-8 algebraic equation for Phi; coefficients live in
// data/maxi8_equation.json, guarded by a checksum.
bool check_maxi8(int order, Lab& lab);
bool check_maxi8_with(const XYPoly& Phi);

// Quartic equations with polynomial coefficients for phi and for psi = y phi.
bool check_eqphi(int order, Lab& lab);
bool eqphi_holds(const YSeries& phi);
bool psi_quartic_holds(const YSeries& psi);

// nu: quadratic equation, the closed form with (1 - 8y)^(3/2), and the
// closed-form coefficient formula for n >= 2.
bool check_nu(int order, Lab& lab);
bool check_nu_with(const YSeries& nu);

// Directory with the bundled data files (TAMARI_LAB_DATA_DIR overrides the
// compiled-in default).
std::string data_dir();

}  // namespace tamari_lab
