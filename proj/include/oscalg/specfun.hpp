// Special functions underlying the oscillator eigenstates: generalized
// Laguerre polynomials, associated Legendre functions (Condon-Shortley
// phase), their hyperbolic (imaginary-argument) variant, and Clebsch-Gordan
// coefficients evaluated exactly.
//
// All functions here are pure and safe for unrestricted concurrent use.

#pragma once

#include <vector>

#include "oscalg/types.hpp"

namespace oscalg::specfun {

// Index pair (degree, order) for the Legendre-type families.  The order may
// exceed the degree for the reversed-role family used by the s=1/2 states,
// in which case the function is identically zero.
struct PolyIndex {
  int degree = 0;  // n of L_n^alpha, l of P_l^m
  int order = 0;   // alpha or m
};

// Coupling label <j1 m1 j2 m2 | J M>.  All entries are half-integer valued.
struct CGIndex {
  double j1 = 0, m1 = 0;
  double j2 = 0, m2 = 0;
  double J = 0, M = 0;
};

// Generalized Laguerre polynomial L_n^alpha(x) by the standard three-term
// recurrence in n.  Conventions: L_n = 0 for n < 0, L_0 = 1.  Any real alpha
// is accepted for evaluation (alpha > -1 is only needed for norm integrals).
// Throws DomainError for non-finite x.
double laguerre(int n, double alpha, double x);

// Monomial coefficients c_0..c_n of L_n^alpha (exact recurrence on
// coefficient arrays); used by the closed-form operator application.
std::vector<double> laguerre_coefficients(int n, double alpha);

// Associated Legendre function P_l^m(z) with Condon-Shortley phase,
// |z| <= 1 (else DomainError).  Returns 0 when |m| > l.  Negative orders via
// P_l^{-m} = (-1)^m (l-m)!/(l+m)! P_l^m.
double legendre_p(int l, int m, double z);

// Hyperbolic counterpart of legendre_p: the real-valued solution family
// obtained from P_l^m under z -> i*zeta, computed entirely by real
// recurrences seeded from the diagonal closed form (never by complex
// arithmetic).  Condon-Shortley phase:  Phat_1^1(zeta) = -sqrt(1+zeta^2).
// Returns 0 when |m| > l; negative orders via
// Phat_l^{-m} = (l-m)!/(l+m)! Phat_l^m.
double legendre_phat(int l, int m, double zeta);

// Clebsch-Gordan coefficient in the Condon-Shortley convention, computed by
// the Racah closed formula over exact big-rational arithmetic and converted
// to double at the boundary.  Invalid couplings (selection-rule violations,
// non-half-integer inputs) return 0.
double clebsch_gordan(const CGIndex& idx);

}  // namespace oscalg::specfun
