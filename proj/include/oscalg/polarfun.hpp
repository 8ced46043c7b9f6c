// Closed family of 2D polar functions
//
//     f(rho, phi) = sum_k  c_k  e^{-rho^2/2}  rho^{p_k}  q_k(rho^2)  e^{i mu_k phi}
//
// with complex prefactors c_k, real powers p_k, real azimuthal frequencies
// mu_k, and polynomials q_k.  Every O(2) oscillator eigenstate (including
// the fractional-s families and the non-normalizable lowering image of the
// s-ground state) is a single term of this form, and the family is closed
// under all four polar ladder operators and under radial differentiation.
// Operator chains of any depth therefore evaluate without differencing
// noise.

#pragma once

#include <vector>

#include "oscalg/states.hpp"
#include "oscalg/types.hpp"

namespace oscalg::ops {

struct PolarTerm {
  Complex c{0.0, 0.0};
  double p = 0.0;   // power of rho
  double mu = 0.0;  // azimuthal frequency (angular eigenvalue)
  std::vector<Complex> q{Complex{1.0, 0.0}};  // polynomial in x = rho^2
};

struct PolarFun {
  std::vector<PolarTerm> terms;

  Complex eval(const CoordPoint& pt) const;
  // Evaluation with the Gaussian envelope stripped (for quadrature grids).
  Complex scaled_eval(const CoordPoint& pt) const;

  PolarFun& operator+=(const PolarFun& other);
  PolarFun& operator*=(Complex z);
};

PolarFun operator+(PolarFun a, const PolarFun& b);
PolarFun operator-(PolarFun a, const PolarFun& b);
PolarFun operator*(Complex z, PolarFun f);

// Merge terms with matching (p, mu) and drop numerically empty ones.
void simplify(PolarFun& f);

// Exact closed-form image of a state (O2 labels only, including the
// excluded-zero and non-Fock objects).
PolarFun to_polarfun(const states::OscillatorState& st);

// The four polar ladder operators in their differential form
//   lower_pm = +1:  (1/2) e^{+i phi} (rho + d_rho + (i/rho) d_phi)
//   lower_pm = -1:  (1/2) e^{-i phi} (rho + d_rho - (i/rho) d_phi)
//   raise_pm = +1:  (1/2) e^{+i phi} (rho - d_rho - (i/rho) d_phi)
//   raise_pm = -1:  (1/2) e^{-i phi} (rho - d_rho + (i/rho) d_phi)
// applied exactly within the closed family.
PolarFun apply_lowering(const PolarFun& f, int pm);
PolarFun apply_raising(const PolarFun& f, int pm);

// d/d_rho within the family (used by the residual checks).
PolarFun d_rho(const PolarFun& f);

// Multiply by rho^k (k may be negative) or by the monomial x^j = rho^{2j}.
PolarFun mul_rho_power(const PolarFun& f, double k);

}  // namespace oscalg::ops
