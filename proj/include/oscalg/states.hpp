// Construction, validation, normalization, and pointwise evaluation of the
// closed-form oscillator eigenstates for O(2), O(3), and the spacelike
// sector of O(2,1), covering both the s=0 and the non-separable s!=0
// families.
//
// Conventions: hbar = omega = 1; energies are reported in units of omega.
// Azimuthal angle phi is the two-argument angle mapped into [0, 2*pi).

#pragma once

#include <functional>

#include "oscalg/types.hpp"

namespace oscalg::states {

// A state label together with its derived data and evaluation rule.
//
//   norm_const : overall radial normalization A (exactly 0 for the excluded
//                zero-norm O2 family n=0, m+s<0)
//   energy     : E in units of omega
//   non_fock   : true for the auxiliary non-normalizable object produced by
//                lowering the O2 s-ground state; it participates in operator
//                chains but is rejected by inner products.
struct OscillatorState {
  StateLabel label;
  double norm_const = 0.0;
  double energy = 0.0;
  bool non_fock = false;

  // Amplitude at a coordinate point.
  Complex eval(const CoordPoint& p) const;
  // Amplitude with the Gaussian envelope exp(-rho^2/2) stripped; numerically
  // stable on far-out quadrature nodes.
  Complex scaled_eval(const CoordPoint& p) const;
};

// True iff the label indexes a normalizable Fock-space state:
//   O2   : 0 <= s < 1, n >= 0, n+m+s >= 0
//   O3/O21, s=0   : n >= 0, l >= 0, |m| <= l
//   O3/O21, s=1/2 : n >= 0, m >= l >= 0   (Legendre degree m, order l)
bool validate_label(const StateLabel& label);

// E in units of omega: 2n+m+s+1 for O2, 2n+l+3/2-s for O3/O21.
// Throws LabelError on invalid labels.
double energy(const StateLabel& label);

// O2 radial normalization A_{nm} = (-1)^n sqrt(n! / (pi Gamma(n+m+s+1))),
// and exactly 0 for the excluded family n=0, m+s<0.
double normalization_2d(int n, int m, double s);

// Radial normalization for the 3D families:
//   s=0   : (-1)^n sqrt(2 n! / Gamma(n+l+3/2))   (angular part is a unit-
//           normalized spherical harmonic for O3)
//   s=1/2 : (-1)^n sqrt(2 n! / Gamma(n+l+1))     (angular constant = 1)
double normalization_3d(int n, int l, double s);

// Closed-form amplitude of the labeled eigenstate at p.  Zero-norm labels
// evaluate to the zero function.  Throws DomainError for points outside the
// coordinate ranges and LabelError for labels that are neither admissible
// nor excluded-but-representable.
Complex eval_state(const StateLabel& label, const CoordPoint& p);

// Full state object for a label (admissible or excluded-zero).
OscillatorState make_state(const StateLabel& label);

// The n=l=0 state.  For the s=1/2 families m0 >= 0 selects a member of the
// infinitely degenerate ground multiplet; otherwise m0 must be 0.
OscillatorState ground_state(GroupKind group, double s, int m0);

// The non-normalizable object obtained by lowering the O2 s-ground state:
//   psi_{0,-1} = sqrt(1/(pi Gamma(s))) e^{-rho^2/2} (rho e^{i phi})^{s-1}.
// Marked non_fock; inner products reject it.
OscillatorState non_fock_state(double s);

// Ground-state amplitude directly from Cartesian coordinates, independent of
// the polar evaluation path.  aux is z for O3 and t for O21 (ignored for O2).
// Throws UnsupportedError for non-ground labels and DomainError for O21
// points outside the spacelike sector.
Complex cartesian_form(const StateLabel& label, double x, double y, double aux);

// Two-argument angle in [0, 2*pi).
double azimuth(double x, double y);

// Power p of the leading radial factor rho^p: m+s for O2, l for 3D s=0,
// l-1/2 for s=1/2.
double radial_exponent(const StateLabel& label);

// Order of the Laguerre factor L_n^a(rho^2): m+s (O2), l+1/2 (3D s=0),
// l (s=1/2).
double laguerre_order(const StateLabel& label);

// The states factor as [A rho^p L_n^a(rho^2) e^{-rho^2/2}] * T(aux) *
// e^{i mu phi}; the two pieces below expose T and mu so inner products can
// integrate each coordinate separately.

// Frequency mu of the azimuthal factor: m+s (O2), m (3D s=0), m+1/2 (s=1/2).
double azimuthal_frequency(const StateLabel& label);

// Real angular factor T(aux): 1 for O2; the unit-normalized spherical
// harmonic's theta part for O3 s=0; P-hat_l^m(sinh beta) for O21 s=0; the
// reversed-role (degree m, order l) Legendre factors for the s=1/2 families.
double angular_factor(const StateLabel& label, double aux);

}  // namespace oscalg::states
