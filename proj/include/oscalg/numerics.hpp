// Quadrature-backed checks: Gauss rules on the oscillator's natural
// measures, inner products and Gram matrices of eigenstates, Schrodinger
// residuals, divergence-aware norm reports for the families whose
// normalization integrals blow up, and the algebraic / metric-weighted
// ghost norms of the timelike mode.

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "oscalg/gausspoly.hpp"
#include "oscalg/operators.hpp"
#include "oscalg/states.hpp"
#include "oscalg/types.hpp"

namespace oscalg::num {

// Node counts and domain controls for every 1D rule used by the separable
// integrals.  Node counts must be >= 8; beta_cutoff > 0 truncates the
// rapidity line to [-B, B]; theta_exclusion keeps the polar rule away from
// the coordinate poles for the s=1/2 O3 family; metric records the declared
// signature weight (+1 definite) and is carried into serialized reports.
struct QuadratureSpec {
  int radial_nodes = 64;     // Gauss rule on x = rho^2 with weight e^{-x}
  int azimuthal_nodes = 32;  // uniform rule on [0, 2 pi)
  int angular_nodes = 64;    // theta / rapidity rule (also metric-box axes)
  double beta_cutoff = 12.0;
  double theta_exclusion = 1e-6;
  double metric = 1.0;
};

// value          : the integral at the given spec
// convergence_estimate : change of value under the domain sweep (doubling
//                  the rapidity cutoff / halving the pole exclusion)
// divergent      : the sweep moved the value materially; the value must not
//                  be consumed downstream
struct NormReport {
  double value = 0.0;
  double convergence_estimate = 0.0;
  bool divergent = false;
};

// A 1D quadrature rule: integral ~ sum_i weights[i] f(nodes[i]).
struct QuadRule {
  std::vector<double> nodes, weights;
};

// Gauss rule for weight e^{-x} x^alpha on (0, inf) (alpha > -1), exact for
// polynomial degree <= 2n-1; Golub-Welsch on the Jacobi matrix.
QuadRule gauss_laguerre(int n, double alpha);

// Gauss-Legendre rule mapped to [a, b].
QuadRule gauss_legendre(int n, double a, double b);

// integral of conj(f) g with the group volume element (rho drho dphi for O2;
// rho^2 sin(theta) for O3; rho^2 cosh(beta) on the truncated rapidity line
// for O21).  The separated radial/angular/azimuthal factors are integrated
// independently; the azimuthal rule makes distinct-m entries exact zeros and
// the per-entry Laguerre weight makes matching-m entries exact to rounding.
// Throws DomainError for non-Fock arguments and BasisError for mixed groups
// or mixed s.
Complex inner_product(const states::OscillatorState& f,
                      const states::OscillatorState& g,
                      const QuadratureSpec& spec);

// <st, st> plus a divergence sweep: the O21 families are re-integrated with
// the rapidity cutoff doubled, the O3 s=1/2 family with the pole exclusion
// halved; a material change flags the report divergent.
NormReport norm_report(const states::OscillatorState& st,
                       const QuadratureSpec& spec);

// Gram matrix of the labels (entry ij = <state_i, state_j>).  Labels must
// share group and s (BasisError otherwise).  Columns are computed in
// parallel; OSC_ALG_THREADS caps the worker count.
Eigen::MatrixXcd orthonormality_matrix(const std::vector<StateLabel>& labels,
                                       const QuadratureSpec& spec);

// Relative L2 residual of
//   [-d^2/drho^2 - ((D-1)/rho) d/drho + L2/rho^2 + rho^2 - (2 E + shift)]
// applied to the state's radial factor, with L2 the Casimir eigenvalue
// (m+s)^2, l(l+1), or l^2 - 1/4 of its family.  Derivatives are applied in
// closed form; the L2 ratio is taken over rho in [0.1, 4].  A nonzero shift
// is the sensitivity control: it moves the residual by |shift| exactly.
double schrodinger_residual(const states::OscillatorState& st,
                            const QuadratureSpec& spec,
                            double epsilon_shift = 0.0);

// Norm sign of the n0-fold timelike excitation, by integer recursion through
// [a0, abar0] = eta00: FKR gives (-1)^{n0}, KimNoz +1 (and Euclidean +1).
// Throws LabelError for n0 < 0.
double ghost_norm(ops::PhaseConvention convention, int n0);

// weight * |f|^2 regulated by e^{-regulator * t^2} on the third axis and
// normalized by the equally-regulated ground Gaussian, so the ground state
// reports exactly +1 and a single timelike excitation +-1 with the sign of
// the weight.  The polynomial-times-Gaussian structure reduces every term
// to exact 1D Gaussian moments.  A hyperbolic f with regulator <= 1 is
// flagged divergent (the regulated integral itself does not exist).
NormReport metric_norm(const ops::GaussianPoly& f, double weight,
                       const QuadratureSpec& spec, double regulator = 2.0);

}  // namespace oscalg::num
