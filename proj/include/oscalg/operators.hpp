// Ladder and symmetry operators in three realizations: symbolic index
// action, explicit polar differential operators (exact within the closed
// polar family, finite-difference for generic callables), and
// Cartesian-mode action under selectable phase conventions; plus the SU(2)
// generator blocks and the broken-symmetry ground-state residuals.

#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "oscalg/gausspoly.hpp"
#include "oscalg/polarfun.hpp"
#include "oscalg/states.hpp"
#include "oscalg/types.hpp"

namespace oscalg::ops {

// Polar ladder kinds; APar/AbarPar are the third-axis (z or t) operators of
// the 3D groups.  Cartesian selects a single-mode operator identified by
// (axis, bar).
enum class LadderKind { APlus, AMinus, AbarPlus, AbarMinus, APar, AbarPar, Cartesian };

// Phase conventions for the timelike Cartesian mode:
//   Euclidean : no timelike mode; all phases 1
//   KimNoz    : phases 1 with eta00 = -1; abar^0 annihilates, a^0 creates,
//               norms stay +1, spectrum is indefinite
//   FKR       : timelike phases i; abar^0 creates timelike quanta (stored as
//               a count k = -n^0 >= 0), spectrum positive, norms (-1)^k
enum class PhaseConvention { Euclidean, KimNoz, FKR };

const char* phase_convention_name(PhaseConvention c);

struct LadderOp {
  LadderKind kind = LadderKind::APlus;
  GroupKind group = GroupKind::O2;
  PhaseConvention phases = PhaseConvention::Euclidean;
  int axis = 0;      // Cartesian only: mode index (0 = timelike when present)
  bool bar = false;  // Cartesian only: creation flag
};

LadderOp polar_op(LadderKind kind, GroupKind group);
LadderOp cartesian_op(int axis, bool bar, PhaseConvention phases);

// Result of a symbolic ladder application.  Coefficients are real and
// non-negative; convention phases are bookkeeping constants that never enter
// the coefficients.
enum class ActionTarget { State, NonFock, Zero };

struct SymbolicAction {
  double coeff = 0.0;
  ActionTarget target = ActionTarget::Zero;
  StateLabel out{};  // meaningful when target == State
};

struct ZetaAction {
  double coeff = 0.0;
  ActionTarget target = ActionTarget::Zero;
  ZetaLabel out{};
};

// Index action on O2 eigenstate labels:
//   a+ psi_{nm} = sqrt(n) psi_{n-1,m+1}
//   a- psi_{nm} = sqrt(n+m+s) psi_{n,m-1}
//   abar+ psi_{nm} = sqrt(n+m+s+1) psi_{n,m+1}
//   abar- psi_{nm} = sqrt(n+1) psi_{n+1,m-1}
// Lowering below the n+m+s >= 0 line yields the NonFock target (on the
// s-ground state: coefficient sqrt(s)).  Throws LabelError on invalid labels
// and UnsupportedError for 3D s=1/2 labels, which have no ladder
// representation.
SymbolicAction apply_symbolic(const LadderOp& op, const StateLabel& label);

// Index action on occupation (zeta) labels.  O2 uses (alpha, beta); the 3D
// s=0 families add gamma for the parallel mode.  Conjugate pairs are
// (a+, abar-) and (a-, abar+):
//   abar+ : sqrt(s+alpha+1) -> alpha+1        a- : sqrt(s+alpha) -> alpha-1
//   abar- : sqrt(beta+1)    -> beta+1         a+ : sqrt(beta)    -> beta-1
//   abar|| : sqrt(gamma+1)  -> gamma+1        a|| : sqrt(gamma)  -> gamma-1
// Lowering alpha = 0 with s != 0 exits the Fock space (NonFock target,
// coefficient sqrt(s)).
ZetaAction apply_symbolic(const LadderOp& op, const ZetaLabel& label);

// Occupation vector for the Cartesian mode algebra.  Slot 0 is the timelike
// mode under KimNoz (actual n^0 >= 1) and FKR (count k = -n^0 >= 0); all
// slots are spatial under Euclidean.
struct Occupation {
  std::vector<int> n;
};

struct OccupationAction {
  double coeff = 0.0;
  bool zero = true;
  Occupation out{};
};

// Single-mode ladder action with convention-dependent coefficient.  Throws
// LabelError for occupations outside the convention's domain.
OccupationAction apply_cartesian(const LadderOp& op, const Occupation& occ);

// H/omega for an occupation under the convention:
//   Euclidean : sum n + D/2
//   KimNoz    : -n0 + sum_spatial + D/2   (indefinite)
//   FKR       : +k  + sum_spatial + D/2   (positive; the i phases flip the
//               sign of the timelike number term against eta00)
double occupation_energy(PhaseConvention c, const Occupation& occ);

// Value of (op f) at p via the explicit polar differential form, derivatives
// by 4th-order central differences (step 1e-4, shrunk near coordinate
// boundaries so stencils stay in-domain).  Throws DomainError when rho is at
// the axis.
Complex apply_differential(const LadderOp& op,
                           const std::function<Complex(const CoordPoint&)>& f,
                           const CoordPoint& p);

// Same, but exact (no differencing) for O2 states via the closed polar
// family; 3D states fall back to differencing of the closed-form amplitude.
Complex apply_differential(const LadderOp& op, const states::OscillatorState& st,
                           const CoordPoint& p);

// ---- operator maps on the closed O2 polar family ----

using PolarOp = std::function<PolarFun(const PolarFun&)>;

PolarOp ladder_map(LadderKind kind);  // one of the four O2 polar operators
PolarOp compose(PolarOp outer, PolarOp inner);
PolarOp op_sum(PolarOp a, PolarOp b);
PolarOp op_scale(Complex z, PolarOp a);
PolarOp scalar_map(Complex z);  // z * identity

PolarOp number_map();  // N = abar+ a- + abar- a+
PolarOp m_map();       // M = abar+ a- - abar- a+
PolarOp delta_map();   // Delta = abar+ a+ + abar- a-
PolarOp q_map();       // Q = -i (abar+ a+ - abar- a-)

// Exact L2 inner product / norm of closed-family functions over
// rho drho dphi (Gamma-function moments; no quadrature error).
Complex polar_inner(const PolarFun& f, const PolarFun& g);
double polar_norm(const PolarFun& f);

// max over probes of ||(AB - BA - expected) f|| / ||f||.
double commutator_residual(const PolarOp& a, const PolarOp& b,
                           const PolarOp& expected,
                           const std::vector<PolarFun>& probes);
double commutator_residual(const PolarOp& a, const PolarOp& b, Complex expected,
                           const std::vector<PolarFun>& probes);

// ---- SU(2) generator blocks ----

// Occupation basis alpha+beta = N in descending alpha: (N,0), (N-1,1), ...
std::vector<ZetaLabel> zeta_basis_o2(int N, double s = 0.0);

// The three Hermitian generators (M/2, Delta/2, Q/2) on an s=0 fixed-N
// block; they close under commutation with Casimir N(N+2)/4.  Throws
// BasisError for mixed-N or s != 0 bases.
struct Su2Generators {
  std::vector<ZetaLabel> basis;
  Eigen::MatrixXcd half_m, half_delta, half_q;
};

Su2Generators su2_generators(const std::vector<ZetaLabel>& basis);

// ---- angular (l, m) ladders of the 3D families ----

// Coefficient and target m of the angular raising (which = +1) / lowering
// (which = -1) operator:
//   s=0   : coeff sqrt((l -+ m)(l +- m + 1)), m' = m +- 1 (zero at the edges)
//   s=1/2 : L+ coeff m+1-l, L- coeff -(l+m), acting on the Legendre degree m;
//           unbounded above, and L- annihilates the lower edge m = l.
struct AngularShift {
  double coeff = 0.0;
  int m_out = 0;
};

AngularShift angular_raise_lower(GroupKind group, double s, int which, int l, int m);

// ---- broken SU(2) on the s != 0 ground state ----

// Delta psi0 - s [(x^2+y^2-s+1)/(x+iy)^2] psi0 at (x, y): identically zero,
// while the bracket itself is nonzero for s != 0 (the ground state fails to
// be a Delta eigenstate).  Throws DomainError at the origin.
Complex delta_ground_residual(double s, double x, double y);

// Q psi0 - i (Delta psi0) at (x, y): identically zero for every s.
Complex q_ground_residual(double s, double x, double y);

}  // namespace oscalg::ops
