// Fock-space enumeration and representation-theoretic structure: the map
// from occupation (zeta) labels to eigenstate labels, level multiplicities,
// the l-content of a mode level, fixed-(N, m) Casimir blocks, the Delta
// block whose diagonalization recovers the Cartesian description (and the
// obstruction to it when s != 0), and irreducible tensor creation operators
// assembled by Clebsch-Gordan recursion.

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "oscalg/gausspoly.hpp"
#include "oscalg/states.hpp"
#include "oscalg/types.hpp"

namespace oscalg::alg {

// zeta_{alpha beta} = N_{alpha beta} psi_{n = beta, m = alpha - beta} with
// N_{alpha beta} = sqrt(beta! Gamma(s+alpha+1) / Gamma(s+1))  (= sqrt(alpha! beta!) at s=0).
struct ZetaStateMap {
  StateLabel label;
  double normalization = 1.0;
};

ZetaStateMap zeta_to_state_2d(const ZetaLabel& z);

// Number of states at total mode number N:
//   O2        : N - s + 1            (N - s must be a non-negative integer)
//   3D s = 0  : (N+1)(N+2)/2
//   3D s = 1/2: infinite (finite = false)
struct Multiplicity {
  long count = 0;
  bool finite = true;
};

Multiplicity multiplicity(GroupKind group, double N, double s);

// l values contained in the 3D s=0 level N: {N, N-2, ..., 1 or 0}.  Their
// (2l+1) degeneracies sum to the level multiplicity, and n = (N - l)/2
// reproduces the radial label of each eigenstate in the level.
std::vector<int> casimir_content(int N);

// A symmetry operator restricted to a finite occupation basis.
struct OperatorBlock {
  std::vector<ZetaLabel> basis;
  Eigen::MatrixXcd entries;
};

// M^2 on the basis {zeta_{alpha beta gamma} : alpha+beta+gamma = N,
// alpha-beta = m}, ordered by ascending gamma.  Occupation states are not
// M^2 eigenstates; the block has diagonal N(N+1) - 4 alpha beta - gamma(gamma-1)
// and couplings
//   -2 sqrt(alpha beta (gamma+1)(gamma+2))     -> (alpha-1, beta-1, gamma+2)
//   -2 sqrt((alpha+1)(beta+1) gamma (gamma-1)) -> (alpha+1, beta+1, gamma-2),
// and its eigenvalues are exactly {l(l+1) : l in casimir_content(N), l >= |m|}.
// Throws LabelError when |m| > N (empty basis).
OperatorBlock msq_block(int N, int m);

// Delta = abar+ a+ + abar- a- on the O2 basis alpha+beta = N (descending
// alpha).  Moving Delta through the creation strings onto the ground state
// gives matrix elements
//   sqrt(beta (s+alpha+1))          -> (alpha+1, beta-1)
//   alpha sqrt((beta+1) / (s+alpha)) -> (alpha-1, beta+1)
// plus, when s != 0, a leftover (abar+)^alpha (abar-)^beta Delta psi0 term
// per column (psi0 is then not a Delta eigenstate); ground_residual reports
// it.  At s = 0 the block is symmetric with eigenvalues {N, N-2, ..., -N},
// the Cartesian mode-number differences.
struct DeltaBlock {
  OperatorBlock block;
  bool ground_residual = false;
};

DeltaBlock delta_block(int N, double s);

// Monomial in the commuting creation operators abar+, abar_par, abar- with a
// complex coefficient.
struct TensorTerm {
  Complex coeff{0.0, 0.0};
  int p_plus = 0, p_par = 0, p_minus = 0;
};

struct TensorOperator {
  int j = 0;
  int m = 0;
  std::vector<TensorTerm> terms;
};

// Rank-j irreducible creation tensor, built from the fundamental multiplet
// (abar-, abar_par, -abar+) (components ordered by M-eigenvalue -1, 0, +1)
// by repeated stretched Clebsch-Gordan products (j-1) x 1 -> j.  j = 0 gives
// the 1 x 1 -> 0 singlet -(1/sqrt 3)(2 abar+ abar- + abar_par^2).  Throws
// LabelError for |m| > j or j < 0.
TensorOperator tensor_operator(int j, int m);

// Applies the tensor's creation monomials exactly to a 3D s=0 ground state
// within the polynomial-times-Gaussian family.  The j=1 multiplet reproduces
// the vector of first excited states, and higher-j components land on the
// (n=0, l=j, m) eigenstates.  Throws UnsupportedError for s=1/2 grounds
// (no creation-operator representation exists there, so the construction
// fails at the first application) and LabelError for non-ground input.
ops::GaussianPoly build_excited(const TensorOperator& tensor,
                                const states::OscillatorState& ground);

}  // namespace oscalg::alg
