// Shared domain types: symmetry groups, state labels, coordinates, errors.

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace oscalg {

using Complex = std::complex<double>;

// The three symmetry groups of the isotropic oscillator treated here.
// O2  : 2D oscillator, angular group O(2)
// O3  : 3D oscillator, angular group O(3)
// O21 : 2+1D oscillator restricted to the spacelike sector x^2+y^2-t^2 > 0
enum class GroupKind { O2, O3, O21 };

inline const char* group_name(GroupKind g) {
  switch (g) {
    case GroupKind::O2: return "o2";
    case GroupKind::O3: return "o3";
    case GroupKind::O21: return "o21";
  }
  return "?";
}

// Label of one eigenstate.
//
//   group : symmetry group
//   s     : angular offset splitting the representation family
//           (O2: any 0 <= s < 1; O3/O21: s in {0, 1/2})
//   n     : radial (principal) quantum number, n >= 0
//   l     : 3D Casimir label (unused for O2; for s=1/2 the Legendre *order*)
//   m     : angular momentum label (azimuthal eigenvalue is m+s;
//           for the s=1/2 families also the Legendre *degree*, so m >= l)
struct StateLabel {
  GroupKind group = GroupKind::O2;
  double s = 0.0;
  int n = 0;
  int l = 0;
  int m = 0;
};

// Occupation-number label of an excited state built by creation operators
// on a ground state: alpha/beta count the two circular quanta, gamma the
// parallel (z or t) quanta in 3D.
struct ZetaLabel {
  int alpha = 0;
  int beta = 0;
  int gamma = 0;  // 3D only; keep 0 for O2
  double s = 0.0;
};

// Point in the group's polar coordinates.
//   rho : radial coordinate, >= 0     (for O21: rho^2 = x^2+y^2-t^2)
//   phi : azimuthal angle in [0, 2*pi)
//   aux : theta in [0, pi] for O3, rapidity beta in R for O21, unused for O2
struct CoordPoint {
  double rho = 0.0;
  double phi = 0.0;
  double aux = 0.0;
};

// Error taxonomy. All library failures derive from std::exception via these.
struct LabelError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};
struct BasisError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct UnsupportedError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace oscalg
