#pragma once
// Exact polynomial-times-Gaussian functions on Cartesian coordinates.
//
// Chains of creation operators applied to a Gaussian ground state stay inside
// the closed family P(x1,x2,x3) * exp(G), where G = -(x^2+y^2+z^2)/2 for the
// Euclidean groups and G = -(x^2+y^2-t^2)/2 on the spacelike sector for the
// hyperbolic one (the third slot then holds t).  Keeping the polynomial factor
// exact sidesteps the noise floor of nested finite differences when operators
// are composed.

#include <array>
#include <map>

#include "oscalg/types.hpp"

namespace oscalg::ops {

struct GaussianPoly {
  using Monomial = std::array<int, 3>;  // exponents of (x, y, z-or-t)

  std::map<Monomial, Complex> coeffs;
  bool hyperbolic = false;  // Gaussian carries +t^2/2 in the third slot

  // The polynomial factor alone.
  Complex poly_eval(const std::array<double, 3>& xyz) const;
  // Polynomial times the Gaussian.
  Complex eval(const std::array<double, 3>& xyz) const;

  GaussianPoly& operator+=(const GaussianPoly& other);
  GaussianPoly& operator*=(Complex z);
  bool is_zero() const;
};

GaussianPoly operator+(GaussianPoly a, const GaussianPoly& b);
GaussianPoly operator-(GaussianPoly a, const GaussianPoly& b);
GaussianPoly operator*(Complex z, GaussianPoly f);

// P -> x_k P and P -> dP/dx_k (polynomial part only).
GaussianPoly mul_coord(const GaussianPoly& f, int k);
GaussianPoly diff_poly(const GaussianPoly& f, int k);

// Creation / annihilation along axis k in {0,1,2}.  A Euclidean axis uses
// (x_k -+ d_k)/sqrt(2); the hyperbolic third axis uses (t + d_t)/sqrt(2) to
// create and (t - d_t)/sqrt(2) to annihilate, so [a, abar] = -1 there.  The
// Gaussian factor is differentiated implicitly.
GaussianPoly create(const GaussianPoly& f, int k);
GaussianPoly annihilate(const GaussianPoly& f, int k);

// Circular (phase-definite) creation operators: abar_{+,-} = (abar_x +-
// i abar_y)/sqrt(2), raising the angular quantum number by +-1.
GaussianPoly create_circular(const GaussianPoly& f, int sign);

// Unit-coefficient ground Gaussian for the group.
GaussianPoly gaussian_ground(GroupKind g);

// (rho, phi, aux) -> (x, y, z or t) for the group's coordinate chart.
std::array<double, 3> to_cartesian(GroupKind g, const CoordPoint& pt);

// Value at a polar point with the Gaussian exp(-rho^2/2) stripped, matching
// the convention of the quadrature weights (exp(G) = exp(-rho^2/2) in every
// chart, including the hyperbolic one where rho^2 = x^2+y^2-t^2).
Complex scaled_eval(const GaussianPoly& f, GroupKind g, const CoordPoint& pt);

// integral of x^k exp(-a x^2) dx over the real line (a > 0).
double gaussian_moment(int k, double a);

}  // namespace oscalg::ops
