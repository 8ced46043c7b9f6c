// Eigenstate construction: label admissibility, closed-form energies and
// normalizations, pointwise values against independently generated
// references, the radial x angular x azimuthal factorization, and the
// angular differential equations each family solves.

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "oscalg/specfun.hpp"
#include "oscalg/states.hpp"
#include "reference_values.hpp"

using namespace oscalg;
using std::numbers::pi;

namespace {

// Reassembles a state value from the exposed factor interfaces; must agree
// with eval_state wherever both are defined.
Complex assembled(const StateLabel& lb, const CoordPoint& p) {
  const states::OscillatorState st = states::make_state(lb);
  const double x = p.rho * p.rho;
  const double radial = st.norm_const *
                        std::pow(p.rho, states::radial_exponent(lb)) *
                        specfun::laguerre(lb.n, states::laguerre_order(lb), x) *
                        std::exp(-0.5 * x);
  return radial * states::angular_factor(lb, p.aux) *
         std::polar(1.0, states::azimuthal_frequency(lb) * p.phi);
}

}  // namespace

TEST_SUITE("states") {

TEST_CASE("label admissibility per family") {
  // O2: any 0 <= s < 1 with n >= 0 and n+m+s >= 0.
  CHECK(states::validate_label({GroupKind::O2, 0.0, 3, 0, -3}));
  CHECK_FALSE(states::validate_label({GroupKind::O2, 0.0, 3, 0, -4}));
  CHECK(states::validate_label({GroupKind::O2, 0.5, 2, 0, -2}));
  CHECK_FALSE(states::validate_label({GroupKind::O2, 0.5, 2, 0, -3}));
  CHECK_FALSE(states::validate_label({GroupKind::O2, 1.0, 0, 0, 0}));
  CHECK_FALSE(states::validate_label({GroupKind::O2, -0.1, 0, 0, 0}));
  CHECK_FALSE(states::validate_label({GroupKind::O2, 0.0, -1, 0, 5}));

  // 3D s=0: |m| <= l.
  CHECK(states::validate_label({GroupKind::O3, 0.0, 1, 2, -2}));
  CHECK_FALSE(states::validate_label({GroupKind::O3, 0.0, 1, 2, 3}));
  CHECK_FALSE(states::validate_label({GroupKind::O21, 0.0, 0, -1, 0}));

  // 3D s=1/2: reversed roles, m >= l >= 0.
  CHECK(states::validate_label({GroupKind::O3, 0.5, 0, 1, 4}));
  CHECK_FALSE(states::validate_label({GroupKind::O3, 0.5, 0, 2, 1}));
  CHECK_FALSE(states::validate_label({GroupKind::O21, 0.5, 0, 1, -1}));
  CHECK_FALSE(states::validate_label({GroupKind::O3, 0.25, 0, 0, 0}));
}

TEST_CASE("closed-form energy ladder") {
  CHECK(states::energy({GroupKind::O2, 0.0, 0, 0, 0}) == 1.0);
  CHECK(states::energy({GroupKind::O2, 0.25, 2, 0, 1}) == 6.25);
  CHECK(states::energy({GroupKind::O2, 0.5, 1, 0, -1}) == 2.5);
  CHECK(states::energy({GroupKind::O3, 0.0, 0, 0, 0}) == 1.5);
  CHECK(states::energy({GroupKind::O3, 0.0, 2, 3, -1}) == 8.5);
  CHECK(states::energy({GroupKind::O21, 0.0, 1, 1, 0}) == 4.5);
  CHECK(states::energy({GroupKind::O3, 0.5, 0, 0, 0}) == 1.0);
  CHECK(states::energy({GroupKind::O21, 0.5, 1, 2, 3}) == 5.0);
  CHECK_THROWS_AS(states::energy({GroupKind::O2, 0.0, -2, 0, 0}), LabelError);
}

TEST_CASE("radial normalizations match the reference table") {
  for (const auto& r : refvals::o2_norm_ref) {
    const double got = states::normalization_2d(r.n, r.m, r.s);
    if (r.value == 0.0)
      CHECK(got == 0.0);  // excluded zero-norm family n=0, m+s<0
    else
      CHECK(got == doctest::Approx(r.value).epsilon(1e-14));
  }
  // 3D: (-1)^n sqrt(2 n! / Gamma(n+l+3/2)) and sqrt(2 n! / Gamma(n+l+1)).
  CHECK(states::normalization_3d(0, 0, 0.0) ==
        doctest::Approx(std::sqrt(2.0 / std::tgamma(1.5))).epsilon(1e-14));
  CHECK(states::normalization_3d(1, 2, 0.0) ==
        doctest::Approx(-std::sqrt(2.0 / std::tgamma(4.5))).epsilon(1e-14));
  CHECK(states::normalization_3d(2, 1, 0.5) ==
        doctest::Approx(std::sqrt(2.0 * 2.0 / std::tgamma(4.0))).epsilon(1e-14));
}

TEST_CASE("O2 state values match the reference table") {
  for (const auto& r : refvals::o2_state_ref) {
    const Complex got =
        states::eval_state({GroupKind::O2, r.s, r.n, 0, r.m}, {r.rho, r.phi, 0.0});
    CHECK(got.real() == doctest::Approx(r.re).epsilon(1e-13));
    CHECK(got.imag() == doctest::Approx(r.im).epsilon(1e-13));
  }
}

TEST_CASE("O3 s=0 state values match the reference table") {
  for (const auto& r : refvals::o3_state_ref) {
    const Complex got = states::eval_state({GroupKind::O3, 0.0, r.n, r.l, r.m},
                                           {r.rho, r.phi, r.theta});
    CHECK(got.real() == doctest::Approx(r.re).epsilon(1e-13));
    CHECK(got.imag() == doctest::Approx(r.im).epsilon(1e-13));
  }
}

TEST_CASE("spherical-harmonic conjugation symmetry for negative m") {
  // psi_{n,l,-m}(rho,theta,phi) = (-1)^m conj(psi_{n,l,m}(rho,theta,phi))
  for (int l = 1; l <= 3; ++l) {
    for (int m = 1; m <= l; ++m) {
      const CoordPoint p{1.15, 0.8, 1.95};
      const Complex plus = states::eval_state({GroupKind::O3, 0.0, 1, l, m}, p);
      const Complex minus = states::eval_state({GroupKind::O3, 0.0, 1, l, -m}, p);
      const double sign = (m % 2) ? -1.0 : 1.0;
      CHECK(minus.real() == doctest::Approx(sign * plus.real()).epsilon(1e-12));
      CHECK(minus.imag() == doctest::Approx(-sign * plus.imag()).epsilon(1e-12));
    }
  }
}

TEST_CASE("O21 state values match the reference table") {
  for (const auto& r : refvals::o21_state_ref) {
    const double s = 0.5 * r.s2;
    const Complex got = states::eval_state({GroupKind::O21, s, r.n, r.l, r.m},
                                           {r.rho, r.phi, r.beta});
    CHECK(got.real() == doctest::Approx(r.re).epsilon(1e-13));
    CHECK(got.imag() == doctest::Approx(r.im).epsilon(1e-13));
  }
}

TEST_CASE("O3 s=1/2 state values match the reference table") {
  for (const auto& r : refvals::o3_half_state_ref) {
    const Complex got = states::eval_state({GroupKind::O3, 0.5, r.n, r.l, r.m},
                                           {r.rho, r.phi, r.theta});
    CHECK(got.real() == doctest::Approx(r.re).epsilon(1e-13));
    CHECK(got.imag() == doctest::Approx(r.im).epsilon(1e-13));
  }
}

TEST_CASE("excluded zero-norm labels evaluate to the zero function") {
  const StateLabel lb{GroupKind::O2, 0.5, 0, 0, -1};
  CHECK_FALSE(states::validate_label(lb));
  CHECK(states::eval_state(lb, {1.2, 0.7, 0.0}) == Complex{0.0, 0.0});
  CHECK(states::make_state(lb).norm_const == 0.0);
}

TEST_CASE("state factorization: radial x angular x azimuthal") {
  const StateLabel cases[] = {
      {GroupKind::O2, 0.25, 2, 0, 1},   {GroupKind::O2, 0.0, 1, 0, -1},
      {GroupKind::O3, 0.0, 1, 2, -1},   {GroupKind::O3, 0.5, 0, 1, 2},
      {GroupKind::O21, 0.0, 1, 2, 1},   {GroupKind::O21, 0.5, 1, 1, 1},
  };
  for (const StateLabel& lb : cases) {
    const double aux = (lb.group == GroupKind::O3) ? 1.2 : 0.6;
    const CoordPoint p{1.35, 2.9, aux};
    const Complex direct = states::eval_state(lb, p);
    const Complex factored = assembled(lb, p);
    CHECK(std::abs(direct - factored) < 1e-13 * std::max(1.0, std::abs(direct)));
  }
}

TEST_CASE("scaled evaluation strips exactly the Gaussian envelope") {
  const states::OscillatorState st =
      states::make_state({GroupKind::O3, 0.0, 1, 1, 1});
  const CoordPoint p{3.5, 1.0, 0.9};
  CHECK(std::abs(st.scaled_eval(p) * std::exp(-0.5 * p.rho * p.rho) - st.eval(p)) <
        1e-15);
}

TEST_CASE("Cartesian ground-state route agrees with the polar chart") {
  // O2 at (x, y) = (0.9, -0.4)
  {
    const double x = 0.9, y = -0.4;
    const double rho = std::hypot(x, y), phi = states::azimuth(x, y);
    for (double s : {0.0, 0.25, 0.5}) {
      const StateLabel lb{GroupKind::O2, s, 0, 0, 0};
      CHECK(std::abs(states::cartesian_form(lb, x, y, 0.0) -
                     states::eval_state(lb, {rho, phi, 0.0})) < 1e-13);
    }
  }
  // O3 at (x, y, z) = (0.5, 0.7, -0.6)
  {
    const double x = 0.5, y = 0.7, z = -0.6;
    const double rho = std::sqrt(x * x + y * y + z * z);
    const double theta = std::acos(z / rho), phi = states::azimuth(x, y);
    for (double s : {0.0, 0.5}) {
      const StateLabel lb{GroupKind::O3, s, 0, 0, 0};
      CHECK(std::abs(states::cartesian_form(lb, x, y, z) -
                     states::eval_state(lb, {rho, phi, theta})) < 1e-13);
    }
  }
  // O21 at spacelike (x, y, t) = (1.0, 0.3, 0.8)
  {
    const double x = 1.0, y = 0.3, t = 0.8;
    const double rho = std::sqrt(x * x + y * y - t * t);
    const double beta = std::asinh(t / rho), phi = states::azimuth(x, y);
    for (double s : {0.0, 0.5}) {
      const StateLabel lb{GroupKind::O21, s, 0, 0, 0};
      CHECK(std::abs(states::cartesian_form(lb, x, y, t) -
                     states::eval_state(lb, {rho, phi, beta})) < 1e-13);
    }
  }
  // Outside the spacelike sector the O21 chart does not exist.
  CHECK_THROWS_AS(
      states::cartesian_form({GroupKind::O21, 0.0, 0, 0, 0}, 0.3, 0.2, 1.0),
      DomainError);
}

TEST_CASE("azimuth maps all quadrants into [0, 2 pi)") {
  CHECK(states::azimuth(1.0, 0.0) == doctest::Approx(0.0));
  CHECK(states::azimuth(0.0, 1.0) == doctest::Approx(pi / 2));
  CHECK(states::azimuth(-1.0, 0.0) == doctest::Approx(pi));
  CHECK(states::azimuth(1.0, -1.0) == doctest::Approx(7 * pi / 4));
  CHECK(states::azimuth(0.0, -2.0) == doctest::Approx(3 * pi / 2));
}

TEST_CASE("angular factors solve the O(3) polar equation") {
  // -(1/sin)(sin T')' + mu^2 T / sin^2 = p(p+1) T  with p the radial
  // exponent: l(l+1) for s=0 and l^2 - 1/4 for s=1/2.
  const double h = 1e-3;
  const StateLabel cases[] = {{GroupKind::O3, 0.0, 0, 2, 1},
                              {GroupKind::O3, 0.0, 0, 3, -2},
                              {GroupKind::O3, 0.5, 0, 1, 2},
                              {GroupKind::O3, 0.5, 0, 0, 1}};
  for (const StateLabel& lb : cases) {
    const double mu = states::azimuthal_frequency(lb);
    const double p = states::radial_exponent(lb);
    const double lambda2 = p * (p + 1.0);
    for (double th : {0.7, 1.4, 2.3}) {
      auto T = [&](double t) { return states::angular_factor(lb, t); };
      const double t0 = T(th);
      const double d1 = (T(th + h) - T(th - h)) / (2 * h);
      const double d2 = (T(th + h) - 2 * t0 + T(th - h)) / (h * h);
      const double lhs = -(d2 + std::cos(th) / std::sin(th) * d1) +
                         mu * mu / (std::sin(th) * std::sin(th)) * t0;
      CHECK(std::abs(lhs - lambda2 * t0) < 2e-4 * std::max(1.0, std::abs(t0)));
    }
  }
}

TEST_CASE("angular factors solve the O(2,1) rapidity equation") {
  // +(1/cosh)(cosh B')' + mu^2 B / cosh^2 = p(p+1) B; the hyperbolic
  // signature flips both non-eigenvalue signs relative to O(3).
  const double h = 1e-3;
  const StateLabel cases[] = {{GroupKind::O21, 0.0, 0, 2, 1},
                              {GroupKind::O21, 0.0, 0, 1, 0},
                              {GroupKind::O21, 0.5, 0, 1, 2},
                              {GroupKind::O21, 0.5, 0, 2, 2}};
  for (const StateLabel& lb : cases) {
    const double mu = states::azimuthal_frequency(lb);
    const double p = states::radial_exponent(lb);
    const double lambda2 = p * (p + 1.0);
    for (double be : {-1.1, 0.4, 0.9}) {
      auto T = [&](double t) { return states::angular_factor(lb, t); };
      const double t0 = T(be);
      const double d1 = (T(be + h) - T(be - h)) / (2 * h);
      const double d2 = (T(be + h) - 2 * t0 + T(be - h)) / (h * h);
      const double ch = std::cosh(be);
      const double lhs = (d2 + std::tanh(be) * d1) + mu * mu / (ch * ch) * t0;
      CHECK(std::abs(lhs - lambda2 * t0) < 2e-4 * std::max(1.0, std::abs(t0)));
    }
  }
}

TEST_CASE("non-Fock companion of the O2 s-ground state") {
  const double s = 0.25;
  const states::OscillatorState nf = states::non_fock_state(s);
  CHECK(nf.non_fock);
  const CoordPoint p{0.8, 1.3, 0.0};
  const Complex expect = std::sqrt(1.0 / (pi * std::tgamma(s))) *
                         std::exp(-0.5 * p.rho * p.rho) *
                         std::pow(p.rho, s - 1.0) *
                         std::polar(1.0, (s - 1.0) * p.phi);
  CHECK(std::abs(nf.eval(p) - expect) < 1e-14);
}

TEST_CASE("ground multiplet selection") {
  // s=1/2 grounds are infinitely degenerate in m; s=0 grounds are unique.
  const states::OscillatorState g3 = states::ground_state(GroupKind::O3, 0.5, 3);
  CHECK(g3.label.m == 3);
  CHECK(g3.energy == 1.0);
  CHECK_THROWS_AS(states::ground_state(GroupKind::O3, 0.0, 1), LabelError);
  CHECK(states::ground_state(GroupKind::O2, 0.25, 0).energy ==
        doctest::Approx(1.25));
}

}  // TEST_SUITE
