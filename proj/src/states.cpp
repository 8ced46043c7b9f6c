#include "oscalg/states.hpp"

#include <cmath>
#include <numbers>

#include "oscalg/specfun.hpp"

namespace oscalg::states {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_half(double s) { return s == 0.5; }

// Unit-normalized spherical harmonic prefactor
// sqrt((2l+1)/(4 pi) * (l-m)!/(l+m)!); one of the two loops is empty
// depending on the sign of m.
double sph_harm_prefactor(int l, int m) {
  double ratio = 1.0;
  for (int k = l - m + 1; k <= l + m; ++k) ratio /= k;
  for (int k = l + m + 1; k <= l - m; ++k) ratio *= k;
  return std::sqrt((2.0 * l + 1.0) / (4.0 * kPi) * ratio);
}

bool excluded_zero_norm_o2(const StateLabel& lb) {
  return lb.group == GroupKind::O2 && lb.n == 0 && lb.m + lb.s < 0.0 &&
         lb.s >= 0.0 && lb.s < 1.0;
}

void check_point(GroupKind group, const CoordPoint& p) {
  if (!(p.rho >= 0.0) || !std::isfinite(p.rho) || !std::isfinite(p.phi) ||
      !std::isfinite(p.aux))
    throw DomainError("eval_state: coordinates out of range");
  if (group == GroupKind::O3 && (p.aux < 0.0 || p.aux > kPi))
    throw DomainError("eval_state: theta outside [0, pi]");
}

}  // namespace

bool validate_label(const StateLabel& lb) {
  if (lb.n < 0) return false;
  switch (lb.group) {
    case GroupKind::O2:
      return lb.s >= 0.0 && lb.s < 1.0 && lb.n + lb.m + lb.s >= 0.0;
    case GroupKind::O3:
    case GroupKind::O21:
      if (lb.s == 0.0) return lb.l >= 0 && std::abs(lb.m) <= lb.l;
      if (is_half(lb.s)) return lb.l >= 0 && lb.m >= lb.l;
      return false;
  }
  return false;
}

double energy(const StateLabel& lb) {
  if (!validate_label(lb)) throw LabelError("energy: invalid state label");
  if (lb.group == GroupKind::O2) return 2.0 * lb.n + lb.m + lb.s + 1.0;
  return 2.0 * lb.n + lb.l + 1.5 - lb.s;
}

double normalization_2d(int n, int m, double s) {
  if (n == 0 && m + s < 0.0) return 0.0;
  double fact = 1.0;
  for (int k = 2; k <= n; ++k) fact *= k;
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sign * std::sqrt(fact / (kPi * std::tgamma(n + m + s + 1.0)));
}

double normalization_3d(int n, int l, double s) {
  double fact = 1.0;
  for (int k = 2; k <= n; ++k) fact *= k;
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  const double arg = is_half(s) ? (n + l + 1.0) : (n + l + 1.5);
  return sign * std::sqrt(2.0 * fact / std::tgamma(arg));
}

double radial_exponent(const StateLabel& lb) {
  if (lb.group == GroupKind::O2) return lb.m + lb.s;
  return is_half(lb.s) ? lb.l - 0.5 : static_cast<double>(lb.l);
}

double laguerre_order(const StateLabel& lb) {
  if (lb.group == GroupKind::O2) return lb.m + lb.s;
  return is_half(lb.s) ? static_cast<double>(lb.l) : lb.l + 0.5;
}

namespace {

// Radial factor with the Gaussian envelope stripped: A rho^p L_n^a(rho^2).
double scaled_radial(const StateLabel& lb, double A, double rho) {
  const double p = radial_exponent(lb);
  const double a = laguerre_order(lb);
  return A * std::pow(rho, p) * specfun::laguerre(lb.n, a, rho * rho);
}

}  // namespace

double azimuthal_frequency(const StateLabel& lb) {
  if (lb.group == GroupKind::O2) return lb.m + lb.s;
  return is_half(lb.s) ? lb.m + 0.5 : static_cast<double>(lb.m);
}

double angular_factor(const StateLabel& lb, double aux) {
  switch (lb.group) {
    case GroupKind::O2:
      return 1.0;
    case GroupKind::O3:
      if (is_half(lb.s)) {
        // Reversed-role family: degree m, order l, argument cot(theta).
        const double st = std::sin(aux);
        if (st <= 0.0)
          throw DomainError("eval_state: theta at a coordinate pole");
        return specfun::legendre_phat(lb.m, lb.l, std::cos(aux) / st) /
               std::sqrt(st);
      }
      return sph_harm_prefactor(lb.l, lb.m) *
             specfun::legendre_p(lb.l, lb.m, std::cos(aux));
    case GroupKind::O21:
      if (is_half(lb.s))
        return specfun::legendre_p(lb.m, lb.l, std::tanh(aux)) /
               std::sqrt(std::cosh(aux));
      return specfun::legendre_phat(lb.l, lb.m, std::sinh(aux));
  }
  return 0.0;
}

namespace {

// Angular factor (everything except the radial part and the Gaussian).
Complex angular_part(const StateLabel& lb, const CoordPoint& pt) {
  return angular_factor(lb, pt.aux) *
         std::polar(1.0, azimuthal_frequency(lb) * pt.phi);
}

}  // namespace

Complex OscillatorState::scaled_eval(const CoordPoint& p) const {
  check_point(label.group, p);
  if (norm_const == 0.0) return {};
  return scaled_radial(label, norm_const, p.rho) * angular_part(label, p);
}

Complex OscillatorState::eval(const CoordPoint& p) const {
  return scaled_eval(p) * std::exp(-0.5 * p.rho * p.rho);
}

OscillatorState make_state(const StateLabel& lb) {
  if (excluded_zero_norm_o2(lb)) {
    // Representable label with zero normalization: evaluates to the zero
    // function so ladder chains can land on it transiently.  It still carries
    // the formal label energy, matching the non-Fock state at the same label.
    return {lb, 0.0, 2.0 * lb.n + lb.m + lb.s + 1.0, false};
  }
  if (!validate_label(lb)) throw LabelError("make_state: invalid state label");
  OscillatorState st;
  st.label = lb;
  st.norm_const = lb.group == GroupKind::O2
                      ? normalization_2d(lb.n, lb.m, lb.s)
                      : normalization_3d(lb.n, lb.l, lb.s);
  st.energy = energy(lb);
  return st;
}

Complex eval_state(const StateLabel& lb, const CoordPoint& p) {
  return make_state(lb).eval(p);
}

OscillatorState ground_state(GroupKind group, double s, int m0) {
  const bool half_family = (group != GroupKind::O2) && is_half(s);
  if (!half_family && m0 != 0)
    throw LabelError("ground_state: m0 must be 0 outside the s=1/2 families");
  if (half_family && m0 < 0)
    throw LabelError("ground_state: ground multiplet index must be >= 0");
  StateLabel lb{group, s, 0, 0, half_family ? m0 : 0};
  return make_state(lb);
}

OscillatorState non_fock_state(double s) {
  if (!(s > 0.0 && s < 1.0))
    throw LabelError("non_fock_state: requires 0 < s < 1");
  OscillatorState st;
  st.label = StateLabel{GroupKind::O2, s, 0, 0, -1};
  st.norm_const = std::sqrt(1.0 / (kPi * std::tgamma(s)));
  st.energy = s;  // formally 2n+m+s+1 at n=0, m=-1
  st.non_fock = true;
  return st;
}

double azimuth(double x, double y) {
  double phi = std::atan2(y, x);
  if (phi < 0.0) phi += 2.0 * kPi;
  return phi;
}

Complex cartesian_form(const StateLabel& lb, double x, double y, double aux) {
  const bool half_family = (lb.group != GroupKind::O2) && is_half(lb.s);
  const bool is_ground = lb.n == 0 && lb.l == 0 && (half_family || lb.m == 0);
  if (!is_ground)
    throw UnsupportedError(
        "cartesian_form: only ground-state labels have a closed Cartesian "
        "display");

  const double r2_xy = x * x + y * y;
  switch (lb.group) {
    case GroupKind::O2: {
      const double A = normalization_2d(0, 0, lb.s);
      const Complex phase = std::polar(1.0, lb.s * azimuth(x, y));
      return A * std::exp(-0.5 * r2_xy) * std::pow(r2_xy, 0.5 * lb.s) * phase;
    }
    case GroupKind::O3: {
      const double r2 = r2_xy + aux * aux;
      if (lb.s == 0.0) {
        const double A = normalization_3d(0, 0, 0.0) / std::sqrt(4.0 * kPi);
        return A * std::exp(-0.5 * r2);
      }
      // s=1/2 ground multiplet member m0 = lb.m:
      //   rho^{-1/2} Phat_{m0}^0(z/r_xy) / sqrt(r_xy/rho) e^{i(m0+1/2)phi}
      // with rho the 3D radius, r_xy the cylindrical radius,
      // cot(theta) = z/r_xy and sin(theta) = r_xy/rho.
      const double rho = std::sqrt(r2);
      const double rxy = std::sqrt(r2_xy);
      if (rxy == 0.0 || rho == 0.0)
        throw DomainError("cartesian_form: coordinate pole");
      const double A = normalization_3d(0, 0, 0.5);
      const double ang = specfun::legendre_phat(lb.m, 0, aux / rxy) /
                         std::sqrt(rxy / rho);
      return A * std::exp(-0.5 * r2) * std::pow(rho, -0.5) * ang *
             std::polar(1.0, (lb.m + 0.5) * azimuth(x, y));
    }
    case GroupKind::O21: {
      const double r2 = r2_xy - aux * aux;  // spacelike interval
      if (r2 <= 0.0)
        throw DomainError("cartesian_form: point outside the spacelike sector");
      if (lb.s == 0.0) {
        const double A = normalization_3d(0, 0, 0.0);
        return A * std::exp(-0.5 * r2);
      }
      // s=1/2: tanh(beta) = t/r_xy, cosh(beta) = r_xy/rho.
      const double rho = std::sqrt(r2);
      const double rxy = std::sqrt(r2_xy);
      const double A = normalization_3d(0, 0, 0.5);
      const double ang = specfun::legendre_p(lb.m, 0, aux / rxy) /
                         std::sqrt(rxy / rho);
      return A * std::exp(-0.5 * r2) * std::pow(rho, -0.5) * ang *
             std::polar(1.0, (lb.m + 0.5) * azimuth(x, y));
    }
  }
  return {};
}

}  // namespace oscalg::states
