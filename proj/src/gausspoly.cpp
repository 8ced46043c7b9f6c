#include "oscalg/gausspoly.hpp"

#include <cmath>

namespace oscalg::ops {

namespace {

void accumulate(GaussianPoly& f, const GaussianPoly::Monomial& mono, Complex c) {
  auto it = f.coeffs.find(mono);
  if (it == f.coeffs.end()) {
    if (c != Complex{0.0, 0.0}) f.coeffs.emplace(mono, c);
    return;
  }
  it->second += c;
  if (it->second == Complex{0.0, 0.0}) f.coeffs.erase(it);
}

}  // namespace

Complex GaussianPoly::poly_eval(const std::array<double, 3>& xyz) const {
  Complex acc{0.0, 0.0};
  for (const auto& [mono, c] : coeffs) {
    double p = 1.0;
    for (int k = 0; k < 3; ++k)
      for (int e = 0; e < mono[k]; ++e) p *= xyz[k];
    acc += c * p;
  }
  return acc;
}

Complex GaussianPoly::eval(const std::array<double, 3>& xyz) const {
  const double tsq = xyz[2] * xyz[2];
  const double g = -0.5 * (xyz[0] * xyz[0] + xyz[1] * xyz[1]) +
                   (hyperbolic ? 0.5 * tsq : -0.5 * tsq);
  return poly_eval(xyz) * std::exp(g);
}

GaussianPoly& GaussianPoly::operator+=(const GaussianPoly& other) {
  for (const auto& [mono, c] : other.coeffs) accumulate(*this, mono, c);
  return *this;
}

GaussianPoly& GaussianPoly::operator*=(Complex z) {
  if (z == Complex{0.0, 0.0}) {
    coeffs.clear();
    return *this;
  }
  for (auto& [mono, c] : coeffs) c *= z;
  return *this;
}

bool GaussianPoly::is_zero() const { return coeffs.empty(); }

GaussianPoly operator+(GaussianPoly a, const GaussianPoly& b) { return a += b; }

GaussianPoly operator-(GaussianPoly a, const GaussianPoly& b) {
  GaussianPoly nb = b;
  nb *= Complex{-1.0, 0.0};
  return a += nb;
}

GaussianPoly operator*(Complex z, GaussianPoly f) {
  f *= z;
  return f;
}

GaussianPoly mul_coord(const GaussianPoly& f, int k) {
  GaussianPoly out;
  out.hyperbolic = f.hyperbolic;
  for (const auto& [mono, c] : f.coeffs) {
    GaussianPoly::Monomial m = mono;
    ++m[k];
    accumulate(out, m, c);
  }
  return out;
}

GaussianPoly diff_poly(const GaussianPoly& f, int k) {
  GaussianPoly out;
  out.hyperbolic = f.hyperbolic;
  for (const auto& [mono, c] : f.coeffs) {
    if (mono[k] == 0) continue;
    GaussianPoly::Monomial m = mono;
    --m[k];
    accumulate(out, m, c * static_cast<double>(mono[k]));
  }
  return out;
}

GaussianPoly create(const GaussianPoly& f, int k) {
  const double r = 1.0 / std::sqrt(2.0);
  GaussianPoly d = diff_poly(f, k);
  GaussianPoly x2 = mul_coord(f, k);
  x2 *= Complex{2.0, 0.0};
  if (f.hyperbolic && k == 2) {
    // (t + d_t)/sqrt(2) on P exp(+t^2/2 + ...) = (2tP + P')/sqrt(2) exp(...)
    GaussianPoly out = x2 + d;
    out *= Complex{r, 0.0};
    return out;
  }
  // (x_k - d_k)/sqrt(2) on P exp(-x_k^2/2 + ...) = (2 x_k P - P')/sqrt(2)
  GaussianPoly out = x2 - d;
  out *= Complex{r, 0.0};
  return out;
}

GaussianPoly annihilate(const GaussianPoly& f, int k) {
  const double r = 1.0 / std::sqrt(2.0);
  GaussianPoly out = diff_poly(f, k);
  // Euclidean: (x_k + d_k)/sqrt(2) -> P'/sqrt(2).
  // Hyperbolic t: (t - d_t)/sqrt(2) -> -P'/sqrt(2).
  out *= Complex{(f.hyperbolic && k == 2) ? -r : r, 0.0};
  return out;
}

GaussianPoly create_circular(const GaussianPoly& f, int sign) {
  const double r = 1.0 / std::sqrt(2.0);
  GaussianPoly fx = create(f, 0);
  GaussianPoly fy = create(f, 1);
  fy *= Complex{0.0, sign >= 0 ? 1.0 : -1.0};
  GaussianPoly out = fx + fy;
  out *= Complex{r, 0.0};
  return out;
}

GaussianPoly gaussian_ground(GroupKind g) {
  GaussianPoly f;
  f.hyperbolic = (g == GroupKind::O21);
  f.coeffs[{0, 0, 0}] = Complex{1.0, 0.0};
  return f;
}

std::array<double, 3> to_cartesian(GroupKind g, const CoordPoint& pt) {
  switch (g) {
    case GroupKind::O2:
      return {pt.rho * std::cos(pt.phi), pt.rho * std::sin(pt.phi), 0.0};
    case GroupKind::O3:
      return {pt.rho * std::sin(pt.aux) * std::cos(pt.phi),
              pt.rho * std::sin(pt.aux) * std::sin(pt.phi),
              pt.rho * std::cos(pt.aux)};
    case GroupKind::O21:
      return {pt.rho * std::cosh(pt.aux) * std::cos(pt.phi),
              pt.rho * std::cosh(pt.aux) * std::sin(pt.phi),
              pt.rho * std::sinh(pt.aux)};
  }
  throw LabelError("unknown group");
}

Complex scaled_eval(const GaussianPoly& f, GroupKind g, const CoordPoint& pt) {
  return f.poly_eval(to_cartesian(g, pt));
}

double gaussian_moment(int k, double a) {
  if (k < 0 || a <= 0.0) throw DomainError("gaussian_moment: need k >= 0, a > 0");
  if (k % 2 == 1) return 0.0;
  // integral x^k e^{-a x^2} dx = Gamma((k+1)/2) / a^{(k+1)/2}
  return std::tgamma(0.5 * (k + 1)) / std::pow(a, 0.5 * (k + 1));
}

}  // namespace oscalg::ops
