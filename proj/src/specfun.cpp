#include "oscalg/specfun.hpp"

#include <gmpxx.h>

#include <cmath>
#include <cstdlib>

namespace oscalg::specfun {

double laguerre(int n, double alpha, double x) {
  if (!std::isfinite(x)) throw DomainError("laguerre: non-finite argument");
  if (n < 0) return 0.0;
  if (n == 0) return 1.0;
  // Three-term recurrence in the degree:
  //   (k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}
  double lm1 = 1.0;               // L_0
  double l = 1.0 + alpha - x;     // L_1
  for (int k = 1; k < n; ++k) {
    const double lp1 =
        ((2.0 * k + 1.0 + alpha - x) * l - (k + alpha) * lm1) / (k + 1.0);
    lm1 = l;
    l = lp1;
  }
  return l;
}

std::vector<double> laguerre_coefficients(int n, double alpha) {
  if (n < 0) return {};
  std::vector<double> lm1{1.0};  // L_0
  if (n == 0) return lm1;
  std::vector<double> l{1.0 + alpha, -1.0};  // L_1
  for (int k = 1; k < n; ++k) {
    std::vector<double> lp1(static_cast<size_t>(k) + 2, 0.0);
    // (2k+1+alpha) L_k - x L_k - (k+alpha) L_{k-1}, all over (k+1)
    for (size_t i = 0; i < l.size(); ++i) {
      lp1[i] += (2.0 * k + 1.0 + alpha) * l[i];
      lp1[i + 1] -= l[i];
    }
    for (size_t i = 0; i < lm1.size(); ++i) lp1[i] -= (k + alpha) * lm1[i];
    for (double& c : lp1) c /= (k + 1.0);
    lm1 = std::move(l);
    l = std::move(lp1);
  }
  return l;
}

namespace {

// P_l^m for m >= 0 by the standard order-diagonal seed and degree recurrence.
double legendre_p_nonneg(int l, int m, double z) {
  // Seed P_m^m = (-1)^m (2m-1)!! (1-z^2)^{m/2}  (Condon-Shortley phase).
  double pmm = 1.0;
  if (m > 0) {
    const double somx2 = std::sqrt((1.0 - z) * (1.0 + z));
    double fact = 1.0;
    for (int i = 0; i < m; ++i) {
      pmm *= -fact * somx2;
      fact += 2.0;
    }
  }
  if (l == m) return pmm;
  // P_{m+1}^m = z (2m+1) P_m^m
  double pmmp1 = z * (2.0 * m + 1.0) * pmm;
  if (l == m + 1) return pmmp1;
  // (l-m) P_l^m = (2l-1) z P_{l-1}^m - (l+m-1) P_{l-2}^m
  double pll = 0.0;
  for (int ll = m + 2; ll <= l; ++ll) {
    pll = ((2.0 * ll - 1.0) * z * pmmp1 - (ll + m - 1.0) * pmm) / (ll - m);
    pmm = pmmp1;
    pmmp1 = pll;
  }
  return pll;
}

// Ratio (l-m)!/(l+m)! for the negative-order reduction, as a double.
double order_flip_ratio(int l, int m) {
  double r = 1.0;
  for (int k = l - m + 1; k <= l + m; ++k) r /= k;
  return r;
}

}  // namespace

double legendre_p(int l, int m, double z) {
  if (!std::isfinite(z) || std::abs(z) > 1.0)
    throw DomainError("legendre_p: argument outside [-1, 1]");
  if (l < 0 || std::abs(m) > l) return 0.0;
  if (m >= 0) return legendre_p_nonneg(l, m, z);
  const int ma = -m;
  const double sign = (ma % 2 == 0) ? 1.0 : -1.0;
  return sign * order_flip_ratio(l, ma) * legendre_p_nonneg(l, ma, z);
}

namespace {

// Hyperbolic variant for m >= 0.  Same structure as legendre_p_nonneg with
// (1-z^2) -> (1+zeta^2); the degree recurrence picks up a sign on the
// trailing term:
//   (l-m) Phat_l^m = (2l-1) zeta Phat_{l-1}^m + (l+m-1) Phat_{l-2}^m
double legendre_phat_nonneg(int l, int m, double zeta) {
  double pmm = 1.0;
  if (m > 0) {
    const double sqrt1pz2 = std::sqrt(1.0 + zeta * zeta);
    double fact = 1.0;
    for (int i = 0; i < m; ++i) {
      pmm *= -fact * sqrt1pz2;
      fact += 2.0;
    }
  }
  if (l == m) return pmm;
  double pmmp1 = zeta * (2.0 * m + 1.0) * pmm;
  if (l == m + 1) return pmmp1;
  double pll = 0.0;
  for (int ll = m + 2; ll <= l; ++ll) {
    pll = ((2.0 * ll - 1.0) * zeta * pmmp1 + (ll + m - 1.0) * pmm) / (ll - m);
    pmm = pmmp1;
    pmmp1 = pll;
  }
  return pll;
}

}  // namespace

double legendre_phat(int l, int m, double zeta) {
  if (!std::isfinite(zeta))
    throw DomainError("legendre_phat: non-finite argument");
  if (l < 0 || std::abs(m) > l) return 0.0;
  if (m >= 0) return legendre_phat_nonneg(l, m, zeta);
  // Phat_l^{-m} = (l-m)!/(l+m)! Phat_l^m -- no sign, unlike the circular
  // family (the two (-1)^m factors from the continuation cancel).
  const int ma = -m;
  return order_flip_ratio(l, ma) * legendre_phat_nonneg(l, ma, zeta);
}

namespace {

bool is_half_integer(double x) {
  const double t = 2.0 * x;
  return std::isfinite(t) && std::abs(t - std::llround(t)) < 1e-9;
}

mpz_class factorial_z(long n) {
  mpz_class r = 1;
  for (long k = 2; k <= n; ++k) r *= k;
  return r;
}

}  // namespace

double clebsch_gordan(const CGIndex& idx) {
  for (double v : {idx.j1, idx.m1, idx.j2, idx.m2, idx.J, idx.M})
    if (!is_half_integer(v)) return 0.0;

  // Doubled-integer representation keeps all arithmetic exact.
  const long j1 = std::llround(2 * idx.j1), m1 = std::llround(2 * idx.m1);
  const long j2 = std::llround(2 * idx.j2), m2 = std::llround(2 * idx.m2);
  const long J = std::llround(2 * idx.J), M = std::llround(2 * idx.M);

  // Selection rules.
  if (m1 + m2 != M) return 0.0;
  if (j1 < 0 || j2 < 0 || J < 0) return 0.0;
  if (std::abs(m1) > j1 || std::abs(m2) > j2 || std::abs(M) > J) return 0.0;
  if (J < std::abs(j1 - j2) || J > j1 + j2) return 0.0;
  // (j +/- m) must be integers, and the triad must couple integrally.
  if ((j1 + m1) % 2 != 0 || (j2 + m2) % 2 != 0 || (J + M) % 2 != 0) return 0.0;
  if ((j1 + j2 + J) % 2 != 0) return 0.0;

  // Racah closed formula.  With doubled labels every factorial argument
  // below is an exact integer (halves of even sums).
  const long a = (j1 + j2 - J) / 2;
  const long b = (j1 - j2 + J) / 2;
  const long c = (-j1 + j2 + J) / 2;
  const long d = (j1 + j2 + J) / 2 + 1;

  // Radicand of the prefactor, as an exact rational.  With doubled labels
  // 2J+1 reads J+1.
  mpq_class pre(J + 1, 1);
  pre *= mpq_class(factorial_z(a) * factorial_z(b) * factorial_z(c),
                   factorial_z(d));
  pre *= factorial_z((j1 + m1) / 2);
  pre *= factorial_z((j1 - m1) / 2);
  pre *= factorial_z((j2 + m2) / 2);
  pre *= factorial_z((j2 - m2) / 2);
  pre *= factorial_z((J + M) / 2);
  pre *= factorial_z((J - M) / 2);

  // Alternating sum over k, exact.
  mpq_class sum = 0;
  const long t1 = a;                   // j1+j2-J-k >= 0
  const long t2 = (j1 - m1) / 2;       // j1-m1-k >= 0
  const long t3 = (j2 + m2) / 2;       // j2+m2-k >= 0
  const long t4 = (J - j2 + m1) / 2;   // J-j2+m1+k >= 0
  const long t5 = (J - j1 - m2) / 2;   // J-j1-m2+k >= 0
  const long kmin = std::max({0L, -t4, -t5});
  const long kmax = std::min({t1, t2, t3});
  for (long k = kmin; k <= kmax; ++k) {
    mpq_class term(1, 1);
    term /= factorial_z(k);
    term /= factorial_z(t1 - k);
    term /= factorial_z(t2 - k);
    term /= factorial_z(t3 - k);
    term /= factorial_z(t4 + k);
    term /= factorial_z(t5 + k);
    if (k % 2 != 0) term = -term;
    sum += term;
  }
  if (sum == 0) return 0.0;

  // value = sign(sum) * sqrt(pre * sum^2); one rational->double conversion.
  mpq_class square = pre * sum * sum;
  square.canonicalize();
  const double mag = std::sqrt(square.get_d());
  return sgn(sum) < 0 ? -mag : mag;
}

}  // namespace oscalg::specfun
