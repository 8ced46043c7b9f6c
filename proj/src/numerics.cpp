#include "oscalg/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>
#include <thread>

#include "oscalg/polarfun.hpp"
#include "oscalg/specfun.hpp"

namespace oscalg::num {

namespace {

constexpr double kPi = std::numbers::pi;

void check_spec(const QuadratureSpec& spec) {
  if (spec.radial_nodes < 8 || spec.azimuthal_nodes < 8 || spec.angular_nodes < 8)
    throw DomainError("quadrature node counts must be >= 8");
  if (!(spec.beta_cutoff > 0.0))
    throw DomainError("rapidity cutoff must be positive");
  if (!(spec.theta_exclusion > 0.0 && spec.theta_exclusion < 0.5))
    throw DomainError("pole exclusion must lie in (0, 0.5)");
}

}  // namespace

QuadRule gauss_laguerre(int n, double alpha) {
  if (n < 1) throw DomainError("Gauss rule needs at least one node");
  if (!(alpha > -1.0)) throw DomainError("Laguerre weight needs alpha > -1");
  // Nodes start as Golub-Welsch eigenvalues of the Jacobi matrix and get a
  // Newton polish.  Weights use the closed form
  //   w_i = [Gamma(n+alpha+1)/n!] x_i / ((n+1) L^alpha_{n+1}(x_i))^2
  // with the envelope e^{-x/2} folded into the three-term recurrence
  // (Lhat_k = L_k e^{-x/2}), so the exponentially small tail weights keep
  // full *relative* accuracy.  Squared first-eigenvector components only
  // carry absolute accuracy, which turns high moments (x^k for k ~ 2n-1)
  // into noise.
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    J(i, i) = 2.0 * i + 1.0 + alpha;
    if (i + 1 < n) {
      const double b = std::sqrt((i + 1.0) * (i + 1.0 + alpha));
      J(i, i + 1) = J(i + 1, i) = b;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);

  // Lhat_{n-1}, Lhat_n at x via the scaled recurrence.
  const auto scaled_pair = [n, alpha](double x, double& lnm1, double& ln) {
    double prev = 0.0, cur = std::exp(-0.5 * x);
    for (int k = 0; k < n; ++k) {
      const double nxt =
          ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
      prev = cur;
      cur = nxt;
    }
    lnm1 = prev;
    ln = cur;
  };

  QuadRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double ratio = std::exp(std::lgamma(n + alpha + 1.0) -
                                std::lgamma(n + 1.0));
  for (int i = 0; i < n; ++i) {
    double x = es.eigenvalues()(i);
    double lnm1 = 0.0, ln = 0.0;
    for (int it = 0; it < 4; ++it) {
      scaled_pair(x, lnm1, ln);
      if (ln == 0.0 && lnm1 == 0.0) break;  // envelope underflow: w rounds to 0
      // x L'_n = n L_n - (n+alpha) L_{n-1}, envelope included on both sides.
      const double deriv = (n * ln - (n + alpha) * lnm1) / x;
      const double step = ln / deriv;
      x -= step;
      if (std::abs(step) <= 1e-15 * std::max(std::abs(x), 1.0)) {
        scaled_pair(x, lnm1, ln);
        break;
      }
    }
    // One more recurrence step gives Lhat_{n+1} at the converged node.
    const double lnp1 =
        ((2.0 * n + 1.0 + alpha - x) * ln - (n + alpha) * lnm1) / (n + 1.0);
    rule.nodes[i] = x;
    // ((n+1) L_{n+1})^2 = denom^2 e^{x}, so the e^{x} moves into the weight.
    const double denom = (n + 1.0) * lnp1;
    rule.weights[i] =
        (denom == 0.0) ? 0.0 : ratio * x * std::exp(-x) / (denom * denom);
  }
  return rule;
}

QuadRule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw DomainError("Gauss rule needs at least one node");
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) {
    const double k = i + 1.0;
    J(i, i + 1) = J(i + 1, i) = k / std::sqrt(4.0 * k * k - 1.0);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  QuadRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = mid + half * es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[i] = 2.0 * half * v0 * v0;
  }
  return rule;
}

namespace {

// Azimuthal factor: integral over [0, 2 pi) of e^{i (mu_g - mu_f) phi} by
// the uniform rule; an exact 2 pi delta on the integer frequency gaps that
// occur within a family (returned as exactly 0 when it cancels).
Complex azimuthal_factor(double dmu, int nodes) {
  Complex acc{0.0, 0.0};
  for (int k = 0; k < nodes; ++k)
    acc += std::polar(1.0, dmu * 2.0 * kPi * k / nodes);
  acc *= 2.0 * kPi / nodes;
  if (std::abs(acc) < 1e-10) return {0.0, 0.0};
  return acc;
}

// integral of the two angular factors against the group measure (sin theta
// or cosh beta); trivially 1 for O2.
double angular_overlap(const StateLabel& a, const StateLabel& b, int nodes,
                       double beta_cutoff, double theta_exclusion) {
  if (a.group == GroupKind::O2) return 1.0;
  if (a.group == GroupKind::O3 && a.s == 0.0) {
    // z = cos(theta) turns the measure into dz on [-1, 1].
    const QuadRule rule = gauss_legendre(nodes, -1.0, 1.0);
    double acc = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
      const double theta = std::acos(rule.nodes[i]);
      acc += rule.weights[i] * states::angular_factor(a, theta) *
             states::angular_factor(b, theta);
    }
    return acc;
  }
  if (a.group == GroupKind::O3) {
    // s=1/2: integrate in theta on the pole-excluded interval.
    const QuadRule rule =
        gauss_legendre(nodes, theta_exclusion, kPi - theta_exclusion);
    double acc = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i)
      acc += rule.weights[i] * states::angular_factor(a, rule.nodes[i]) *
             states::angular_factor(b, rule.nodes[i]) *
             std::sin(rule.nodes[i]);
    return acc;
  }
  // O21: truncated rapidity line with measure cosh(beta) d beta.  The
  // integrands decay like powers of sech(beta), whose poles at i pi/2 pin
  // the Gauss-Legendre accuracy to the node *density*; keep at least 16
  // nodes per unit rapidity so rule error stays ~1e-12 and the cutoff
  // sweep measures tails, not resolution.
  nodes = std::max(nodes, static_cast<int>(std::ceil(16.0 * beta_cutoff)));
  const QuadRule rule = gauss_legendre(nodes, -beta_cutoff, beta_cutoff);
  double acc = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i)
    acc += rule.weights[i] * states::angular_factor(a, rule.nodes[i]) *
           states::angular_factor(b, rule.nodes[i]) * std::cosh(rule.nodes[i]);
  return acc;
}

// Radial overlap with the volume factor rho^{D-1}: under x = rho^2 the
// integrand is (1/2) e^{-x} x^{(p_a + p_b + D - 2)/2} L_a(x) L_b(x), which
// the matching Gauss-Laguerre rule integrates exactly.
double radial_overlap(const StateLabel& a, const StateLabel& b,
                      const QuadratureSpec& spec) {
  const double d = (a.group == GroupKind::O2) ? 2.0 : 3.0;
  double alpha =
      0.5 * (states::radial_exponent(a) + states::radial_exponent(b) + d - 2.0);

  // Negative-integer Laguerre orders (planar s=0 states with m < 0) put a
  // polynomial zero of the same order at the origin,
  //   L^{(-k)}_n(x) = (-x)^k (n-k)!/n! L^{(k)}_{n-k}(x),
  // which cancels the x^{-k} weight exactly; fold it in so the rule sees a
  // positive exponent.  Fractional exponents below -1 have no such zero and
  // the integral genuinely diverges.
  int na_idx = a.n, nb_idx = b.n;
  double oa = states::laguerre_order(a), ob = states::laguerre_order(b);
  double pref = 1.0;
  const auto fold_origin_zero = [&alpha, &pref](int& n_idx, double& order) {
    if (order > -1.0 || order != std::floor(order)) return;
    const int k = static_cast<int>(-order);
    for (int j = 0; j < k; ++j) pref /= n_idx - j;
    if (k % 2 != 0) pref = -pref;
    alpha += k;
    n_idx -= k;
    order = k;
  };
  fold_origin_zero(na_idx, oa);
  fold_origin_zero(nb_idx, ob);
  if (!(alpha > -1.0))
    throw DomainError("radial integral diverges at the origin");

  const QuadRule rule = gauss_laguerre(spec.radial_nodes, alpha);
  double acc = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i)
    acc += rule.weights[i] * specfun::laguerre(na_idx, oa, rule.nodes[i]) *
           specfun::laguerre(nb_idx, ob, rule.nodes[i]);
  acc *= pref;
  const double na = a.group == GroupKind::O2
                        ? states::normalization_2d(a.n, a.m, a.s)
                        : states::normalization_3d(a.n, a.l, a.s);
  const double nb = b.group == GroupKind::O2
                        ? states::normalization_2d(b.n, b.m, b.s)
                        : states::normalization_3d(b.n, b.l, b.s);
  return 0.5 * na * nb * acc;
}

Complex inner_product_at(const states::OscillatorState& f,
                         const states::OscillatorState& g,
                         const QuadratureSpec& spec, int angular_nodes,
                         double beta_cutoff, double theta_exclusion) {
  if (f.non_fock || g.non_fock)
    throw DomainError("inner products reject non-Fock objects");
  if (f.label.group != g.label.group)
    throw BasisError("inner product across different groups");
  if (f.label.s != g.label.s)
    throw BasisError("inner product across different s families");
  if (f.norm_const == 0.0 || g.norm_const == 0.0) return {0.0, 0.0};

  const Complex az =
      azimuthal_factor(states::azimuthal_frequency(g.label) -
                           states::azimuthal_frequency(f.label),
                       spec.azimuthal_nodes);
  if (az == Complex{0.0, 0.0}) return {0.0, 0.0};
  return az *
         angular_overlap(f.label, g.label, angular_nodes, beta_cutoff,
                         theta_exclusion) *
         radial_overlap(f.label, g.label, spec);
}

}  // namespace

Complex inner_product(const states::OscillatorState& f,
                      const states::OscillatorState& g,
                      const QuadratureSpec& spec) {
  check_spec(spec);
  return inner_product_at(f, g, spec, spec.angular_nodes, spec.beta_cutoff,
                          spec.theta_exclusion);
}

NormReport norm_report(const states::OscillatorState& st,
                       const QuadratureSpec& spec) {
  check_spec(spec);
  NormReport report;
  report.value = inner_product_at(st, st, spec, spec.angular_nodes,
                                  spec.beta_cutoff, spec.theta_exclusion)
                     .real();
  // Domain sweep: push the truncated direction outward and watch the value.
  // The node count grows with the doubled cutoff so the sweep measures the
  // tail of the integrand, not the resolution of the rule.
  if (st.label.group == GroupKind::O21) {
    const double swept =
        inner_product_at(st, st, spec, 2 * spec.angular_nodes,
                         2.0 * spec.beta_cutoff, spec.theta_exclusion)
            .real();
    report.convergence_estimate = std::abs(swept - report.value);
  } else if (st.label.group == GroupKind::O3 && st.label.s == 0.5) {
    const double swept =
        inner_product_at(st, st, spec, 2 * spec.angular_nodes,
                         spec.beta_cutoff, 0.5 * spec.theta_exclusion)
            .real();
    report.convergence_estimate = std::abs(swept - report.value);
  }
  report.divergent =
      report.convergence_estimate > 1e-6 * std::max(1.0, std::abs(report.value));
  return report;
}

namespace {

int thread_cap() {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("OSC_ALG_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && v <= 256) n = std::min<unsigned>(n, static_cast<unsigned>(v));
  }
  return static_cast<int>(n);
}

}  // namespace

Eigen::MatrixXcd orthonormality_matrix(const std::vector<StateLabel>& labels,
                                       const QuadratureSpec& spec) {
  check_spec(spec);
  if (labels.empty()) throw BasisError("empty label list");
  std::vector<states::OscillatorState> sts;
  sts.reserve(labels.size());
  for (const StateLabel& lb : labels) {
    if (lb.group != labels.front().group || lb.s != labels.front().s)
      throw BasisError("Gram matrix needs a single group and s");
    sts.push_back(states::make_state(lb));
  }

  const auto dim = static_cast<Eigen::Index>(labels.size());
  Eigen::MatrixXcd gram(dim, dim);
  const int workers = std::min<int>(thread_cap(), static_cast<int>(dim));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (Eigen::Index j = w; j < dim; j += workers)
        for (Eigen::Index i = 0; i < dim; ++i)
          gram(i, j) =
              inner_product_at(sts[i], sts[j], spec, spec.angular_nodes,
                               spec.beta_cutoff, spec.theta_exclusion);
    });
  }
  for (std::thread& t : pool) t.join();
  return gram;
}

double schrodinger_residual(const states::OscillatorState& st,
                            const QuadratureSpec& spec, double epsilon_shift) {
  check_spec(spec);
  const double d = (st.label.group == GroupKind::O2) ? 2.0 : 3.0;
  const double p = states::radial_exponent(st.label);
  const double casimir = p * (p + d - 2.0);
  const double epsilon = 2.0 * st.energy + epsilon_shift;

  // Radial factor as a closed-family function (unit prefactor, no phase).
  ops::PolarFun radial;
  {
    ops::PolarTerm t;
    t.c = Complex{st.non_fock ? st.norm_const : 1.0, 0.0};
    t.p = p;
    t.mu = 0.0;
    const std::vector<double> lc = specfun::laguerre_coefficients(
        st.label.n, states::laguerre_order(st.label));
    t.q.assign(lc.size(), Complex{0.0, 0.0});
    for (size_t i = 0; i < lc.size(); ++i) t.q[i] = Complex{lc[i], 0.0};
    radial.terms.push_back(std::move(t));
  }

  using ops::d_rho;
  using ops::mul_rho_power;
  ops::PolarFun res = Complex{-1.0, 0.0} * d_rho(d_rho(radial)) +
                      Complex{-(d - 1.0), 0.0} * mul_rho_power(d_rho(radial), -1.0) +
                      Complex{casimir, 0.0} * mul_rho_power(radial, -2.0) +
                      mul_rho_power(radial, 2.0) +
                      Complex{-epsilon, 0.0} * radial;
  ops::simplify(res);

  const QuadRule rule = gauss_legendre(spec.radial_nodes, 0.1, 4.0);
  double num = 0.0, den = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const CoordPoint pt{rule.nodes[i], 0.0, 0.0};
    num += rule.weights[i] * std::norm(res.eval(pt));
    den += rule.weights[i] * std::norm(radial.eval(pt));
  }
  if (den == 0.0) throw DomainError("zero radial factor");
  return std::sqrt(num / den);
}

double ghost_norm(ops::PhaseConvention convention, int n0) {
  if (n0 < 0) throw LabelError("timelike excitation count must be non-negative");
  // <n0|n0> = factor * <n0-1|n0-1> with the factor fixed by [a0, abar0] =
  // eta00 and the convention's phases: -1 per step for FKR (i phases,
  // creation by abar0), +1 per step for KimNoz (unit phases, tower built
  // downward from the abar0-annihilated floor).
  int sign = 1;
  if (convention == ops::PhaseConvention::FKR)
    for (int k = 0; k < n0; ++k) sign = -sign;
  return static_cast<double>(sign);
}

NormReport metric_norm(const ops::GaussianPoly& f, double weight,
                       const QuadratureSpec& spec, double regulator) {
  check_spec(spec);
  NormReport report;
  // |e^{-x^2/2}|^2 = e^{-x^2} on the transverse axes; the third axis carries
  // e^{-(regulator - 1) t^2} for a hyperbolic Gaussian, e^{-(regulator + 1) t^2}
  // otherwise.
  const double axis_xy = 1.0;
  const double axis_t = f.hyperbolic ? regulator - 1.0 : regulator + 1.0;
  if (!(axis_t > 0.0)) {
    report.divergent = true;  // regulated integral itself does not exist
    return report;
  }

  // Every monomial pair reduces to a product of 1D Gaussian moments.
  double num = 0.0;
  for (const auto& [ka, ca] : f.coeffs)
    for (const auto& [kb, cb] : f.coeffs) {
      const double re = (std::conj(ca) * cb).real();
      if (re == 0.0) continue;
      num += re * ops::gaussian_moment(ka[0] + kb[0], axis_xy) *
             ops::gaussian_moment(ka[1] + kb[1], axis_xy) *
             ops::gaussian_moment(ka[2] + kb[2], axis_t);
    }
  const double den = ops::gaussian_moment(0, axis_xy) *
                     ops::gaussian_moment(0, axis_xy) *
                     ops::gaussian_moment(0, axis_t);
  report.value = weight * num / den;
  return report;
}

}  // namespace oscalg::num
