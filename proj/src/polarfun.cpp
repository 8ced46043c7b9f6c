#include "oscalg/polarfun.hpp"

#include <cmath>

#include "oscalg/specfun.hpp"

namespace oscalg::ops {

namespace {

Complex poly_eval(const std::vector<Complex>& q, double x) {
  Complex acc{0.0, 0.0};
  for (size_t i = q.size(); i-- > 0;) acc = acc * x + q[i];
  return acc;
}

// q'(x)
std::vector<Complex> poly_derivative(const std::vector<Complex>& q) {
  if (q.size() <= 1) return {Complex{0.0, 0.0}};
  std::vector<Complex> d(q.size() - 1);
  for (size_t i = 1; i < q.size(); ++i) d[i - 1] = static_cast<double>(i) * q[i];
  return d;
}

// x * q(x)
std::vector<Complex> poly_shift(const std::vector<Complex>& q) {
  std::vector<Complex> r(q.size() + 1, Complex{0.0, 0.0});
  for (size_t i = 0; i < q.size(); ++i) r[i + 1] = q[i];
  return r;
}

std::vector<Complex> poly_axpy(Complex a, const std::vector<Complex>& x,
                               const std::vector<Complex>& y) {
  std::vector<Complex> r(std::max(x.size(), y.size()), Complex{0.0, 0.0});
  for (size_t i = 0; i < x.size(); ++i) r[i] += a * x[i];
  for (size_t i = 0; i < y.size(); ++i) r[i] += y[i];
  return r;
}

bool poly_is_zero(const std::vector<Complex>& q) {
  for (const Complex& c : q)
    if (c != Complex{0.0, 0.0}) return false;
  return true;
}

}  // namespace

Complex PolarFun::scaled_eval(const CoordPoint& pt) const {
  Complex acc{0.0, 0.0};
  const double x = pt.rho * pt.rho;
  for (const PolarTerm& t : terms) {
    acc += t.c * std::pow(pt.rho, t.p) * poly_eval(t.q, x) *
           std::polar(1.0, t.mu * pt.phi);
  }
  return acc;
}

Complex PolarFun::eval(const CoordPoint& pt) const {
  return scaled_eval(pt) * std::exp(-0.5 * pt.rho * pt.rho);
}

PolarFun& PolarFun::operator+=(const PolarFun& other) {
  terms.insert(terms.end(), other.terms.begin(), other.terms.end());
  return *this;
}

PolarFun& PolarFun::operator*=(Complex z) {
  for (PolarTerm& t : terms) t.c *= z;
  return *this;
}

PolarFun operator+(PolarFun a, const PolarFun& b) { return a += b; }

PolarFun operator-(PolarFun a, const PolarFun& b) {
  PolarFun nb = b;
  nb *= Complex{-1.0, 0.0};
  return a += nb;
}

PolarFun operator*(Complex z, PolarFun f) {
  f *= z;
  return f;
}

void simplify(PolarFun& f) {
  // Working scale before cancellation, so coefficients that survive a sum
  // only as rounding dust can be recognized and dropped afterwards.
  double scale = 0.0;
  for (const PolarTerm& t : f.terms) {
    const double ac = std::abs(t.c);
    for (const Complex& q : t.q) scale = std::max(scale, ac * std::abs(q));
  }
  const double dust = 1e-13 * scale;

  std::vector<PolarTerm> out;
  for (PolarTerm& t : f.terms) {
    if (t.c == Complex{0.0, 0.0} || poly_is_zero(t.q)) continue;
    bool merged = false;
    for (PolarTerm& o : out) {
      // Distinct powers/frequencies in one computation differ by >= 2s or 1;
      // a small tolerance only reunites values split by rounding.
      if (std::abs(o.p - t.p) < 1e-9 && std::abs(o.mu - t.mu) < 1e-9) {
        // Fold the prefactors into the polynomials and add.
        std::vector<Complex> qa = o.q;
        for (Complex& c : qa) c *= o.c;
        std::vector<Complex> qb = t.q;
        for (Complex& c : qb) c *= t.c;
        o.q = poly_axpy(Complex{1.0, 0.0}, qa, qb);
        o.c = Complex{1.0, 0.0};
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back(std::move(t));
  }

  // Prune dust, trim zero tails, and absorb x^k polynomial factors into the
  // radial power so cancelled singular prefactors disappear exactly.
  std::vector<PolarTerm> kept;
  for (PolarTerm& t : out) {
    for (Complex& c : t.q)
      if (std::abs(t.c) * std::abs(c) <= dust) c = Complex{0.0, 0.0};
    size_t hi = t.q.size();
    while (hi > 0 && t.q[hi - 1] == Complex{0.0, 0.0}) --hi;
    t.q.resize(hi);
    size_t lo = 0;
    while (lo < t.q.size() && t.q[lo] == Complex{0.0, 0.0}) ++lo;
    if (lo == t.q.size()) continue;
    if (lo > 0) {
      t.q.erase(t.q.begin(), t.q.begin() + lo);
      t.p += 2.0 * static_cast<double>(lo);
    }
    kept.push_back(std::move(t));
  }
  f.terms = std::move(kept);
}

PolarFun to_polarfun(const states::OscillatorState& st) {
  if (st.label.group != GroupKind::O2)
    throw LabelError("to_polarfun: O2 labels only");
  PolarFun f;
  if (st.norm_const == 0.0) return f;  // excluded family: zero function
  PolarTerm t;
  t.c = Complex{st.norm_const, 0.0};
  t.p = states::radial_exponent(st.label);
  t.mu = st.label.m + st.label.s;
  const std::vector<double> lc =
      specfun::laguerre_coefficients(st.label.n, states::laguerre_order(st.label));
  t.q.assign(lc.size(), Complex{0.0, 0.0});
  for (size_t i = 0; i < lc.size(); ++i) t.q[i] = Complex{lc[i], 0.0};
  f.terms.push_back(std::move(t));
  return f;
}

namespace {

// Both ladder directions act on a term e^{-x/2} rho^p q(x) e^{i mu phi} as
//   lowering (pm): (1/2) e^{i(mu+pm)phi} e^{-x/2} rho^{p-1} [ (p - pm*mu) q + 2 x q' ]
//   raising  (pm): (1/2) e^{i(mu+pm)phi} e^{-x/2} rho^{p-1} [ 2 x q - (p - pm*mu) q - 2 x q' ]
// (derivation: rho f = rho^{p-1} x q;  d_rho f = rho^{p-1} (p q + 2 x q' - x q);
//  (i/rho) d_phi f = -mu rho^{p-1} q).
PolarFun apply_ladder(const PolarFun& f, int pm, bool raising) {
  PolarFun out;
  for (const PolarTerm& t : f.terms) {
    PolarTerm r;
    r.c = 0.5 * t.c;
    r.p = t.p - 1.0;
    r.mu = t.mu + pm;
    const double k = t.p - pm * t.mu;
    const std::vector<Complex> dq = poly_derivative(t.q);
    const std::vector<Complex> xdq = poly_shift(dq);
    if (raising) {
      // 2 x q - k q - 2 x q'
      std::vector<Complex> xq = poly_shift(t.q);
      std::vector<Complex> acc = poly_axpy(Complex{2.0, 0.0}, xq, {});
      acc = poly_axpy(Complex{-k, 0.0}, t.q, acc);
      acc = poly_axpy(Complex{-2.0, 0.0}, xdq, acc);
      r.q = std::move(acc);
    } else {
      // k q + 2 x q'
      std::vector<Complex> acc = poly_axpy(Complex{k, 0.0}, t.q, {});
      acc = poly_axpy(Complex{2.0, 0.0}, xdq, acc);
      r.q = std::move(acc);
    }
    out.terms.push_back(std::move(r));
  }
  simplify(out);
  return out;
}

}  // namespace

PolarFun apply_lowering(const PolarFun& f, int pm) {
  return apply_ladder(f, pm, /*raising=*/false);
}

PolarFun apply_raising(const PolarFun& f, int pm) {
  return apply_ladder(f, pm, /*raising=*/true);
}

PolarFun d_rho(const PolarFun& f) {
  // d_rho [e^{-x/2} rho^p q(x)] = e^{-x/2} rho^{p-1} [p q + 2x q' - x q]
  PolarFun out;
  for (const PolarTerm& t : f.terms) {
    PolarTerm r;
    r.c = t.c;
    r.p = t.p - 1.0;
    r.mu = t.mu;
    const std::vector<Complex> xdq = poly_shift(poly_derivative(t.q));
    const std::vector<Complex> xq = poly_shift(t.q);
    std::vector<Complex> acc = poly_axpy(Complex{t.p, 0.0}, t.q, {});
    acc = poly_axpy(Complex{2.0, 0.0}, xdq, acc);
    acc = poly_axpy(Complex{-1.0, 0.0}, xq, acc);
    r.q = std::move(acc);
    out.terms.push_back(std::move(r));
  }
  simplify(out);
  return out;
}

PolarFun mul_rho_power(const PolarFun& f, double k) {
  PolarFun out = f;
  for (PolarTerm& t : out.terms) t.p += k;
  return out;
}

}  // namespace oscalg::ops
