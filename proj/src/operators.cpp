#include "oscalg/operators.hpp"

#include <cmath>
#include <numbers>

namespace oscalg::ops {

namespace {

constexpr double kFdStep = 1e-4;
constexpr double kAxisThreshold = 1e-8;

bool is_zero_coeff(double c) { return c <= 0.0; }

void require_polar_kind(const LadderOp& op) {
  if (op.kind == LadderKind::Cartesian)
    throw LabelError("expected a polar ladder kind");
  if (op.group == GroupKind::O2 &&
      (op.kind == LadderKind::APar || op.kind == LadderKind::AbarPar))
    throw LabelError("parallel-mode operators exist only for the 3D groups");
}

}  // namespace

const char* phase_convention_name(PhaseConvention c) {
  switch (c) {
    case PhaseConvention::Euclidean: return "euclidean";
    case PhaseConvention::KimNoz: return "kimnoz";
    case PhaseConvention::FKR: return "fkr";
  }
  return "?";
}

LadderOp polar_op(LadderKind kind, GroupKind group) {
  LadderOp op;
  op.kind = kind;
  op.group = group;
  require_polar_kind(op);
  return op;
}

LadderOp cartesian_op(int axis, bool bar, PhaseConvention phases) {
  if (axis < 0) throw LabelError("mode index must be non-negative");
  LadderOp op;
  op.kind = LadderKind::Cartesian;
  op.phases = phases;
  op.axis = axis;
  op.bar = bar;
  return op;
}

SymbolicAction apply_symbolic(const LadderOp& op, const StateLabel& label) {
  require_polar_kind(op);
  if (label.group != GroupKind::O2) {
    if (label.s != 0.0)
      throw UnsupportedError(
          "no ladder representation exists for the 3D s=1/2 families");
    throw LabelError(
        "3D eigenstates mix Casimir labels under the mode ladders; "
        "apply to occupation labels instead");
  }
  if (!states::validate_label(label))
    throw LabelError("inadmissible O2 label");

  const double s = label.s;
  SymbolicAction act;
  StateLabel out = label;
  double coeff = 0.0;
  switch (op.kind) {
    case LadderKind::APlus:
      coeff = std::sqrt(static_cast<double>(label.n));
      out.n -= 1;
      out.m += 1;
      break;
    case LadderKind::AMinus:
      coeff = std::sqrt(label.n + label.m + s);
      out.m -= 1;
      break;
    case LadderKind::AbarPlus:
      coeff = std::sqrt(label.n + label.m + s + 1.0);
      out.m += 1;
      break;
    case LadderKind::AbarMinus:
      coeff = std::sqrt(label.n + 1.0);
      out.n += 1;
      out.m -= 1;
      break;
    default:
      throw LabelError("parallel-mode operators exist only for the 3D groups");
  }
  if (is_zero_coeff(coeff)) return act;  // Zero
  act.coeff = coeff;
  if (states::validate_label(out)) {
    act.target = ActionTarget::State;
    act.out = out;
  } else {
    // Lowering crossed the n+m+s >= 0 line: outside the Fock space.
    act.target = ActionTarget::NonFock;
  }
  return act;
}

ZetaAction apply_symbolic(const LadderOp& op, const ZetaLabel& label) {
  require_polar_kind(op);
  if (label.alpha < 0 || label.beta < 0 || label.gamma < 0)
    throw LabelError("occupation numbers must be non-negative");
  const bool three_d = (op.group != GroupKind::O2);
  if (!three_d && label.gamma != 0)
    throw LabelError("O2 occupation labels carry no parallel mode");
  if (three_d && label.s != 0.0)
    throw UnsupportedError(
        "no ladder representation exists for the 3D s=1/2 families");

  const double s = label.s;
  ZetaAction act;
  ZetaLabel out = label;
  double coeff = 0.0;
  switch (op.kind) {
    case LadderKind::AbarPlus:
      coeff = std::sqrt(s + label.alpha + 1.0);
      out.alpha += 1;
      break;
    case LadderKind::AMinus:
      coeff = std::sqrt(s + label.alpha);
      out.alpha -= 1;
      break;
    case LadderKind::AbarMinus:
      coeff = std::sqrt(label.beta + 1.0);
      out.beta += 1;
      break;
    case LadderKind::APlus:
      coeff = std::sqrt(static_cast<double>(label.beta));
      out.beta -= 1;
      break;
    case LadderKind::AbarPar:
      coeff = std::sqrt(label.gamma + 1.0);
      out.gamma += 1;
      break;
    case LadderKind::APar:
      coeff = std::sqrt(static_cast<double>(label.gamma));
      out.gamma -= 1;
      break;
    default:
      throw LabelError("expected a polar ladder kind");
  }
  if (is_zero_coeff(coeff)) return act;  // Zero
  act.coeff = coeff;
  if (out.alpha < 0) {
    // a- on alpha = 0 with s != 0 leaves the Fock space.
    act.target = ActionTarget::NonFock;
  } else {
    act.target = ActionTarget::State;
    act.out = out;
  }
  return act;
}

namespace {

void check_occupation(PhaseConvention c, const Occupation& occ) {
  if (occ.n.empty()) throw LabelError("empty occupation vector");
  const size_t first_spatial = (c == PhaseConvention::Euclidean) ? 0 : 1;
  if (c != PhaseConvention::Euclidean && occ.n.size() < 2)
    throw LabelError("timelike conventions need at least two modes");
  for (size_t i = first_spatial; i < occ.n.size(); ++i)
    if (occ.n[i] < 0) throw LabelError("negative spatial occupation");
  if (c == PhaseConvention::KimNoz && occ.n[0] < 1)
    throw LabelError("KimNoz timelike occupation starts at n0 = 1");
  if (c == PhaseConvention::FKR && occ.n[0] < 0)
    throw LabelError("FKR timelike count must be non-negative");
}

}  // namespace

OccupationAction apply_cartesian(const LadderOp& op, const Occupation& occ) {
  if (op.kind != LadderKind::Cartesian)
    throw LabelError("expected a Cartesian mode operator");
  check_occupation(op.phases, occ);
  if (static_cast<size_t>(op.axis) >= occ.n.size())
    throw LabelError("mode index out of range");

  OccupationAction act;
  Occupation out = occ;
  double coeff = 0.0;
  const bool timelike = (op.phases != PhaseConvention::Euclidean && op.axis == 0);
  const int nk = occ.n[op.axis];
  if (!timelike) {
    coeff = op.bar ? std::sqrt(nk + 1.0) : std::sqrt(static_cast<double>(nk));
    out.n[op.axis] += op.bar ? 1 : -1;
  } else if (op.phases == PhaseConvention::KimNoz) {
    // eta00 = -1 with unit phases: abar^0 |n0> = sqrt(n0 - 1) |n0 - 1>,
    // a^0 |n0> = sqrt(n0) |n0 + 1>; abar^0 annihilates the n0 = 1 floor.
    coeff = op.bar ? std::sqrt(nk - 1.0) : std::sqrt(static_cast<double>(nk));
    out.n[0] += op.bar ? -1 : 1;
  } else {
    // FKR stores the timelike count k = -n0 >= 0:
    // abar^0 |k> = sqrt(k+1) |k+1>, a^0 |k> = sqrt(k) |k-1>.
    coeff = op.bar ? std::sqrt(nk + 1.0) : std::sqrt(static_cast<double>(nk));
    out.n[0] += op.bar ? 1 : -1;
  }
  if (is_zero_coeff(coeff)) return act;  // zero
  act.coeff = coeff;
  act.zero = false;
  act.out = std::move(out);
  return act;
}

double occupation_energy(PhaseConvention c, const Occupation& occ) {
  check_occupation(c, occ);
  const double half_d = 0.5 * static_cast<double>(occ.n.size());
  double spatial = 0.0;
  const size_t first_spatial = (c == PhaseConvention::Euclidean) ? 0 : 1;
  for (size_t i = first_spatial; i < occ.n.size(); ++i) spatial += occ.n[i];
  switch (c) {
    case PhaseConvention::Euclidean:
      return spatial + half_d;
    case PhaseConvention::KimNoz:
      // eta_00 abar^0 a^0 contributes -n0.
      return -occ.n[0] + spatial + half_d;
    case PhaseConvention::FKR:
      // The i phases give abar^0 a^0 = -k, so eta_00 abar^0 a^0 = +k.
      return occ.n[0] + spatial + half_d;
  }
  throw LabelError("unknown phase convention");
}

namespace {

using Evaluator = std::function<Complex(const CoordPoint&)>;

// 4th-order central difference in one coordinate (0 = rho, 1 = phi, 2 = aux).
Complex fd1(const Evaluator& f, const CoordPoint& p, int coord, double h) {
  auto at = [&](double d) {
    CoordPoint q = p;
    if (coord == 0)
      q.rho += d;
    else if (coord == 1)
      q.phi += d;
    else
      q.aux += d;
    return f(q);
  };
  return (-at(2.0 * h) + 8.0 * at(h) - 8.0 * at(-h) + at(-2.0 * h)) / (12.0 * h);
}

Complex differential_value(const LadderOp& op, const Evaluator& f,
                           const CoordPoint& p) {
  require_polar_kind(op);
  if (p.rho <= kAxisThreshold)
    throw DomainError("polar operator application needs rho > 0");

  // Shrink steps so every stencil point stays inside the coordinate chart.
  const double h_rho = std::min(kFdStep, p.rho / 8.0);
  double h_aux = kFdStep;
  if (op.group == GroupKind::O3) {
    const double margin = std::min(p.aux, std::numbers::pi - p.aux);
    if (margin <= kAxisThreshold)
      throw DomainError("polar operator application needs theta away from the poles");
    h_aux = std::min(kFdStep, margin / 8.0);
  }

  const Complex val = f(p);
  const Complex d_rho = fd1(f, p, 0, h_rho);
  const Complex d_phi = fd1(f, p, 1, kFdStep);
  const Complex i{0.0, 1.0};

  const bool bar = (op.kind == LadderKind::AbarPlus ||
                    op.kind == LadderKind::AbarMinus ||
                    op.kind == LadderKind::AbarPar);
  const int pm = (op.kind == LadderKind::APlus || op.kind == LadderKind::AbarPlus)
                     ? +1
                     : -1;

  if (op.group == GroupKind::O2) {
    // a_pm   = (1/2) e^{pm i phi} (rho + d_rho + pm (i/rho) d_phi)
    // abar_pm= (1/2) e^{pm i phi} (rho - d_rho - pm (i/rho) d_phi)
    const Complex phase = std::polar(1.0, pm * p.phi);
    const double sgn = bar ? -1.0 : 1.0;
    return 0.5 * phase *
           (p.rho * val + sgn * (d_rho + static_cast<double>(pm) * i / p.rho * d_phi));
  }

  const Complex d_aux = fd1(f, p, 2, h_aux);
  if (op.group == GroupKind::O3) {
    const double st = std::sin(p.aux), ct = std::cos(p.aux);
    if (op.kind == LadderKind::APar || op.kind == LadderKind::AbarPar) {
      // a3    = (1/sqrt 2)(rho cos(theta) + cos(theta) d_rho - (sin(theta)/rho) d_theta)
      // abar3 = (1/sqrt 2)(rho cos(theta) - cos(theta) d_rho + (sin(theta)/rho) d_theta)
      const double sgn = bar ? -1.0 : 1.0;
      return (p.rho * ct * val + sgn * (ct * d_rho - st / p.rho * d_aux)) /
             std::sqrt(2.0);
    }
    // a_pm    = (1/2) e^{pm i phi} (rho sin(theta) + sin(theta) d_rho
    //            + (cos(theta)/rho) d_theta + pm (i/(rho sin(theta))) d_phi)
    // abar_pm = same with the derivative block negated
    const Complex phase = std::polar(1.0, pm * p.phi);
    const double sgn = bar ? -1.0 : 1.0;
    return 0.5 * phase *
           (p.rho * st * val +
            sgn * (st * d_rho + ct / p.rho * d_aux +
                   static_cast<double>(pm) * i / (p.rho * st) * d_phi));
  }

  // O21 (rapidity beta in aux)
  const double sh = std::sinh(p.aux), ch = std::cosh(p.aux);
  if (op.kind == LadderKind::APar || op.kind == LadderKind::AbarPar) {
    // a0    = (1/sqrt 2)(rho sinh(beta) + sinh(beta) d_rho - (cosh(beta)/rho) d_beta)
    // abar0 = (1/sqrt 2)(rho sinh(beta) - sinh(beta) d_rho + (cosh(beta)/rho) d_beta)
    const double sgn = bar ? -1.0 : 1.0;
    return (p.rho * sh * val + sgn * (sh * d_rho - ch / p.rho * d_aux)) /
           std::sqrt(2.0);
  }
  // a_pm    = (1/2) e^{pm i phi} (rho cosh(beta) + cosh(beta) d_rho
  //            - (sinh(beta)/rho) d_beta + pm (i/(rho cosh(beta))) d_phi)
  // abar_pm = same with the derivative block negated
  const Complex phase = std::polar(1.0, pm * p.phi);
  const double sgn = bar ? -1.0 : 1.0;
  return 0.5 * phase *
         (p.rho * ch * val +
          sgn * (ch * d_rho - sh / p.rho * d_aux +
                 static_cast<double>(pm) * i / (p.rho * ch) * d_phi));
}

}  // namespace

Complex apply_differential(const LadderOp& op, const Evaluator& f,
                           const CoordPoint& p) {
  return differential_value(op, f, p);
}

Complex apply_differential(const LadderOp& op, const states::OscillatorState& st,
                           const CoordPoint& p) {
  if (st.label.group == GroupKind::O2 || st.non_fock) {
    if (op.group != GroupKind::O2)
      throw LabelError("operator and state belong to different groups");
    if (p.rho <= kAxisThreshold)
      throw DomainError("polar operator application needs rho > 0");
    const PolarFun f = to_polarfun(st);
    switch (op.kind) {
      case LadderKind::APlus: return apply_lowering(f, +1).eval(p);
      case LadderKind::AMinus: return apply_lowering(f, -1).eval(p);
      case LadderKind::AbarPlus: return apply_raising(f, +1).eval(p);
      case LadderKind::AbarMinus: return apply_raising(f, -1).eval(p);
      default:
        throw LabelError("parallel-mode operators exist only for the 3D groups");
    }
  }
  return differential_value(
      op, [&st](const CoordPoint& q) { return st.eval(q); }, p);
}

PolarOp ladder_map(LadderKind kind) {
  switch (kind) {
    case LadderKind::APlus:
      return [](const PolarFun& f) { return apply_lowering(f, +1); };
    case LadderKind::AMinus:
      return [](const PolarFun& f) { return apply_lowering(f, -1); };
    case LadderKind::AbarPlus:
      return [](const PolarFun& f) { return apply_raising(f, +1); };
    case LadderKind::AbarMinus:
      return [](const PolarFun& f) { return apply_raising(f, -1); };
    default:
      throw LabelError("only the four O2 polar operators act on the closed family");
  }
}

PolarOp compose(PolarOp outer, PolarOp inner) {
  return [outer = std::move(outer), inner = std::move(inner)](const PolarFun& f) {
    return outer(inner(f));
  };
}

PolarOp op_sum(PolarOp a, PolarOp b) {
  return [a = std::move(a), b = std::move(b)](const PolarFun& f) {
    PolarFun r = a(f) + b(f);
    simplify(r);
    return r;
  };
}

PolarOp op_scale(Complex z, PolarOp a) {
  return [z, a = std::move(a)](const PolarFun& f) { return z * a(f); };
}

PolarOp scalar_map(Complex z) {
  return [z](const PolarFun& f) { return z * f; };
}

PolarOp number_map() {
  return op_sum(compose(ladder_map(LadderKind::AbarPlus), ladder_map(LadderKind::AMinus)),
                compose(ladder_map(LadderKind::AbarMinus), ladder_map(LadderKind::APlus)));
}

PolarOp m_map() {
  return op_sum(
      compose(ladder_map(LadderKind::AbarPlus), ladder_map(LadderKind::AMinus)),
      op_scale(Complex{-1.0, 0.0},
               compose(ladder_map(LadderKind::AbarMinus), ladder_map(LadderKind::APlus))));
}

PolarOp delta_map() {
  return op_sum(compose(ladder_map(LadderKind::AbarPlus), ladder_map(LadderKind::APlus)),
                compose(ladder_map(LadderKind::AbarMinus), ladder_map(LadderKind::AMinus)));
}

PolarOp q_map() {
  return op_scale(
      Complex{0.0, -1.0},
      op_sum(compose(ladder_map(LadderKind::AbarPlus), ladder_map(LadderKind::APlus)),
             op_scale(Complex{-1.0, 0.0},
                      compose(ladder_map(LadderKind::AbarMinus),
                              ladder_map(LadderKind::AMinus)))));
}

Complex polar_inner(const PolarFun& f, const PolarFun& g) {
  // Term pairs with distinct azimuthal frequencies integrate to zero over
  // phi; matching pairs reduce to Gamma-function moments under x = rho^2.
  Complex acc{0.0, 0.0};
  for (const PolarTerm& a : f.terms) {
    for (const PolarTerm& b : g.terms) {
      if (std::abs(a.mu - b.mu) > 1e-12) continue;
      const double p2 = 0.5 * (a.p + b.p);
      Complex radial{0.0, 0.0};
      for (size_t ia = 0; ia < a.q.size(); ++ia)
        for (size_t ib = 0; ib < b.q.size(); ++ib) {
          const Complex w = std::conj(a.q[ia]) * b.q[ib];
          if (w == Complex{0.0, 0.0}) continue;
          const double arg = p2 + static_cast<double>(ia + ib) + 1.0;
          if (arg <= 0.0)
            throw DomainError("inner product diverges at the origin");
          radial += w * std::tgamma(arg);
        }
      acc += std::numbers::pi * std::conj(a.c) * b.c * radial;
    }
  }
  return acc;
}

double polar_norm(const PolarFun& f) {
  return std::sqrt(std::max(0.0, polar_inner(f, f).real()));
}

double commutator_residual(const PolarOp& a, const PolarOp& b,
                           const PolarOp& expected,
                           const std::vector<PolarFun>& probes) {
  double worst = 0.0;
  for (const PolarFun& f : probes) {
    PolarFun r = a(b(f)) - b(a(f)) - expected(f);
    simplify(r);
    const double denom = polar_norm(f);
    if (denom == 0.0) throw DomainError("zero probe function");
    worst = std::max(worst, polar_norm(r) / denom);
  }
  return worst;
}

double commutator_residual(const PolarOp& a, const PolarOp& b, Complex expected,
                           const std::vector<PolarFun>& probes) {
  return commutator_residual(a, b, scalar_map(expected), probes);
}

std::vector<ZetaLabel> zeta_basis_o2(int N, double s) {
  if (N < 0) throw LabelError("mode number must be non-negative");
  std::vector<ZetaLabel> basis;
  basis.reserve(N + 1);
  for (int alpha = N; alpha >= 0; --alpha)
    basis.push_back(ZetaLabel{alpha, N - alpha, 0, s});
  return basis;
}

Su2Generators su2_generators(const std::vector<ZetaLabel>& basis) {
  if (basis.empty()) throw BasisError("empty basis");
  const int N = basis.front().alpha + basis.front().beta;
  for (const ZetaLabel& z : basis) {
    if (z.s != 0.0) throw BasisError("SU(2) blocks require s = 0");
    if (z.gamma != 0) throw BasisError("SU(2) blocks are O2 (no parallel mode)");
    if (z.alpha + z.beta != N) throw BasisError("mixed mode numbers in basis");
  }

  const auto dim = static_cast<Eigen::Index>(basis.size());
  auto index_of = [&](int alpha, int beta) -> Eigen::Index {
    for (Eigen::Index i = 0; i < dim; ++i)
      if (basis[i].alpha == alpha && basis[i].beta == beta) return i;
    return -1;
  };

  Su2Generators gen;
  gen.basis = basis;
  gen.half_m = Eigen::MatrixXcd::Zero(dim, dim);
  gen.half_delta = Eigen::MatrixXcd::Zero(dim, dim);
  gen.half_q = Eigen::MatrixXcd::Zero(dim, dim);

  const Complex i{0.0, 1.0};
  for (Eigen::Index col = 0; col < dim; ++col) {
    const int alpha = basis[col].alpha, beta = basis[col].beta;
    gen.half_m(col, col) = 0.5 * (alpha - beta);
    // Delta zeta_{ab} = sqrt(b(a+1)) zeta_{a+1,b-1} + sqrt(a(b+1)) zeta_{a-1,b+1}
    // Q     zeta_{ab} = -i [ sqrt(b(a+1)) zeta_{a+1,b-1} - sqrt(a(b+1)) zeta_{a-1,b+1} ]
    if (beta > 0) {
      const double c = std::sqrt(static_cast<double>(beta) * (alpha + 1));
      const Eigen::Index row = index_of(alpha + 1, beta - 1);
      gen.half_delta(row, col) += 0.5 * c;
      gen.half_q(row, col) += -0.5 * i * c;
    }
    if (alpha > 0) {
      const double c = std::sqrt(static_cast<double>(alpha) * (beta + 1));
      const Eigen::Index row = index_of(alpha - 1, beta + 1);
      gen.half_delta(row, col) += 0.5 * c;
      gen.half_q(row, col) += 0.5 * i * c;
    }
  }
  return gen;
}

AngularShift angular_raise_lower(GroupKind group, double s, int which, int l, int m) {
  if (group == GroupKind::O2)
    throw LabelError("angular (l,m) ladders belong to the 3D groups");
  if (which != 1 && which != -1) throw LabelError("direction must be +1 or -1");
  if (l < 0) throw LabelError("negative Casimir label");

  AngularShift shift;
  shift.m_out = m + which;
  if (s == 0.0) {
    if (std::abs(m) > l) throw LabelError("|m| must not exceed l for s = 0");
    const double c2 = (which > 0) ? static_cast<double>(l - m) * (l + m + 1)
                                  : static_cast<double>(l + m) * (l - m + 1);
    shift.coeff = (c2 > 0.0) ? std::sqrt(c2) : 0.0;  // zero at the multiplet edges
    return shift;
  }
  if (s == 0.5) {
    if (m < l) throw LabelError("s=1/2 labels require degree m >= order l");
    if (which > 0) {
      shift.coeff = static_cast<double>(m + 1 - l);  // = -(l - m - 1), never zero
    } else {
      // The m = l edge lowers onto a degree < order function, identically 0.
      shift.coeff = (m == l) ? 0.0 : -static_cast<double>(l + m);
    }
    return shift;
  }
  throw LabelError("3D families exist only for s = 0 and s = 1/2");
}

namespace {

PolarFun ground_polarfun(double s) {
  return to_polarfun(states::ground_state(GroupKind::O2, s, 0));
}

}  // namespace

Complex delta_ground_residual(double s, double x, double y) {
  if (x == 0.0 && y == 0.0)
    throw DomainError("ground-state residual undefined at the origin");
  const CoordPoint p{std::hypot(x, y), states::azimuth(x, y), 0.0};
  const PolarFun g = ground_polarfun(s);
  const Complex lhs = delta_map()(g).eval(p);
  const Complex zsq = Complex{x, y} * Complex{x, y};
  const Complex rhs = s * (x * x + y * y - s + 1.0) / zsq * g.eval(p);
  return lhs - rhs;
}

Complex q_ground_residual(double s, double x, double y) {
  if (x == 0.0 && y == 0.0)
    throw DomainError("ground-state residual undefined at the origin");
  const CoordPoint p{std::hypot(x, y), states::azimuth(x, y), 0.0};
  const PolarFun g = ground_polarfun(s);
  const Complex i{0.0, 1.0};
  return q_map()(g).eval(p) - i * delta_map()(g).eval(p);
}

}  // namespace oscalg::ops
