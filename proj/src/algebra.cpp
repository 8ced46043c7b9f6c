#include "oscalg/algebra.hpp"

#include <cmath>
#include <map>

#include "oscalg/operators.hpp"
#include "oscalg/specfun.hpp"

namespace oscalg::alg {

ZetaStateMap zeta_to_state_2d(const ZetaLabel& z) {
  if (z.alpha < 0 || z.beta < 0 || z.gamma != 0)
    throw LabelError("2D occupation labels need alpha, beta >= 0 and no parallel mode");
  ZetaStateMap map;
  map.label = StateLabel{GroupKind::O2, z.s, z.beta, 0, z.alpha - z.beta};
  map.normalization =
      std::sqrt(std::tgamma(z.beta + 1.0) * std::tgamma(z.s + z.alpha + 1.0) /
                std::tgamma(z.s + 1.0));
  return map;
}

namespace {

bool near_integer(double x) { return std::abs(x - std::round(x)) < 1e-9; }

}  // namespace

Multiplicity multiplicity(GroupKind group, double N, double s) {
  Multiplicity mult;
  if (group == GroupKind::O2) {
    if (s < 0.0 || s >= 1.0) throw LabelError("O2 requires 0 <= s < 1");
    const double k = N - s;
    if (!near_integer(k) || k < -0.5)
      throw LabelError("O2 mode number must be s plus a non-negative integer");
    mult.count = std::lround(k) + 1;
    return mult;
  }
  if (s == 0.0) {
    if (!near_integer(N) || N < -0.5)
      throw LabelError("3D s=0 mode number must be a non-negative integer");
    const long n = std::lround(N);
    mult.count = (n + 1) * (n + 2) / 2;
    return mult;
  }
  if (s == 0.5) {
    mult.finite = false;  // every level hosts an infinite (l, m) tower
    return mult;
  }
  throw LabelError("3D families exist only for s = 0 and s = 1/2");
}

std::vector<int> casimir_content(int N) {
  if (N < 0) throw LabelError("mode number must be non-negative");
  std::vector<int> ls;
  for (int l = N; l >= 0; l -= 2) ls.push_back(l);
  return ls;
}

OperatorBlock msq_block(int N, int m) {
  if (N < 0) throw LabelError("mode number must be non-negative");
  // alpha - beta = m and alpha + beta = N - gamma fix (alpha, beta) for each
  // admissible gamma (same parity as N + m, gamma <= N - |m|).
  std::vector<ZetaLabel> basis;
  for (int gamma = 0; gamma <= N - std::abs(m); ++gamma) {
    if ((N - gamma + m) % 2 != 0) continue;
    const int alpha = (N - gamma + m) / 2;
    const int beta = (N - gamma - m) / 2;
    if (alpha < 0 || beta < 0) continue;
    basis.push_back(ZetaLabel{alpha, beta, gamma, 0.0});
  }
  if (basis.empty()) throw LabelError("no occupation states with this (N, m)");

  const auto dim = static_cast<Eigen::Index>(basis.size());
  auto index_of = [&](int gamma) -> Eigen::Index {
    for (Eigen::Index i = 0; i < dim; ++i)
      if (basis[i].gamma == gamma) return i;
    return -1;
  };

  OperatorBlock block;
  block.basis = basis;
  block.entries = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const double a = basis[col].alpha, b = basis[col].beta, g = basis[col].gamma;
    block.entries(col, col) = N * (N + 1.0) - 4.0 * a * b - g * (g - 1.0);
    if (a >= 1.0 && b >= 1.0) {
      const Eigen::Index row = index_of(basis[col].gamma + 2);
      block.entries(row, col) = -2.0 * std::sqrt(a * b * (g + 1.0) * (g + 2.0));
    }
    if (g >= 2.0) {
      const Eigen::Index row = index_of(basis[col].gamma - 2);
      block.entries(row, col) = -2.0 * std::sqrt((a + 1.0) * (b + 1.0) * g * (g - 1.0));
    }
  }
  return block;
}

DeltaBlock delta_block(int N, double s) {
  DeltaBlock result;
  result.ground_residual = (s != 0.0);
  result.block.basis = ops::zeta_basis_o2(N, s);
  const auto dim = static_cast<Eigen::Index>(result.block.basis.size());
  result.block.entries = Eigen::MatrixXcd::Zero(dim, dim);
  // Descending-alpha order: column i holds alpha = N - i.
  for (Eigen::Index col = 0; col < dim; ++col) {
    const int alpha = result.block.basis[col].alpha;
    const int beta = result.block.basis[col].beta;
    if (beta >= 1)
      result.block.entries(col - 1, col) = std::sqrt(beta * (s + alpha + 1.0));
    if (alpha >= 1)
      result.block.entries(col + 1, col) =
          alpha * std::sqrt((beta + 1.0) / (s + alpha));
  }
  return result;
}

namespace {

using MonomialMap = std::map<std::array<int, 3>, Complex>;  // (p+, p_par, p-)

MonomialMap fundamental(int m) {
  switch (m) {
    case -1: return {{{0, 0, 1}, Complex{1.0, 0.0}}};
    case 0: return {{{0, 1, 0}, Complex{1.0, 0.0}}};
    case 1: return {{{1, 0, 0}, Complex{-1.0, 0.0}}};
  }
  throw LabelError("fundamental multiplet has components -1, 0, +1");
}

void accumulate_product(MonomialMap& acc, Complex cg, const MonomialMap& a,
                        const MonomialMap& b) {
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      const std::array<int, 3> key{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]};
      acc[key] += cg * ca * cb;
    }
}

MonomialMap tensor_monomials(int j, int m) {
  if (j == 1) return fundamental(m);
  MonomialMap acc;
  if (j == 0) {
    // 1 x 1 -> 0 contraction of the fundamental with itself.
    for (int m2 = -1; m2 <= 1; ++m2) {
      const double cg = specfun::clebsch_gordan(
          {1.0, static_cast<double>(-m2), 1.0, static_cast<double>(m2), 0.0, 0.0});
      accumulate_product(acc, Complex{cg, 0.0}, fundamental(-m2), fundamental(m2));
    }
    return acc;
  }
  // Stretched product (j-1) x 1 -> j.
  for (int m2 = -1; m2 <= 1; ++m2) {
    const int m1 = m - m2;
    if (std::abs(m1) > j - 1) continue;
    const double cg = specfun::clebsch_gordan(
        {j - 1.0, static_cast<double>(m1), 1.0, static_cast<double>(m2),
         static_cast<double>(j), static_cast<double>(m)});
    if (cg == 0.0) continue;
    accumulate_product(acc, Complex{cg, 0.0}, tensor_monomials(j - 1, m1),
                       fundamental(m2));
  }
  return acc;
}

}  // namespace

TensorOperator tensor_operator(int j, int m) {
  if (j < 0) throw LabelError("tensor rank must be non-negative");
  if (std::abs(m) > j) throw LabelError("|m| must not exceed the tensor rank");
  TensorOperator op;
  op.j = j;
  op.m = m;
  for (const auto& [key, coeff] : tensor_monomials(j, m)) {
    if (coeff == Complex{0.0, 0.0}) continue;
    op.terms.push_back(TensorTerm{coeff, key[0], key[1], key[2]});
  }
  return op;
}

ops::GaussianPoly build_excited(const TensorOperator& tensor,
                                const states::OscillatorState& ground) {
  if (ground.label.s == 0.5)
    throw UnsupportedError(
        "the s=1/2 families admit no creation-operator representation; "
        "tensor application fails at the first factor");
  if (ground.label.group == GroupKind::O2)
    throw LabelError("tensor multiplets act on the 3D ground states");
  if (ground.label.s != 0.0 || ground.label.n != 0 || ground.label.l != 0 ||
      ground.label.m != 0 || ground.non_fock)
    throw LabelError("expected an s=0 ground state");

  ops::GaussianPoly base = ops::gaussian_ground(ground.label.group);
  // Seed with the ground state's full pointwise amplitude: the radial
  // constant times the (constant) l=0 angular factor of the chart, so the
  // excited images match the eigenstates without any rescaling.
  base *= Complex{
      ground.norm_const * states::angular_factor(ground.label, 0.0), 0.0};

  ops::GaussianPoly out;
  out.hyperbolic = base.hyperbolic;
  for (const TensorTerm& term : tensor.terms) {
    ops::GaussianPoly g = base;
    for (int k = 0; k < term.p_plus; ++k) g = ops::create_circular(g, +1);
    for (int k = 0; k < term.p_par; ++k) g = ops::create(g, 2);
    for (int k = 0; k < term.p_minus; ++k) g = ops::create_circular(g, -1);
    g *= term.coeff;
    out += g;
  }
  return out;
}

}  // namespace oscalg::alg
