// Batch front-end: every verification the library performs, exposed as a
// subcommand with machine-readable (JSON or CSV) output and stable exit
// codes (0 success, 1 verification failure, 2 usage/range errors).

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "oscalg/algebra.hpp"
#include "oscalg/numerics.hpp"
#include "oscalg/operators.hpp"
#include "oscalg/states.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace oscalg;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kRangeCap = 12;

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return kExitUsage;
}

struct CommonOpts {
  std::string group = "o2";
  double s = 0.0;
  int nmax = 4;
  int lmax = 4;
  int mmax = 4;
  std::string format = "json";
  std::string out;
  std::string config;
  double tol = 1e-7;
};

void add_common(CLI::App* sub, CommonOpts& o) {
  sub->add_option("--group", o.group, "Symmetry group")
      ->check(CLI::IsMember({"o2", "o3", "o21"}));
  sub->add_option("--s", o.s, "Family parameter s");
  sub->add_option("--nmax", o.nmax, "Mode / radial quantum number cap");
  sub->add_option("--lmax", o.lmax, "Casimir label cap (3D)");
  sub->add_option("--mmax", o.mmax, "Angular quantum number cap");
  sub->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", o.out, "Output path (default stdout)");
  sub->add_option("--config", o.config,
                  "Flat key=value file supplying defaults; explicit flags win");
  sub->add_option("--tol", o.tol, "Verification tolerance");
}

// ---- flat key=value config files ----
//
// One `key=value` per line; blank lines and `#` comments ignored.  Values
// apply only to options the user did not pass on the command line, so
// explicit flags always override the file.

struct ConfigKey {
  std::string name;
  std::function<bool(const std::string&)> set;  // false = unparsable value
};

bool set_int(const std::string& v, int& out) {
  try {
    size_t pos = 0;
    const int x = std::stoi(v, &pos);
    if (pos != v.size()) return false;
    out = x;
    return true;
  } catch (...) {
    return false;
  }
}

bool set_double(const std::string& v, double& out) {
  try {
    size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) return false;
    out = x;
    return true;
  } catch (...) {
    return false;
  }
}

bool set_bool(const std::string& v, bool& out) {
  if (v == "true" || v == "1") return out = true, true;
  if (v == "false" || v == "0") return (out = false), true;
  return false;
}

std::string trimmed(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Returns 0 or a usage exit code.
int apply_config(const CLI::App* sub, CommonOpts& o,
                 std::vector<ConfigKey> keys) {
  if (o.config.empty()) return 0;
  keys.push_back({"group", [&o](const std::string& v) {
                    if (v != "o2" && v != "o3" && v != "o21") return false;
                    o.group = v;
                    return true;
                  }});
  keys.push_back({"s", [&o](const std::string& v) { return set_double(v, o.s); }});
  keys.push_back({"nmax", [&o](const std::string& v) { return set_int(v, o.nmax); }});
  keys.push_back({"lmax", [&o](const std::string& v) { return set_int(v, o.lmax); }});
  keys.push_back({"mmax", [&o](const std::string& v) { return set_int(v, o.mmax); }});
  keys.push_back({"format", [&o](const std::string& v) {
                    if (v != "json" && v != "csv") return false;
                    o.format = v;
                    return true;
                  }});
  keys.push_back({"out", [&o](const std::string& v) { return (o.out = v), true; }});
  keys.push_back({"tol", [&o](const std::string& v) { return set_double(v, o.tol); }});

  std::ifstream f(o.config);
  if (!f) return usage_error("cannot read config file " + o.config);
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    const std::string entry = trimmed(line);
    if (entry.empty() || entry[0] == '#') continue;
    const auto eq = entry.find('=');
    if (eq == std::string::npos)
      return usage_error(o.config + ":" + std::to_string(lineno) +
                         ": expected key=value");
    const std::string key = trimmed(entry.substr(0, eq));
    const std::string value = trimmed(entry.substr(eq + 1));
    const auto it =
        std::find_if(keys.begin(), keys.end(),
                     [&key](const ConfigKey& k) { return k.name == key; });
    if (it == keys.end())
      return usage_error(o.config + ":" + std::to_string(lineno) +
                         ": unknown key '" + key + "'");
    if (sub->count("--" + key) > 0) continue;  // explicit flag wins
    if (!it->set(value))
      return usage_error(o.config + ":" + std::to_string(lineno) +
                         ": bad value for '" + key + "'");
  }
  return 0;
}

GroupKind parse_group(const std::string& g) {
  if (g == "o2") return GroupKind::O2;
  if (g == "o3") return GroupKind::O3;
  return GroupKind::O21;
}

// nullopt-style validation: returns empty string when the options are sane.
std::string range_problem(const CommonOpts& o) {
  if (o.nmax < 0 || o.lmax < 0 || o.mmax < 0) return "negative quantum-number cap";
  if (o.nmax > kRangeCap || o.lmax > kRangeCap || o.mmax > kRangeCap)
    return "quantum-number caps are limited to 12";
  const GroupKind g = parse_group(o.group);
  if (g == GroupKind::O2) {
    if (o.s < 0.0 || o.s >= 1.0) return "O2 requires 0 <= s < 1";
  } else if (o.s != 0.0 && o.s != 0.5) {
    return "3D families exist only for s = 0 and s = 1/2";
  }
  return {};
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out_path);
  if (!f) return usage_error("cannot open output path " + out_path);
  f << text;
  return 0;
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// ---- spectrum ----

struct SpectrumRow {
  StateLabel label;
  double energy;
  long degeneracy;  // -1 encodes the infinite s=1/2 towers
};

std::vector<SpectrumRow> enumerate_spectrum(const CommonOpts& o) {
  const GroupKind g = parse_group(o.group);
  std::vector<SpectrumRow> rows;
  if (g == GroupKind::O2) {
    for (int N = 0; N <= o.nmax; ++N) {
      const long deg = alg::multiplicity(g, N + o.s, o.s).count;
      for (int beta = 0; beta <= N; ++beta) {
        StateLabel lb{g, o.s, beta, 0, N - 2 * beta};
        rows.push_back({lb, states::energy(lb), deg});
      }
    }
    return rows;
  }
  if (o.s == 0.0) {
    for (int N = 0; N <= o.nmax; ++N) {
      const long deg = alg::multiplicity(g, N, 0.0).count;
      for (int l : alg::casimir_content(N)) {
        if (l > o.lmax) continue;
        const int mcap = std::min(l, o.mmax);
        for (int m = -mcap; m <= mcap; ++m) {
          StateLabel lb{g, 0.0, (N - l) / 2, l, m};
          rows.push_back({lb, states::energy(lb), deg});
        }
      }
    }
    return rows;
  }
  // s = 1/2: a finite window of the infinite towers.
  for (int n = 0; n <= o.nmax; ++n)
    for (int l = 0; l <= o.lmax; ++l)
      for (int m = l; m <= o.mmax; ++m) {
        StateLabel lb{g, 0.5, n, l, m};
        rows.push_back({lb, states::energy(lb), -1});
      }
  return rows;
}

int cmd_spectrum(const CommonOpts& o) {
  if (auto problem = range_problem(o); !problem.empty()) return usage_error(problem);
  const std::vector<SpectrumRow> rows = enumerate_spectrum(o);
  if (o.format == "csv") {
    std::string text = "group,s,n,l,m,energy,degeneracy\n";
    for (const SpectrumRow& r : rows) {
      text += std::string(group_name(r.label.group)) + "," + fmt_double(r.label.s) +
              "," + std::to_string(r.label.n) + "," + std::to_string(r.label.l) +
              "," + std::to_string(r.label.m) + "," + fmt_double(r.energy) + "," +
              (r.degeneracy < 0 ? "inf" : std::to_string(r.degeneracy)) + "\n";
    }
    return emit(text, o.out);
  }
  json doc;
  doc["schema"] = 1;
  doc["command"] = "spectrum";
  doc["group"] = o.group;
  doc["s"] = o.s;
  doc["rows"] = json::array();
  for (const SpectrumRow& r : rows) {
    json row;
    row["n"] = r.label.n;
    row["l"] = r.label.l;
    row["m"] = r.label.m;
    row["energy"] = r.energy;
    if (r.degeneracy < 0)
      row["degeneracy"] = "inf";
    else
      row["degeneracy"] = r.degeneracy;
    doc["rows"].push_back(row);
  }
  return emit(doc.dump(2) + "\n", o.out);
}

// ---- verify ----

struct CheckLine {
  std::string name;
  double residual;
  std::string status;  // pass | fail | divergent
};

void run_commutator_checks(double s, double tol, std::vector<CheckLine>& checks,
                           bool& failed) {
  using ops::LadderKind;
  std::vector<ops::PolarFun> probes;
  probes.push_back(
      ops::to_polarfun(states::make_state({GroupKind::O2, s, 2, 0, 1})));
  probes.push_back(
      ops::to_polarfun(states::make_state({GroupKind::O2, s, 1, 0, 3})));
  const auto ap = ops::ladder_map(LadderKind::APlus);
  const auto am = ops::ladder_map(LadderKind::AMinus);
  const auto bp = ops::ladder_map(LadderKind::AbarPlus);
  const auto bm = ops::ladder_map(LadderKind::AbarMinus);
  const auto n_op = ops::number_map();
  const auto m_op = ops::m_map();
  const Complex one{1.0, 0.0}, zero{0.0, 0.0};
  const auto minus = [](const ops::PolarOp& a) {
    return ops::op_scale(Complex{-1.0, 0.0}, a);
  };
  struct Item {
    const char* name;
    double residual;
  };
  const Item items[] = {
      {"[a+,abar-]-1", ops::commutator_residual(ap, bm, one, probes)},
      {"[a-,abar+]-1", ops::commutator_residual(am, bp, one, probes)},
      {"[a+,a-]", ops::commutator_residual(ap, am, zero, probes)},
      {"[abar+,abar-]", ops::commutator_residual(bp, bm, zero, probes)},
      {"[a+,abar+]", ops::commutator_residual(ap, bp, zero, probes)},
      {"[a-,abar-]", ops::commutator_residual(am, bm, zero, probes)},
      {"[N,a+]+a+", ops::commutator_residual(n_op, ap, minus(ap), probes)},
      {"[N,a-]+a-", ops::commutator_residual(n_op, am, minus(am), probes)},
      {"[M,a+]-a+", ops::commutator_residual(m_op, ap, ap, probes)},
      {"[M,a-]+a-", ops::commutator_residual(m_op, am, minus(am), probes)},
      {"[M,N]", ops::commutator_residual(m_op, n_op, zero, probes)},
  };
  for (const Item& it : items) {
    const bool ok = it.residual < tol;
    if (!ok) failed = true;
    checks.push_back({std::string("commutator ") + it.name, it.residual,
                      ok ? "pass" : "fail"});
  }
}

int cmd_verify(const CommonOpts& o, bool perturb) {
  if (auto problem = range_problem(o); !problem.empty()) return usage_error(problem);
  const GroupKind g = parse_group(o.group);
  const num::QuadratureSpec spec;
  std::vector<CheckLine> checks;
  bool failed = false;

  // Radial eigenvalue residuals over the enumerated window.
  double worst_residual = 0.0;
  for (const SpectrumRow& r : enumerate_spectrum(o)) {
    const auto st = states::make_state(r.label);
    if (st.norm_const == 0.0) continue;
    worst_residual = std::max(
        worst_residual, num::schrodinger_residual(st, spec, perturb ? 0.1 : 0.0));
  }
  {
    const bool ok = worst_residual < o.tol;
    if (!ok) failed = true;
    checks.push_back({"schrodinger residual (max)", worst_residual,
                      ok ? "pass" : "fail"});
  }

  // Orthonormality where the family is square integrable; divergence
  // reports elsewhere.
  if (g == GroupKind::O2 || (g == GroupKind::O3 && o.s == 0.0)) {
    std::vector<StateLabel> labels;
    if (g == GroupKind::O2) {
      for (int n = 0; n <= std::min(o.nmax, 3); ++n)
        for (int m = 0; m <= std::min(o.mmax, 3); ++m)
          labels.push_back({g, o.s, n, 0, m});
    } else {
      for (int n = 0; n <= std::min(o.nmax, 2); ++n)
        for (int l = 0; l <= std::min(o.lmax, 2); ++l)
          for (int m = -l; m <= l; ++m) labels.push_back({g, 0.0, n, l, m});
    }
    const Eigen::MatrixXcd gram = num::orthonormality_matrix(labels, spec);
    const double dev =
        (gram - Eigen::MatrixXcd::Identity(gram.rows(), gram.cols()))
            .cwiseAbs()
            .maxCoeff();
    const bool ok = dev < o.tol;
    if (!ok) failed = true;
    checks.push_back({"gram identity (max deviation)", dev, ok ? "pass" : "fail"});
  } else {
    for (const SpectrumRow& r : enumerate_spectrum(o)) {
      if (r.label.n > 1 || r.label.l > 2 || r.label.m > 2) continue;
      const auto report = num::norm_report(states::make_state(r.label), spec);
      std::string name = "norm (n=" + std::to_string(r.label.n) +
                         ", l=" + std::to_string(r.label.l) +
                         ", m=" + std::to_string(r.label.m) + ")";
      if (report.divergent) {
        checks.push_back({name, report.value, "divergent"});
      } else {
        const bool ok = report.value > 0.0;
        if (!ok) failed = true;
        checks.push_back({name, report.value, ok ? "pass" : "fail"});
      }
    }
  }

  run_commutator_checks(g == GroupKind::O2 ? o.s : 0.0, o.tol, checks, failed);

  if (o.format == "csv") {
    std::string text = "check,residual,status\n";
    for (const CheckLine& c : checks)
      text += "\"" + c.name + "\"," + fmt_double(c.residual) + "," + c.status + "\n";
    const int rc = emit(text, o.out);
    if (rc != 0) return rc;
  } else {
    json doc;
    doc["schema"] = 1;
    doc["command"] = "verify";
    doc["group"] = o.group;
    doc["s"] = o.s;
    doc["checks"] = json::array();
    for (const CheckLine& c : checks) {
      json row;
      row["name"] = c.name;
      row["residual"] = c.residual;
      row["status"] = c.status;
      doc["checks"].push_back(row);
    }
    doc["passed"] = !failed;
    const int rc = emit(doc.dump(2) + "\n", o.out);
    if (rc != 0) return rc;
  }
  return failed ? kExitVerifyFailed : 0;
}

// ---- blocks ----

json matrix_to_json(const Eigen::MatrixXcd& m) {
  json re = json::array(), im = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json rrow = json::array(), irow = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      rrow.push_back(m(i, j).real());
      irow.push_back(m(i, j).imag());
    }
    re.push_back(rrow);
    im.push_back(irow);
  }
  return json{{"re", re}, {"im", im}};
}

int cmd_blocks(const CommonOpts& o) {
  if (auto problem = range_problem(o); !problem.empty()) return usage_error(problem);
  const int N = o.nmax;

  if (o.format == "csv") {
    // Degeneracy table (level, l, count) over the levels up to N.
    std::string text = "N,l,count\n";
    for (int level = 0; level <= N; ++level)
      for (int l : alg::casimir_content(level))
        text += std::to_string(level) + "," + std::to_string(l) + "," +
                std::to_string(2 * l + 1) + "\n";
    return emit(text, o.out);
  }

  json doc;
  doc["schema"] = 1;
  doc["command"] = "blocks";
  doc["N"] = N;
  doc["s"] = o.s;
  doc["content"] = alg::casimir_content(N);

  doc["msq"] = json::array();
  for (int m = 0; m <= N; ++m) {
    const alg::OperatorBlock block = alg::msq_block(N, m);
    json entry;
    entry["m"] = m;
    entry["basis"] = json::array();
    for (const ZetaLabel& z : block.basis)
      entry["basis"].push_back({z.alpha, z.beta, z.gamma});
    entry.update(matrix_to_json(block.entries));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(block.entries);
    json eig = json::array();
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
      eig.push_back(es.eigenvalues()(i) + 0.0);  // map -0.0 to 0.0
    entry["eigenvalues"] = eig;
    doc["msq"].push_back(entry);
  }

  const alg::DeltaBlock delta = alg::delta_block(N, o.s);
  json dj;
  dj["basis"] = json::array();
  for (const ZetaLabel& z : delta.block.basis)
    dj["basis"].push_back({z.alpha, z.beta});
  dj.update(matrix_to_json(delta.block.entries));
  dj["ground_residual"] = delta.ground_residual;
  if (!delta.ground_residual) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(delta.block.entries);
    json eig = json::array();
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
      eig.push_back(es.eigenvalues()(i) + 0.0);
    dj["eigenvalues"] = eig;
  }
  doc["delta"] = dj;
  return emit(doc.dump(2) + "\n", o.out);
}

// ---- ghost ----

int cmd_ghost(const CommonOpts& o) {
  if (auto problem = range_problem(o); !problem.empty()) return usage_error(problem);
  struct GhostRow {
    ops::PhaseConvention convention;
    int n0;
    double norm, energy;
  };
  std::vector<GhostRow> rows;
  for (int n0 = 1; n0 <= 4; ++n0) {
    const ops::Occupation occ{{n0, 0, 0}};
    rows.push_back({ops::PhaseConvention::KimNoz, n0,
                    num::ghost_norm(ops::PhaseConvention::KimNoz, n0),
                    ops::occupation_energy(ops::PhaseConvention::KimNoz, occ)});
  }
  for (int n0 = 0; n0 <= 4; ++n0) {
    const ops::Occupation occ{{n0, 0, 0}};
    rows.push_back({ops::PhaseConvention::FKR, n0,
                    num::ghost_norm(ops::PhaseConvention::FKR, n0),
                    ops::occupation_energy(ops::PhaseConvention::FKR, occ)});
  }

  if (o.format == "csv") {
    std::string text = "convention,n0,norm,energy\n";
    for (const GhostRow& r : rows)
      text += std::string(ops::phase_convention_name(r.convention)) + "," +
              std::to_string(r.n0) + "," + fmt_double(r.norm) + "," +
              fmt_double(r.energy) + "\n";
    return emit(text, o.out);
  }
  json doc;
  doc["schema"] = 1;
  doc["command"] = "ghost";
  doc["rows"] = json::array();
  for (const GhostRow& r : rows) {
    json row;
    row["convention"] = ops::phase_convention_name(r.convention);
    row["n0"] = r.n0;
    row["norm"] = r.norm;
    row["energy"] = r.energy;
    doc["rows"].push_back(row);
  }
  return emit(doc.dump(2) + "\n", o.out);
}

// ---- eval ----

int cmd_eval(const CommonOpts& o, int n, int l, int m, double aux, double phi,
             bool aux_set) {
  if (auto problem = range_problem(o); !problem.empty()) return usage_error(problem);
  const GroupKind g = parse_group(o.group);
  const StateLabel label{g, o.s, n, l, m};
  if (!states::validate_label(label)) return usage_error("inadmissible state label");
  if (!aux_set)
    aux = (g == GroupKind::O3) ? std::numbers::pi / 3.0
                               : (g == GroupKind::O21 ? 0.5 : 0.0);
  const auto st = states::make_state(label);

  struct EvalRow {
    double rho, aux, phi;
    Complex value;
  };
  std::vector<EvalRow> rows;
  for (int k = 1; k <= 8; ++k) {
    const double rho = 0.25 * k;
    rows.push_back({rho, aux, phi, st.eval({rho, phi, aux})});
  }

  if (o.format == "csv") {
    std::string text = "rho,aux,phi,re,im\n";
    for (const EvalRow& r : rows)
      text += fmt_double(r.rho) + "," + fmt_double(r.aux) + "," +
              fmt_double(r.phi) + "," + fmt_double(r.value.real()) + "," +
              fmt_double(r.value.imag()) + "\n";
    return emit(text, o.out);
  }
  json doc;
  doc["schema"] = 1;
  doc["command"] = "eval";
  doc["group"] = o.group;
  doc["s"] = o.s;
  doc["n"] = n;
  doc["l"] = l;
  doc["m"] = m;
  doc["rows"] = json::array();
  for (const EvalRow& r : rows) {
    json row;
    row["rho"] = r.rho;
    row["aux"] = r.aux;
    row["phi"] = r.phi;
    row["re"] = r.value.real();
    row["im"] = r.value.imag();
    doc["rows"].push_back(row);
  }
  return emit(doc.dump(2) + "\n", o.out);
}

// ---- tensor ----

int cmd_tensor(const CommonOpts& o, int j, int m) {
  if (j < 0 || j > kRangeCap) return usage_error("tensor rank out of range");
  if (std::abs(m) > j) return usage_error("|m| must not exceed the tensor rank");
  const alg::TensorOperator op = alg::tensor_operator(j, m);

  if (o.format == "csv") {
    std::string text = "p_plus,p_par,p_minus,coeff_re,coeff_im\n";
    for (const alg::TensorTerm& t : op.terms)
      text += std::to_string(t.p_plus) + "," + std::to_string(t.p_par) + "," +
              std::to_string(t.p_minus) + "," + fmt_double(t.coeff.real()) +
              "," + fmt_double(t.coeff.imag()) + "\n";
    return emit(text, o.out);
  }
  json doc;
  doc["schema"] = 1;
  doc["command"] = "tensor";
  doc["j"] = j;
  doc["m"] = m;
  doc["terms"] = json::array();
  for (const alg::TensorTerm& t : op.terms) {
    json row;
    row["p_plus"] = t.p_plus;
    row["p_par"] = t.p_par;
    row["p_minus"] = t.p_minus;
    row["coeff_re"] = t.coeff.real();
    row["coeff_im"] = t.coeff.imag();
    doc["terms"].push_back(row);
  }
  return emit(doc.dump(2) + "\n", o.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Oscillator symmetry-family constructor and verifier"};
  app.require_subcommand(1);

  CommonOpts spectrum_opts, verify_opts, blocks_opts, ghost_opts, eval_opts,
      tensor_opts;
  bool perturb = false;
  int eval_n = 0, eval_l = 0, eval_m = 0;
  double eval_aux = 0.0, eval_phi = std::numbers::pi / 4.0;
  int tensor_j = 1, tensor_m = 0;

  CLI::App* sp = app.add_subcommand("spectrum", "Energy table with degeneracies");
  add_common(sp, spectrum_opts);

  CLI::App* vf = app.add_subcommand("verify", "Residual / orthonormality / algebra suite");
  add_common(vf, verify_opts);
  vf->add_flag("--perturb", perturb,
               "Inject an energy perturbation (negative control; must fail)");

  CLI::App* bl = app.add_subcommand("blocks", "Casimir and Delta block matrices");
  add_common(bl, blocks_opts);

  CLI::App* gh = app.add_subcommand("ghost", "Timelike-mode norms and energies");
  add_common(gh, ghost_opts);

  CLI::App* ev = app.add_subcommand("eval", "Evaluate one state on a radial ray");
  add_common(ev, eval_opts);
  ev->add_option("--n", eval_n, "Radial quantum number");
  ev->add_option("--l", eval_l, "Casimir label (3D)");
  ev->add_option("--m", eval_m, "Angular quantum number");
  CLI::Option* aux_opt = ev->add_option("--aux", eval_aux, "theta / rapidity");
  ev->add_option("--phi", eval_phi, "Azimuthal angle");

  CLI::App* tn = app.add_subcommand("tensor", "Irreducible creation tensor terms");
  add_common(tn, tensor_opts);
  tn->add_option("--j", tensor_j, "Tensor rank");
  tn->add_option("--tm", tensor_m, "Tensor component");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  bool config_aux = false;
  try {
    if (sp->parsed()) {
      if (int rc = apply_config(sp, spectrum_opts, {})) return rc;
      return cmd_spectrum(spectrum_opts);
    }
    if (vf->parsed()) {
      if (int rc = apply_config(
              vf, verify_opts,
              {{"perturb",
                [&](const std::string& v) { return set_bool(v, perturb); }}}))
        return rc;
      return cmd_verify(verify_opts, perturb);
    }
    if (bl->parsed()) {
      if (int rc = apply_config(bl, blocks_opts, {})) return rc;
      return cmd_blocks(blocks_opts);
    }
    if (gh->parsed()) {
      if (int rc = apply_config(gh, ghost_opts, {})) return rc;
      return cmd_ghost(ghost_opts);
    }
    if (ev->parsed()) {
      if (int rc = apply_config(
              ev, eval_opts,
              {{"n", [&](const std::string& v) { return set_int(v, eval_n); }},
               {"l", [&](const std::string& v) { return set_int(v, eval_l); }},
               {"m", [&](const std::string& v) { return set_int(v, eval_m); }},
               {"aux",
                [&](const std::string& v) {
                  config_aux = true;
                  return set_double(v, eval_aux);
                }},
               {"phi",
                [&](const std::string& v) { return set_double(v, eval_phi); }}}))
        return rc;
      return cmd_eval(eval_opts, eval_n, eval_l, eval_m, eval_aux, eval_phi,
                      aux_opt->count() > 0 || config_aux);
    }
    if (tn->parsed()) {
      if (int rc = apply_config(
              tn, tensor_opts,
              {{"j", [&](const std::string& v) { return set_int(v, tensor_j); }},
               {"tm",
                [&](const std::string& v) { return set_int(v, tensor_m); }}}))
        return rc;
      return cmd_tensor(tensor_opts, tensor_j, tensor_m);
    }
  } catch (const LabelError& e) {
    return usage_error(e.what());
  } catch (const DomainError& e) {
    return usage_error(e.what());
  } catch (const BasisError& e) {
    return usage_error(e.what());
  } catch (const UnsupportedError& e) {
    return usage_error(e.what());
  }
  return kExitUsage;
}
