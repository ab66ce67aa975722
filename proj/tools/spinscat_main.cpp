// spinscat: desk-scale simulator of two-electron spin scattering with
// order-(v/c)^2 corrections, plus an entanglement analyzer.
//
// Subcommands: verify, amplitude, evolve, scan, oracle, second-born.
// Output is JSON Lines (one record per line), deterministic for a fixed
// configuration and seed: no timestamps, no machine identifiers. Exit codes:
// 0 success, 1 computation failure, 2 configuration/usage error.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "spinscat/born1.hpp"
#include "spinscat/born2.hpp"
#include "spinscat/entanglement.hpp"
#include "spinscat/errors.hpp"
#include "spinscat/evolution.hpp"
#include "spinscat/fourier_oracle.hpp"
#include "spinscat/version.hpp"

using json = nlohmann::ordered_json;
using namespace spinscat;

namespace {

//==============================================================================
// Output plumbing

struct Options {
  std::uint64_t seed = 20260817ULL;
  double alpha = kAlphaFS;
  std::string out_path;
  bool summary = false;
  bool serial = false;

  ExecPolicy policy() const {
    return serial ? ExecPolicy::Serial : ExecPolicy::Parallel;
  }
  PotentialParams params() const { return PotentialParams{alpha}; }
};

class RecordSink {
public:
  explicit RecordSink(const std::string &out_path) {
    if (!out_path.empty()) {
      std::filesystem::path p(out_path);
      if (p.is_relative()) {
        if (const char *dir = std::getenv("SPINSCAT_OUT_DIR"))
          p = std::filesystem::path(dir) / p;
      }
      file_.emplace(p, std::ios::trunc);
      if (!file_->is_open())
        throw std::runtime_error("cannot open output file: " + p.string());
    }
  }

  void write(const json &rec) {
    std::ostream &os = file_ ? static_cast<std::ostream &>(*file_) : std::cout;
    os << rec.dump() << '\n';
  }

private:
  std::optional<std::ofstream> file_;
};

std::uint64_t fnv1a64(const std::string &s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream ss;
  ss << std::hex << std::setw(16) << std::setfill('0') << v;
  return ss.str();
}

json header_record(const std::string &command, const Options &opt,
                   const json &params) {
  json effective = params;
  effective["command"] = command;
  effective["alpha"] = opt.alpha;
  effective["seed"] = opt.seed;
  json h;
  h["record"] = "header";
  h["tool"] = "spinscat";
  h["version"] = kVersion;
  h["command"] = command;
  h["alpha"] = opt.alpha;
  h["seed"] = opt.seed;
  h["config_hash"] = hex64(fnv1a64(effective.dump()));
  return h;
}

json complex_json(const Complex &z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const Mat4c &m) {
  json rows = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int j = 0; j < 4; ++j)
      row.push_back(complex_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json amplitudes_json(const Vec4c &a) {
  json out = json::array();
  for (int i = 0; i < 4; ++i)
    out.push_back(complex_json(a(i)));
  return out;
}

json record_json(const EvolutionRecord &r) {
  json j;
  j["record"] = "evolution";
  j["initial"] = r.initial_label;
  j["k"] = r.k;
  j["theta"] = r.theta;
  j["phi"] = r.phi;
  j["initial_concurrence"] = r.initial_concurrence;
  j["forbidden"] = r.forbidden;
  j["outgoing_norm_ratio"] = r.outgoing_norm_ratio;
  if (r.forbidden) {
    j["final_concurrence"] = nullptr;
    j["final_amplitudes"] = nullptr;
  } else {
    j["final_concurrence"] = r.final_concurrence;
    j["final_amplitudes"] = amplitudes_json(r.final_amplitudes);
  }
  return j;
}

//==============================================================================
// verify

struct Check {
  std::string name;
  double metric;
  double tolerance;
  bool pass;
};

std::vector<Check> run_verify(const Options &opt) {
  std::vector<Check> checks;
  const PotentialParams pp = opt.params();
  const ExecPolicy pol = opt.policy();

  // 1. Sector selection rule over random general-frame elastic kinematics.
  {
    const SelectionRuleReport rep =
        selection_rule_report(100, 1.0, opt.seed, pp, pol);
    checks.push_back({"selection_rule_offblock", rep.max_offblock_ratio, 1e-12,
                      rep.pass});
  }

  const std::vector<double> ks = {0.5, 1.0, 2.0};
  const std::vector<double> thetas = make_theta_grid(64);
  const std::vector<double> phis = make_phi_grid(16);

  // 2. Singlet fixed point: psi- returns to psi- everywhere on the grid.
  {
    const ScanResult scan = scan_entanglement(
        bell_state(Bell::PsiMinus), "psi_minus", ks, thetas, phis, pp, pol);
    double worst = 0.0;
    const Vec4c psim = bell_state(Bell::PsiMinus).amplitudes();
    for (const auto &r : scan.records) {
      if (r.forbidden)
        continue;
      const double fid = std::abs(psim.dot(r.final_amplitudes));
      worst = std::max(worst, 1.0 - fid);
    }
    checks.push_back({"singlet_fixed_point_defect", worst, 1e-10, worst <= 1e-10});
  }

  // 3. No singlet generation from the symmetric sector.
  {
    double worst = 0.0;
    const Vec4c psim = bell_state(Bell::PsiMinus).amplitudes();
    for (const std::string label :
         {"psi_plus", "phi_plus", "phi_minus", "cdg:1,0.5,0.25",
          "cdg:0.8,0.36,0.48"}) {
      const ScanResult scan = scan_entanglement(parse_initial_state(label),
                                                label, ks, thetas, phis, pp, pol);
      for (const auto &r : scan.records) {
        if (r.forbidden)
          continue;
        worst = std::max(worst, std::abs(psim.dot(r.final_amplitudes)));
      }
    }
    checks.push_back({"singlet_generation_overlap", worst, 1e-12, worst <= 1e-12});
  }

  // 4. Closed-form kernels against the quadrature oracle.
  {
    double worst = 0.0;
    std::mt19937_64 rng(opt.seed ^ 0xabcdef12345ULL);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    auto rand_dir = [&] {
      const double c = 2.0 * u01(rng) - 1.0;
      const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
      const double ph = 2.0 * std::numbers::pi * u01(rng);
      return Vec3(s * std::cos(ph), s * std::sin(ph), c);
    };
    for (double qmag : {0.1, 0.5, 1.0, 2.0, 5.0}) {
      const Vec3 q = qmag * rand_dir();
      const OracleTransforms t = oracle_all(q, {}, pol);
      const Vec3 p1 = rand_dir() * (0.5 + u01(rng));
      const Vec3 p2 = rand_dir() * (0.5 + u01(rng));
      const SpinOperator kc = coulomb_kernel(q, p1, p2, pp).op;
      const SpinOperator kls = spin_orbit_kernel(q, p1, p2, pp).op;
      const SpinOperator kss = spin_spin_kernel(q, pp).op;
      const SpinOperator oc = assemble_coulomb(t, p1, p2, pp);
      const SpinOperator ols = assemble_spin_orbit(t, p1, p2, pp);
      const SpinOperator oss = assemble_spin_spin(t, pp);
      worst = std::max(worst, (kc - oc).frobenius_norm() / oc.frobenius_norm());
      worst =
          std::max(worst, (kls - ols).frobenius_norm() / ols.frobenius_norm());
      worst =
          std::max(worst, (kss - oss).frobenius_norm() / oss.frobenius_norm());
    }
    checks.push_back({"kernel_oracle_rel_diff", worst, 1e-4, worst <= 1e-4});
  }

  // 5. Second-order structure: Coulomb-only ladder keeps the sector split
  //    and the crossed term vanishes; an energy-dependent mock is live.
  {
    const Kinematics kin = cm_elastic_kinematics(1.0, 1.1, 0.3);
    const IntermediateGrid grid = make_intermediate_grid(1.0, 16, 16, 1e-3);
    const SpinOperator lad = ladder_element(kin.p1_out, kin.p2_out, kin.p1_in,
                                            kin.p2_in, grid,
                                            coulomb_energy_kernel(), pol);
    const SpinOperator cro = crossed_element(kin.p1_out, kin.p2_out, kin.p1_in,
                                             kin.p2_in, grid,
                                             coulomb_energy_kernel(), pol);
    double comm = 0.0;
    for (int ax = 0; ax < 3; ++ax)
      comm = std::max(comm,
                      commutator(lad, sigma_total(ax)).frobenius_norm());
    const double off = offblock_ratio(lad);
    checks.push_back({"ladder_offblock", off, 1e-14, off <= 1e-14});
    checks.push_back({"ladder_total_spin_commutator", comm, 1e-14, comm <= 1e-14});
    checks.push_back(
        {"crossed_coulomb_norm", cro.frobenius_norm(), 1e-15,
         cro.frobenius_norm() <= 1e-15});

    EnergyKernel mock = [](double e, const Vec3 &q) {
      return SpinOperator(((0.3 + e) * 4.0 * std::numbers::pi /
                           (q.squaredNorm() + 1.0)) *
                          Mat4c::Identity());
    };
    const SpinOperator mock_cross = crossed_element(
        kin.p1_out, kin.p2_out, kin.p1_in, kin.p2_in, grid, mock, pol);
    const double live = mock_cross.frobenius_norm();
    checks.push_back({"crossed_mock_liveness", live, 0.0, live > 0.0});
  }

  return checks;
}

int cmd_verify(const Options &opt) {
  RecordSink sink(opt.out_path);
  sink.write(header_record("verify", opt, json::object()));
  const std::vector<Check> checks = run_verify(opt);
  bool all = true;
  for (const Check &c : checks) {
    json j;
    j["record"] = "check";
    j["name"] = c.name;
    j["metric"] = c.metric;
    j["tolerance"] = c.tolerance;
    j["pass"] = c.pass;
    sink.write(j);
    all = all && c.pass;
  }
  json res;
  res["record"] = "result";
  res["pass"] = all;
  sink.write(res);
  if (opt.summary) {
    std::cout << "verify summary\n";
    for (const Check &c : checks)
      std::cout << "  " << (c.pass ? "ok   " : "FAIL ") << c.name
                << "  metric=" << c.metric << " tol=" << c.tolerance << "\n";
    std::cout << (all ? "all checks passed\n" : "some checks FAILED\n");
  }
  return all ? 0 : 1;
}

//==============================================================================
// amplitude

int cmd_amplitude(const Options &opt, double k, double theta, double phi) {
  RecordSink sink(opt.out_path);
  json params;
  params["k"] = k;
  params["theta"] = theta;
  params["phi"] = phi;
  sink.write(header_record("amplitude", opt, params));

  const Kinematics kin = cm_elastic_kinematics(k, theta, phi);
  const AmplitudeOperator amp = first_born(kin, opt.params());

  json j;
  j["record"] = "amplitude";
  j["k"] = k;
  j["theta"] = theta;
  j["phi"] = phi;
  j["q"] = {kin.q(0), kin.q(1), kin.q(2)};
  j["q_ex"] = {kin.q_ex(0), kin.q_ex(1), kin.q_ex(2)};
  j["direct"] = matrix_json(amp.direct.matrix());
  j["exchange"] = matrix_json(amp.exchange.matrix());
  j["total"] = matrix_json(amp.total.matrix());
  j["offblock_ratio"] = offblock_ratio(amp.total);
  j["triplet_block_norm"] = triplet_block_norm(amp.total);
  j["singlet_block_norm"] = singlet_block_norm(amp.total);
  sink.write(j);

  if (opt.summary) {
    std::cout << "amplitude at k=" << k << " theta=" << theta
              << " phi=" << phi << "\n"
              << "  |q| = " << kin.q.norm() << "  |q_ex| = " << kin.q_ex.norm()
              << "\n  offblock ratio = " << offblock_ratio(amp.total)
              << "\n  triplet block norm = " << triplet_block_norm(amp.total)
              << "\n  singlet block norm = " << singlet_block_norm(amp.total)
              << "\n";
  }
  return 0;
}

//==============================================================================
// evolve / scan

int cmd_evolve(const Options &opt, const std::string &initial, double k,
               double theta, double phi) {
  RecordSink sink(opt.out_path);
  json params;
  params["initial"] = initial;
  params["k"] = k;
  params["theta"] = theta;
  params["phi"] = phi;
  sink.write(header_record("evolve", opt, params));

  const SpinState chi = parse_initial_state(initial);
  const ScanResult res = scan_entanglement(chi, initial, {k}, {theta}, {phi},
                                           opt.params(), opt.policy());
  sink.write(record_json(res.records.front()));
  if (opt.summary) {
    const EvolutionRecord &r = res.records.front();
    std::cout << "evolve " << initial << " at k=" << k << " theta=" << theta
              << " phi=" << phi << "\n";
    if (r.forbidden)
      std::cout << "  forbidden transition (norm ratio "
                << r.outgoing_norm_ratio << ")\n";
    else
      std::cout << "  concurrence " << r.initial_concurrence << " -> "
                << r.final_concurrence << "\n";
  }
  return 0;
}

int cmd_scan(const Options &opt, const std::string &initial,
             std::vector<double> ks, int n_theta, int n_phi) {
  RecordSink sink(opt.out_path);
  json params;
  params["initial"] = initial;
  params["k_grid"] = ks;
  params["n_theta"] = n_theta;
  params["n_phi"] = n_phi;
  sink.write(header_record("scan", opt, params));

  const SpinState chi = parse_initial_state(initial);
  const ScanResult res =
      scan_entanglement(chi, initial, ks, make_theta_grid(n_theta),
                        make_phi_grid(n_phi), opt.params(), opt.policy());
  for (const auto &r : res.records)
    sink.write(record_json(r));

  json s;
  s["record"] = "summary";
  s["n_records"] = res.summary.n_records;
  s["n_forbidden"] = res.summary.n_forbidden;
  s["min_concurrence"] = res.summary.min_concurrence;
  s["max_concurrence"] = res.summary.max_concurrence;
  s["arg_min"] = record_json(res.summary.arg_min);
  sink.write(s);

  if (opt.summary) {
    std::cout << "scan " << initial << ": " << res.summary.n_records
              << " points, " << res.summary.n_forbidden << " forbidden\n"
              << "  final concurrence in [" << res.summary.min_concurrence
              << ", " << res.summary.max_concurrence << "]\n"
              << "  minimum at k=" << res.summary.arg_min.k
              << " theta=" << res.summary.arg_min.theta
              << " phi=" << res.summary.arg_min.phi << "\n";
  }
  return 0;
}

//==============================================================================
// oracle

int cmd_oracle(const Options &opt, const std::string &term, double qmag,
               const std::vector<double> &qdir) {
  RecordSink sink(opt.out_path);
  json params;
  params["term"] = term;
  params["q_mag"] = qmag;
  params["q_dir"] = qdir;
  sink.write(header_record("oracle", opt, params));

  const bool known_term =
      term == "all" || term == "one_over_r" || term == "contact_delta" ||
      term == "vector_r_over_r3" || term == "tensor_rr_over_r3" ||
      term == "tensor_traceless_r5";
  if (!known_term)
    throw CLI::ValidationError("--term: unknown transform '" + term + "'");

  Vec3 dir;
  if (!qdir.empty()) {
    if (qdir.size() != 3)
      throw CLI::ValidationError("--q-dir needs three components");
    dir = Vec3(qdir[0], qdir[1], qdir[2]);
    if (dir.norm() < 1e-12)
      throw CLI::ValidationError("--q-dir must be nonzero");
    dir.normalize();
  } else {
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const double c = 2.0 * u01(rng) - 1.0;
    const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
    const double ph = 2.0 * std::numbers::pi * u01(rng);
    dir = Vec3(s * std::cos(ph), s * std::sin(ph), c);
  }
  const Vec3 q = qmag * dir;

  auto value_record = [&](const std::string &name, const OracleValue &v,
                          const json &closed, double rel_diff) {
    json j;
    j["record"] = "oracle";
    j["term"] = name;
    j["q"] = {q(0), q(1), q(2)};
    if (name == "one_over_r" || name == "contact_delta") {
      j["value"] = complex_json(v.scalar);
    } else if (name == "vector_r_over_r3") {
      json arr = json::array();
      for (int i = 0; i < 3; ++i)
        arr.push_back(complex_json(v.vec(i)));
      j["value"] = arr;
    } else {
      json rows = json::array();
      for (int i = 0; i < 3; ++i) {
        json row = json::array();
        for (int jj = 0; jj < 3; ++jj)
          row.push_back(complex_json(v.tensor(i, jj)));
        rows.push_back(row);
      }
      j["value"] = rows;
    }
    j["closed_form"] = closed;
    j["rel_diff_vs_closed"] = rel_diff;
    j["levels_used"] = v.diag.levels_used;
    j["mu"] = v.diag.mu;
    j["deltas"] = v.diag.deltas;
    j["rel_error_estimate"] = v.rel_error;
    sink.write(j);
    if (opt.summary)
      std::cout << "  " << name << ": levels=" << v.diag.levels_used
                << " est_err=" << v.rel_error
                << " rel_diff_vs_closed=" << rel_diff << "\n";
  };

  const double pi = std::numbers::pi;
  const double q2 = q.squaredNorm();
  const Vec3 qh = q.normalized();

  if (opt.summary)
    std::cout << "oracle at |q|=" << qmag << "\n";

  const OracleTransforms t = oracle_all(q, {}, opt.policy());

  if (term == "one_over_r" || term == "all") {
    const Complex closed = 4.0 * pi / q2;
    const double rd = std::abs(t.one_over_r.scalar - closed) / std::abs(closed);
    value_record("one_over_r", t.one_over_r, complex_json(closed), rd);
  }
  if (term == "contact_delta" || term == "all") {
    OracleValue v;
    v.scalar = 1.0;
    value_record("contact_delta", v, complex_json(1.0), 0.0);
  }
  if (term == "vector_r_over_r3" || term == "all") {
    Vec3c closed;
    double num = 0;
    for (int i = 0; i < 3; ++i) {
      closed(i) = Complex(0.0, 4.0 * pi * qh(i) / q.norm());
      num += std::norm(t.vector_r_over_r3.vec(i) - closed(i));
    }
    json carr = json::array();
    for (int i = 0; i < 3; ++i)
      carr.push_back(complex_json(closed(i)));
    const double rd = std::sqrt(num) / (4.0 * pi / q.norm());
    value_record("vector_r_over_r3", t.vector_r_over_r3, carr, rd);
  }
  if (term == "tensor_rr_over_r3" || term == "all") {
    Eigen::Matrix3cd closed = Eigen::Matrix3cd::Zero();
    for (int i = 0; i < 3; ++i)
      for (int jj = 0; jj < 3; ++jj)
        closed(i, jj) = (4.0 * pi / q2) * ((i == jj ? 1.0 : 0.0) -
                                           2.0 * qh(i) * qh(jj));
    const double rd =
        (t.tensor_rr_over_r3.tensor - closed).norm() / closed.norm();
    json rows = json::array();
    for (int i = 0; i < 3; ++i) {
      json row = json::array();
      for (int jj = 0; jj < 3; ++jj)
        row.push_back(complex_json(closed(i, jj)));
      rows.push_back(row);
    }
    value_record("tensor_rr_over_r3", t.tensor_rr_over_r3, rows, rd);
  }
  if (term == "tensor_traceless_r5" || term == "all") {
    Eigen::Matrix3cd closed = Eigen::Matrix3cd::Zero();
    for (int i = 0; i < 3; ++i)
      for (int jj = 0; jj < 3; ++jj)
        closed(i, jj) = -4.0 * pi * (qh(i) * qh(jj) -
                                     (i == jj ? 1.0 / 3.0 : 0.0));
    const double rd =
        (t.tensor_traceless_r5.tensor - closed).norm() / closed.norm();
    json rows = json::array();
    for (int i = 0; i < 3; ++i) {
      json row = json::array();
      for (int jj = 0; jj < 3; ++jj)
        row.push_back(complex_json(closed(i, jj)));
      rows.push_back(row);
    }
    value_record("tensor_traceless_r5", t.tensor_traceless_r5, rows, rd);
  }
  return 0;
}

//==============================================================================
// second-born

int cmd_second_born(const Options &opt, double k, double theta, int n_radial,
                    int n_tail, double eta, const std::string &mode) {
  RecordSink sink(opt.out_path);
  json params;
  params["k"] = k;
  params["theta"] = theta;
  params["n_radial"] = n_radial;
  params["n_tail"] = n_tail;
  params["eta"] = eta;
  params["mode"] = mode;
  sink.write(header_record("second-born", opt, params));

  EnergyKernel u;
  if (mode == "coulomb") {
    u = coulomb_energy_kernel();
  } else if (mode == "mock") {
    u = [](double e, const Vec3 &q) {
      return SpinOperator(((0.3 + e) * 4.0 * std::numbers::pi /
                           (q.squaredNorm() + 1.0)) *
                          Mat4c::Identity());
    };
  } else {
    throw CLI::ValidationError("--mode must be coulomb or mock");
  }

  const Kinematics kin = cm_elastic_kinematics(k, theta, 0.0);

  json conv = json::array();
  for (int n : {n_radial / 2, n_radial, 2 * n_radial}) {
    if (n < 2 || n % 2 != 0)
      continue;
    const IntermediateGrid grid = make_intermediate_grid(k, n, n_tail, eta);
    const SpinOperator lad = ladder_element(kin.p1_out, kin.p2_out, kin.p1_in,
                                            kin.p2_in, grid, u, opt.policy());
    const SpinOperator cro = crossed_element(kin.p1_out, kin.p2_out, kin.p1_in,
                                             kin.p2_in, grid, u, opt.policy());
    double comm = 0.0;
    for (int ax = 0; ax < 3; ++ax)
      comm =
          std::max(comm, commutator(lad, sigma_total(ax)).frobenius_norm());
    json j;
    j["record"] = "second_born";
    j["n_radial"] = n;
    j["nodes"] = grid.nodes.size();
    j["ladder_identity_coeff"] =
        complex_json(lad.matrix().trace() / 4.0);
    j["ladder_frobenius"] = lad.frobenius_norm();
    j["ladder_offblock_ratio"] = offblock_ratio(lad);
    j["ladder_total_spin_commutator"] = comm;
    j["crossed_frobenius"] = cro.frobenius_norm();
    conv.push_back(j);
    sink.write(j);
  }

  if (opt.summary) {
    std::cout << "second-born (" << mode << ") at k=" << k
              << " theta=" << theta << "\n";
    for (const auto &j : conv)
      std::cout << "  n_radial=" << j["n_radial"]
                << " ladder_frobenius=" << j["ladder_frobenius"]
                << " crossed_frobenius=" << j["crossed_frobenius"] << "\n";
  }
  return 0;
}

} // namespace

//==============================================================================

int main(int argc, char **argv) {
  CLI::App app{"spinscat: two-electron spin scattering simulator"};
  app.require_subcommand(1);
  app.set_config("--config", "", "INI configuration file");
  app.fallthrough();

  Options opt;
  app.add_option("--seed", opt.seed, "RNG seed for sampled directions");
  app.add_option("--alpha", opt.alpha,
                 "interaction correction strength (0 disables corrections)");
  app.add_option("--out", opt.out_path,
                 "output file for JSONL records (relative paths resolve "
                 "against SPINSCAT_OUT_DIR)");
  app.add_flag("--summary", opt.summary, "print a human-readable summary");
  app.add_flag("--serial", opt.serial, "run single-threaded reference path");

  auto *verify = app.add_subcommand("verify", "run the invariant checks");

  double k = 1.0, theta = std::numbers::pi / 3.0, phi = 0.0;
  auto *amplitude =
      app.add_subcommand("amplitude", "first Born amplitude operator");
  amplitude->add_option("--k", k, "CM momentum (1/a0)");
  amplitude->add_option("--theta", theta, "scattering angle");
  amplitude->add_option("--phi", phi, "azimuth");

  std::string initial = "psi_plus";
  auto *evolve = app.add_subcommand("evolve", "scatter one spin state");
  evolve->add_option("--initial", initial, "initial spin state label");
  evolve->add_option("--k", k, "CM momentum (1/a0)");
  evolve->add_option("--theta", theta, "scattering angle");
  evolve->add_option("--phi", phi, "azimuth");

  std::vector<double> ks = {0.5, 1.0, 2.0};
  int n_theta = 64, n_phi = 16;
  std::string scan_initial = "psi_minus";
  auto *scan = app.add_subcommand("scan", "entanglement scan over a grid");
  scan->add_option("--initial", scan_initial, "initial spin state label");
  scan->add_option("--k-list", ks, "CM momenta (1/a0)");
  scan->add_option("--n-theta", n_theta, "theta grid size");
  scan->add_option("--n-phi", n_phi, "phi grid size");

  std::string term = "all";
  double qmag = 1.0;
  std::vector<double> qdir;
  auto *oracle =
      app.add_subcommand("oracle", "quadrature transforms vs closed forms");
  oracle->add_option("--term", term,
                     "one_over_r | contact_delta | vector_r_over_r3 | "
                     "tensor_rr_over_r3 | tensor_traceless_r5 | all");
  oracle->add_option("--q-mag", qmag, "transfer magnitude (1/a0)");
  oracle->add_option("--q-dir", qdir, "transfer direction (3 components)");

  int n_radial = 16, n_tail = 16;
  double eta = 1e-3, sb_k = 1.0, sb_theta = 1.1;
  std::string mode = "coulomb";
  auto *second =
      app.add_subcommand("second-born", "ladder and crossed elements");
  second->add_option("--k", sb_k, "on-shell CM momentum");
  second->add_option("--theta", sb_theta, "scattering angle");
  second->add_option("--n-radial", n_radial, "radial nodes in the PV window");
  second->add_option("--n-tail", n_tail, "radial nodes in the tail");
  second->add_option("--eta", eta, "denominator regularization");
  second->add_option("--mode", mode, "coulomb | mock");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed())
      return cmd_verify(opt);
    if (amplitude->parsed())
      return cmd_amplitude(opt, k, theta, phi);
    if (evolve->parsed())
      return cmd_evolve(opt, initial, k, theta, phi);
    if (scan->parsed())
      return cmd_scan(opt, scan_initial, ks, n_theta, n_phi);
    if (oracle->parsed())
      return cmd_oracle(opt, term, qmag, qdir);
    if (second->parsed())
      return cmd_second_born(opt, sb_k, sb_theta, n_radial, n_tail, eta, mode);
  } catch (const CLI::ValidationError &e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument &e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
