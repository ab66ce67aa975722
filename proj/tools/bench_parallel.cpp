// Timing harness: serial reference path vs the OpenMP path for the four
// heavy kernels. Also asserts the two paths agree bit-for-bit, since the
// parallel implementation is required to reproduce the serial one exactly.

#include <chrono>
#include <cstring>
#include <iostream>

#include "spinscat/born1.hpp"
#include "spinscat/born2.hpp"
#include "spinscat/evolution.hpp"
#include "spinscat/exec.hpp"
#include "spinscat/fourier_oracle.hpp"

using namespace spinscat;

namespace {

double seconds_of(const std::function<void()> &fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

bool bits_equal(double a, double b) {
  return std::memcmp(&a, &b, sizeof(double)) == 0;
}

void report(const char *name, double ts, double tp, bool identical) {
  std::cout << "  " << name << ": serial " << ts << " s, parallel " << tp
            << " s, speedup " << ts / tp
            << (identical ? "" : "  [MISMATCH]") << "\n";
}

} // namespace

int main() {
  std::cout << "spinscat benchmark, " << max_threads() << " thread(s)\n";
  const PotentialParams pp{};

  // oracle sweep
  {
    const Vec3 q(0.3, -0.7, 0.5);
    OracleTransforms rs, rp;
    const double ts =
        seconds_of([&] { rs = oracle_all(q, {}, ExecPolicy::Serial); });
    const double tp =
        seconds_of([&] { rp = oracle_all(q, {}, ExecPolicy::Parallel); });
    const bool same =
        bits_equal(rs.one_over_r.scalar.real(), rp.one_over_r.scalar.real()) &&
        bits_equal(rs.tensor_traceless_r5.tensor(0, 1).real(),
                   rp.tensor_traceless_r5.tensor(0, 1).real());
    report("fourier oracle", ts, tp, same);
  }

  // entanglement scan
  {
    const SpinState chi = parse_initial_state("cdg:0.8,0.36,0.48");
    const std::vector<double> ks = {0.5, 1.0, 2.0};
    const auto thetas = make_theta_grid(64);
    const auto phis = make_phi_grid(16);
    ScanResult rs, rp;
    const double ts = seconds_of([&] {
      rs = scan_entanglement(chi, "bench", ks, thetas, phis, pp,
                             ExecPolicy::Serial);
    });
    const double tp = seconds_of([&] {
      rp = scan_entanglement(chi, "bench", ks, thetas, phis, pp,
                             ExecPolicy::Parallel);
    });
    bool same = rs.records.size() == rp.records.size();
    for (std::size_t i = 0; same && i < rs.records.size(); ++i) {
      const auto &a = rs.records[i];
      const auto &b = rp.records[i];
      same = a.forbidden == b.forbidden &&
             (a.forbidden || bits_equal(a.final_concurrence,
                                        b.final_concurrence));
    }
    report("entanglement scan", ts, tp, same);
  }

  // selection-rule sampling
  {
    SelectionRuleReport rs, rp;
    const double ts = seconds_of([&] {
      rs = selection_rule_report(200, 1.0, 12345, pp, ExecPolicy::Serial);
    });
    const double tp = seconds_of([&] {
      rp = selection_rule_report(200, 1.0, 12345, pp, ExecPolicy::Parallel);
    });
    report("selection rule", ts, tp,
           bits_equal(rs.max_offblock_ratio, rp.max_offblock_ratio));
  }

  // second-order ladder
  {
    const Kinematics kin = cm_elastic_kinematics(1.0, 1.1, 0.3);
    const IntermediateGrid grid = make_intermediate_grid(1.0, 32, 32, 1e-3);
    SpinOperator ls(Mat4c::Zero()), lp(Mat4c::Zero());
    const double ts = seconds_of([&] {
      ls = ladder_element(kin.p1_out, kin.p2_out, kin.p1_in, kin.p2_in, grid,
                          coulomb_energy_kernel(), ExecPolicy::Serial);
    });
    const double tp = seconds_of([&] {
      lp = ladder_element(kin.p1_out, kin.p2_out, kin.p1_in, kin.p2_in, grid,
                          coulomb_energy_kernel(), ExecPolicy::Parallel);
    });
    report("second-order ladder", ts, tp,
           bits_equal(ls.matrix()(0, 0).real(), lp.matrix()(0, 0).real()));
  }

  return 0;
}
