#pragma once

#include <string>
#include <vector>

#include "spinscat/born1.hpp"
#include "spinscat/entanglement.hpp"

namespace spinscat {

// Outgoing spin state at fixed final momenta: total(kin) chi_in, projectively
// normalized. Preconditions: chi_in normalized and of definite exchange
// class (the two-electron pairing assigns no spatial factor to a mixed spin
// state); kinematics off the forward cutoff. Throws ForbiddenTransitionError
// when ||total chi_in|| / ||total||_F < kForbiddenTol.
SpinState scatter_spin(const SpinState &chi_in, const Kinematics &kin,
                       const PotentialParams &params = {});

struct EvolutionRecord {
  double k = 0, theta = 0, phi = 0;
  std::string initial_label;
  double initial_concurrence = 0;
  Vec4c final_amplitudes = Vec4c::Zero(); // normalized; zero when forbidden
  double final_concurrence = 0;           // NaN when forbidden
  bool forbidden = false;
  double outgoing_norm_ratio = 0; // ||total chi|| / ||total||_F
};

struct ScanSummary {
  std::size_t n_records = 0;
  std::size_t n_forbidden = 0;
  double min_concurrence = 0; // over non-forbidden records
  double max_concurrence = 0;
  EvolutionRecord arg_min;
};

// Records sorted by final concurrence ascending; forbidden records last,
// ties broken by grid order (k, theta, phi), so the output is deterministic.
struct ScanResult {
  std::vector<EvolutionRecord> records;
  ScanSummary summary;
};

// Center-of-mass scan of one initial spin state over the (k, theta, phi)
// grid. Grid points are processed by index (parallelizable), reduced in
// fixed order.
ScanResult scan_entanglement(const SpinState &initial,
                             const std::string &label,
                             const std::vector<double> &k_grid,
                             const std::vector<double> &theta_grid,
                             const std::vector<double> &phi_grid,
                             const PotentialParams &params = {},
                             ExecPolicy policy = ExecPolicy::Parallel);

// Interior theta grid j pi/(n+2), j = 1..n: strictly inside (0, pi) and,
// for even n, containing pi/2 exactly (the equal-transfer point |q|=|q_ex|).
std::vector<double> make_theta_grid(int n);

// Uniform phi grid 2 pi j / n, j = 0..n-1.
std::vector<double> make_phi_grid(int n);

// Named initial states for the CLI and tests: psi_plus, psi_minus,
// phi_plus, phi_minus, up_up, up_down, down_up, down_down, or
// "cdg:C,D,G" with real coefficients. Throws std::invalid_argument on an
// unknown label.
SpinState parse_initial_state(const std::string &label);

} // namespace spinscat
