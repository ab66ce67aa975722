#pragma once

#include <cstdint>

#include "spinscat/exec.hpp"
#include "spinscat/kinematics.hpp"
#include "spinscat/potentials.hpp"
#include "spinscat/states.hpp"

namespace spinscat {

// First Born amplitude for antisymmetrized two-electron plane waves, as a
// 4x4 operator on the spin space:
//
//   total = K(q) - K(q_ex) P12,
//
// K the summed interaction kernel, q the direct and q_ex the exchange
// transfer. The overall energy-conserving delta and its -2 pi i prefactor
// are factored out and not stored; plane waves are <r|p> = e^{i p.r} with
// no (2pi)^{-3/2}, so amplitudes carry the kernels' normalization. Ratios,
// zeros and sector structure are convention-independent; the convention is
// pinned by the linearity self-test (alpha-on minus alpha-off equals the
// correction-only amplitude).
//
// Every kernel commutes with P12, so total is block diagonal in the
// triplet/singlet split: transitions between the symmetric and
// antisymmetric spin sectors vanish identically.
struct AmplitudeOperator {
  SpinOperator direct;   // K(q)
  SpinOperator exchange; // K(q_ex)
  SpinOperator total;    // K(q) - K(q_ex) P12
  Kinematics kin;
};

// Throws ForwardSingularityError when either transfer is below the forward
// cutoff.
AmplitudeOperator first_born(const Kinematics &kin,
                             const PotentialParams &params = {});

// <final_spin | total | initial.spin()>. The initial state's momenta must
// match kin's incoming momenta (relative tolerance 1e-9).
Complex transition_amplitude(const TwoElectronState &initial,
                             const SpinState &final_spin,
                             const Kinematics &kin,
                             const PotentialParams &params = {});

// Frobenius norm of the triplet<->singlet off-blocks over the norm of the
// full operator.
double offblock_ratio(const SpinOperator &op);

// Norms of the diagonal blocks in the coupled basis (triplet, singlet).
double triplet_block_norm(const SpinOperator &op);
double singlet_block_norm(const SpinOperator &op);

// Batch check of the sector selection rule over seeded random elastic
// kinematics (general frame: random total momentum, random directions).
// Deterministic for a fixed seed; each sample derives its own RNG stream
// from (seed, index), so the Serial and Parallel policies agree bitwise.
struct SelectionRuleReport {
  int n_samples = 0;
  double momentum_scale = 0;
  std::uint64_t seed = 0;
  double max_offblock_ratio = 0;
  double min_triplet_block_norm = 0;
  double min_singlet_block_norm = 0;
  bool pass = false; // max_offblock_ratio <= 1e-12 and blocks nonzero
};

SelectionRuleReport selection_rule_report(int n_samples, double momentum_scale,
                                          std::uint64_t seed,
                                          const PotentialParams &params = {},
                                          ExecPolicy policy =
                                              ExecPolicy::Parallel);

} // namespace spinscat
