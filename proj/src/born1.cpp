#include "spinscat/born1.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "spinscat/errors.hpp"

namespace spinscat {

AmplitudeOperator first_born(const Kinematics &kin,
                             const PotentialParams &params) {
  if (kin.forward_singular)
    throw ForwardSingularityError(
        "first_born: forward-singular kinematics (|q| or |q_ex| < 1e-6)");
  AmplitudeOperator amp;
  amp.kin = kin;
  amp.direct = interaction_kernel(kin.q, kin.p1_in, kin.p2_in, params);
  amp.exchange = interaction_kernel(kin.q_ex, kin.p1_in, kin.p2_in, params);
  amp.total = amp.direct - amp.exchange * swap_operator();
  return amp;
}

Complex transition_amplitude(const TwoElectronState &initial,
                             const SpinState &final_spin,
                             const Kinematics &kin,
                             const PotentialParams &params) {
  const double scale = std::max(1.0, kin.p1_in.norm() + kin.p2_in.norm());
  if ((initial.p1() - kin.p1_in).norm() > 1e-9 * scale ||
      (initial.p2() - kin.p2_in).norm() > 1e-9 * scale)
    throw std::invalid_argument(
        "transition_amplitude: initial state momenta do not match kinematics");
  const AmplitudeOperator amp = first_born(kin, params);
  return final_spin.amplitudes().dot(amp.total.matrix() *
                                     initial.spin().amplitudes());
}

//==============================================================================
// Sector structure. Coupled basis: three symmetric vectors, then psi-.

namespace {

Eigen::Matrix4cd coupled_basis() {
  Eigen::Matrix4cd b = Eigen::Matrix4cd::Zero();
  const double s = 1.0 / std::sqrt(2.0);
  b.col(0) << 1, 0, 0, 0;  // uu
  b.col(1) << 0, s, s, 0;  // psi+
  b.col(2) << 0, 0, 0, 1;  // dd
  b.col(3) << 0, s, -s, 0; // psi-
  return b;
}

} // namespace

double offblock_ratio(const SpinOperator &op) {
  const Eigen::Matrix4cd b = coupled_basis();
  const Eigen::Matrix4cd m = b.adjoint() * op.matrix() * b;
  double off = 0;
  for (int i = 0; i < 3; ++i)
    off += std::norm(m(i, 3)) + std::norm(m(3, i));
  const double full = op.frobenius_norm();
  return full > 0 ? std::sqrt(off) / full : 0.0;
}

double triplet_block_norm(const SpinOperator &op) {
  const Eigen::Matrix4cd b = coupled_basis();
  const Eigen::Matrix4cd m = b.adjoint() * op.matrix() * b;
  return m.block<3, 3>(0, 0).norm();
}

double singlet_block_norm(const SpinOperator &op) {
  const Eigen::Matrix4cd b = coupled_basis();
  const Eigen::Matrix4cd m = b.adjoint() * op.matrix() * b;
  return std::abs(m(3, 3));
}

SelectionRuleReport selection_rule_report(int n_samples, double momentum_scale,
                                          std::uint64_t seed,
                                          const PotentialParams &params,
                                          ExecPolicy policy) {
  if (n_samples < 1 || momentum_scale <= 0)
    throw std::invalid_argument("selection_rule_report: bad sample spec");

  struct Sample {
    double off, trip, sing;
  };
  std::vector<Sample> out(n_samples);

  indexed_for(static_cast<std::size_t>(n_samples), policy, [&](std::size_t i) {
    // Per-sample stream: deterministic and order-independent.
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (i + 1)));
    std::uniform_real_distribution<double> u01(0.0, 1.0);

    auto rand_dir = [&] {
      // Uniform direction via inverse CDF in cos(theta).
      const double c = 2.0 * u01(rng) - 1.0;
      const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
      const double ph = 2.0 * std::numbers::pi * u01(rng);
      return Vec3(s * std::cos(ph), s * std::sin(ph), c);
    };

    const double k = momentum_scale * (0.25 + 0.75 * u01(rng));
    const Vec3 pcm = (0.5 * momentum_scale * u01(rng)) * rand_dir();

    // Elastic in any frame: equal relative momentum in and out.
    Vec3 n_in = rand_dir();
    Vec3 n_out = rand_dir();
    auto ok = [&](const Vec3 &a, const Vec3 &b) {
      return (a - b).norm() * k > 1e-3 && (a + b).norm() * k > 1e-3;
    };
    while (!ok(n_in, n_out))
      n_out = rand_dir();

    const Kinematics kin =
        make_kinematics(0.5 * pcm + k * n_in, 0.5 * pcm - k * n_in,
                        0.5 * pcm + k * n_out, 0.5 * pcm - k * n_out);
    const AmplitudeOperator amp = first_born(kin, params);
    out[i] = {offblock_ratio(amp.total), triplet_block_norm(amp.total),
              singlet_block_norm(amp.total)};
  });

  SelectionRuleReport rep;
  rep.n_samples = n_samples;
  rep.momentum_scale = momentum_scale;
  rep.seed = seed;
  rep.max_offblock_ratio = 0;
  rep.min_triplet_block_norm = out[0].trip;
  rep.min_singlet_block_norm = out[0].sing;
  for (const Sample &s : out) {
    rep.max_offblock_ratio = std::max(rep.max_offblock_ratio, s.off);
    rep.min_triplet_block_norm = std::min(rep.min_triplet_block_norm, s.trip);
    rep.min_singlet_block_norm = std::min(rep.min_singlet_block_norm, s.sing);
  }
  rep.pass = rep.max_offblock_ratio <= 1e-12 &&
             rep.min_triplet_block_norm > 0 && rep.min_singlet_block_norm > 0;
  return rep;
}

} // namespace spinscat
