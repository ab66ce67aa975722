#include <numbers>
#include <random>

#include "doctest.h"

#include "spinscat/born1.hpp"
#include "spinscat/errors.hpp"

using namespace spinscat;

namespace {

constexpr double kPi = std::numbers::pi;

} // namespace

TEST_SUITE("born1") {

TEST_CASE("static limit is exact: 4pi/q^2 - 4pi/q_ex^2 P12") {
  const Kinematics kin = cm_elastic_kinematics(1.0, 1.2, 0.4);
  const AmplitudeOperator amp = first_born(kin, {0.0});

  const double cd = 4.0 * kPi / kin.q.squaredNorm();
  const double ce = 4.0 * kPi / kin.q_ex.squaredNorm();
  const Mat4c expect =
      cd * Mat4c::Identity() - ce * swap_operator().matrix();

  CHECK((amp.direct.matrix() - cd * Mat4c::Identity()).norm() < 1e-14 * cd);
  CHECK((amp.total.matrix() - expect).norm() < 1e-13 * expect.norm());
}

TEST_CASE("sector structure: no triplet-singlet mixing") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int rep = 0; rep < 20; ++rep) {
    const double k = 0.3 + 2.0 * u(rng);
    const double th = 0.2 + 2.7 * u(rng);
    const double ph = 2.0 * kPi * u(rng);
    const AmplitudeOperator amp =
        first_born(cm_elastic_kinematics(k, th, ph));
    CHECK(offblock_ratio(amp.total) < 1e-14);
    CHECK(triplet_block_norm(amp.total) > 0.0);
    CHECK(singlet_block_norm(amp.total) > 0.0);
  }
}

TEST_CASE("swapping the outgoing legs flips the sign through the swap") {
  // relabeling the two detected electrons: total' = -total P12
  const Kinematics kin = cm_elastic_kinematics(1.3, 0.9, 1.7);
  const Kinematics swapped =
      make_kinematics(kin.p1_in, kin.p2_in, kin.p2_out, kin.p1_out);

  const Mat4c total = first_born(kin).total.matrix();
  const Mat4c total_sw = first_born(swapped).total.matrix();
  const Mat4c expect = -total * swap_operator().matrix();
  CHECK((total_sw - expect).norm() < 1e-12 * total.norm());
}

TEST_CASE("forward singular kinematics raises") {
  CHECK_THROWS_AS(first_born(cm_elastic_kinematics(1.0, 0.0, 0.0)),
                  ForwardSingularityError);
  CHECK_THROWS_AS(first_born(cm_elastic_kinematics(1.0, std::numbers::pi, 0.0)),
                  ForwardSingularityError);
}

TEST_CASE("transition amplitude: sector zeros and momentum matching") {
  const Kinematics kin = cm_elastic_kinematics(1.0, 1.1, 0.2);
  const TwoElectronState singlet =
      make_state(StateKind::Singlet, kin.p1_in, kin.p2_in);

  // singlet -> any symmetric spin state is forbidden
  const Complex to_psip =
      transition_amplitude(singlet, bell_state(Bell::PsiPlus), kin);
  const Complex to_phim =
      transition_amplitude(singlet, bell_state(Bell::PhiMinus), kin);
  CHECK(std::abs(to_psip) < 1e-13);
  CHECK(std::abs(to_phim) < 1e-13);

  // singlet -> singlet is the live channel
  const Complex to_self =
      transition_amplitude(singlet, bell_state(Bell::PsiMinus), kin);
  CHECK(std::abs(to_self) > 1.0);

  // initial momenta must match the kinematics
  const TwoElectronState elsewhere =
      make_state(StateKind::Singlet, 2.0 * kin.p1_in, 2.0 * kin.p2_in);
  CHECK_THROWS_AS(
      transition_amplitude(elsewhere, bell_state(Bell::PsiMinus), kin),
      std::invalid_argument);
}

TEST_CASE("selection-rule report: pass, determinism, population") {
  const SelectionRuleReport a =
      selection_rule_report(100, 1.0, 20260817, {}, ExecPolicy::Serial);
  CHECK(a.pass);
  CHECK(a.n_samples == 100);
  CHECK(a.max_offblock_ratio <= 1e-12);
  CHECK(a.min_triplet_block_norm > 0.0);
  CHECK(a.min_singlet_block_norm > 0.0);

  const SelectionRuleReport b =
      selection_rule_report(100, 1.0, 20260817, {}, ExecPolicy::Serial);
  CHECK(a.max_offblock_ratio == b.max_offblock_ratio);
  CHECK(a.min_triplet_block_norm == b.min_triplet_block_norm);
}

TEST_CASE("alpha linearity: correction amplitude equals on minus off") {
  // the full amplitude at alpha splits exactly into static + corrections
  const Kinematics kin = cm_elastic_kinematics(0.8, 1.4, 0.9);
  const double a = kAlphaFS;
  const Mat4c on = first_born(kin, {a}).total.matrix();
  const Mat4c off = first_born(kin, {0.0}).total.matrix();

  // rebuild the correction from the kernels directly
  const Mat4c corr_d =
      interaction_kernel(kin.q, kin.p1_in, kin.p2_in, {a}).matrix() -
      interaction_kernel(kin.q, kin.p1_in, kin.p2_in, {0.0}).matrix();
  const Mat4c corr_e =
      (interaction_kernel(kin.q_ex, kin.p1_in, kin.p2_in, {a}).matrix() -
       interaction_kernel(kin.q_ex, kin.p1_in, kin.p2_in, {0.0}).matrix()) *
      swap_operator().matrix();
  CHECK((on - off - (corr_d - corr_e)).norm() < 1e-12 * on.norm());
}

} // TEST_SUITE
