#include <numbers>

#include "doctest.h"

#include "spinscat/born1.hpp"
#include "spinscat/born2.hpp"
#include "spinscat/errors.hpp"

using namespace spinscat;

namespace {

constexpr double kPi = std::numbers::pi;

EnergyKernel mock_kernel() {
  return [](double e, const Vec3 &q) {
    return SpinOperator(((0.3 + e) * 4.0 * kPi / (q.squaredNorm() + 1.0)) *
                        Mat4c::Identity());
  };
}

} // namespace

TEST_SUITE("born2") {

TEST_CASE("energy-symmetrized and difference vertices: exact arithmetic") {
  const EnergyEval u = [](double e) {
    return SpinOperator((e + 2.0) * Mat4c::Identity());
  };
  // e_in1=0.5, e_in2=0.3, e_out1=0.1, e_out2=0.4
  const SpinOperator bm = brown_mittleman(u, 0.5, 0.3, 0.1, 0.4);
  // (1/2)[(0.5-0.1+2) + (0.3-0.4+2)] = (1/2)(2.4 + 1.9) = 2.15
  CHECK((bm.matrix() - 2.15 * Mat4c::Identity()).norm() < 1e-15);

  const SpinOperator dv = diff_potential(u, 0.5, 0.3, 0.1, 0.4);
  // -[(0.4) - (-0.1)] = -0.5
  CHECK((dv.matrix() + 0.5 * Mat4c::Identity()).norm() < 1e-15);
}

TEST_CASE("difference vertex of a static interaction is the exact zero") {
  const EnergyEval stat = [](double) {
    return SpinOperator(3.7 * Mat4c::Identity());
  };
  for (double e1 : {0.1, 0.9})
    for (double e2 : {0.2, 0.5}) {
      const SpinOperator dv = diff_potential(stat, e1, e2, 0.3, 0.6);
      CHECK(dv.frobenius_norm() == 0.0);
    }
}

TEST_CASE("intermediate grid structure") {
  const double k = 1.3;
  const IntermediateGrid grid = make_intermediate_grid(k, 8, 4, 1e-3);
  CHECK(grid.nodes.size() == (8 + 4) * 26);
  CHECK(grid.eta == 1e-3);

  // first block: PV window, paired magnitudes r_i + r_{n-1-i} = 2k
  for (int i = 0; i < 8; ++i) {
    const double lo = grid.nodes[i * 26].k.norm();
    const double hi = grid.nodes[(7 - i) * 26].k.norm();
    CHECK(grid.nodes[i * 26].pv_paired);
    CHECK(std::abs(lo + hi - 2.0 * k) < 1e-12);
    CHECK(lo < 2.0 * k);
  }
  // tail: beyond 2k, unpaired
  for (std::size_t i = 8 * 26; i < grid.nodes.size(); ++i) {
    CHECK_FALSE(grid.nodes[i].pv_paired);
    CHECK(grid.nodes[i].k.norm() > 2.0 * k);
  }

  CHECK_THROWS_AS(make_intermediate_grid(1.0, 7, 4, 1e-3),
                  std::invalid_argument); // odd radial count
  CHECK_THROWS_AS(make_intermediate_grid(-1.0, 8, 4, 1e-3),
                  std::invalid_argument);
}

TEST_CASE("empty grid gives the zero operator") {
  const Kinematics kin = cm_elastic_kinematics(1.0, 1.1, 0.3);
  IntermediateGrid empty;
  const SpinOperator lad = ladder_element(kin.p1_out, kin.p2_out, kin.p1_in,
                                          kin.p2_in, empty);
  CHECK(lad.frobenius_norm() == 0.0);
}

TEST_CASE("eta = 0 rejects an unpaired on-shell node") {
  const Kinematics kin = cm_elastic_kinematics(1.0, 1.1, 0.3);
  IntermediateGrid grid;
  grid.eta = 0.0;
  // |r| = k but away from the external legs: denominator exactly 0
  grid.nodes.push_back({Vec3(0.0, 1.0, 0.0), 1.0, false});
  CHECK_THROWS_AS(ladder_element(kin.p1_out, kin.p2_out, kin.p1_in, kin.p2_in,
                                 grid),
                  std::invalid_argument);
  // the same node marked paired is accepted only by the pairing contract;
  // here it would divide by zero, so keep eta > 0 instead
  grid.eta = 1e-3;
  CHECK_NOTHROW(ladder_element(kin.p1_out, kin.p2_out, kin.p1_in, kin.p2_in,
                               grid));
}

TEST_CASE("external momentum conservation is checked") {
  const IntermediateGrid grid = make_intermediate_grid(1.0, 4, 2, 1e-3);
  const Vec3 a(1, 0, 0), b(-1, 0, 0);
  const Vec3 c(0, 1, 0), d(0, -0.5, 0); // c + d != a + b
  CHECK_THROWS_AS(ladder_element(c, d, a, b, grid), std::invalid_argument);
  CHECK_THROWS_AS(crossed_element(c, d, a, b, grid), std::invalid_argument);
}

TEST_CASE("coulomb-only ladder: identity structure at every refinement") {
  const Kinematics kin = cm_elastic_kinematics(1.0, 1.1, 0.3);
  for (int n : {8, 16, 32}) {
    const IntermediateGrid grid = make_intermediate_grid(1.0, n, 8, 1e-3);
    const SpinOperator lad = ladder_element(kin.p1_out, kin.p2_out, kin.p1_in,
                                            kin.p2_in, grid);

    // proportional to the identity: no sector mixing, no spin dependence
    CHECK(offblock_ratio(lad) <= 1e-14);
    const Complex coeff = lad.matrix().trace() / 4.0;
    CHECK((lad.matrix() - coeff * Mat4c::Identity()).norm() <=
          1e-14 * std::abs(coeff));

    for (int ax = 0; ax < 3; ++ax)
      CHECK(commutator(lad, sigma_total(ax)).frobenius_norm() <= 1e-14);
  }
}

TEST_CASE("coulomb-only crossed element is exactly zero on every grid") {
  const Kinematics kin = cm_elastic_kinematics(1.0, 1.1, 0.3);
  for (int n : {4, 8, 16}) {
    for (int tail : {0, 8}) {
      const IntermediateGrid grid = make_intermediate_grid(1.0, n, tail, 1e-3);
      const SpinOperator cro = crossed_element(kin.p1_out, kin.p2_out,
                                               kin.p1_in, kin.p2_in, grid);
      CHECK(cro.frobenius_norm() <= 1e-15);
    }
  }
}

TEST_CASE("energy-dependent kernel drives a nonzero crossed element") {
  const Kinematics kin = cm_elastic_kinematics(1.0, 1.1, 0.3);
  const IntermediateGrid grid = make_intermediate_grid(1.0, 8, 8, 1e-3);
  const SpinOperator cro = crossed_element(kin.p1_out, kin.p2_out, kin.p1_in,
                                           kin.p2_in, grid, mock_kernel());
  CHECK(cro.frobenius_norm() > 1e-3);

  // the ladder with the same kernel also stays in the identity sector
  const SpinOperator lad = ladder_element(kin.p1_out, kin.p2_out, kin.p1_in,
                                          kin.p2_in, grid, mock_kernel());
  CHECK(offblock_ratio(lad) <= 1e-14);
}

} // TEST_SUITE
