#include <numbers>
#include <random>

#include "doctest.h"

#include "spinscat/errors.hpp"
#include "spinscat/fourier_oracle.hpp"
#include "spinscat/potentials.hpp"

using namespace spinscat;

namespace {

constexpr double kPi = std::numbers::pi;

Vec3 random_unit(std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double c = 2.0 * u(rng) - 1.0;
  const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
  const double ph = 2.0 * kPi * u(rng);
  return Vec3(s * std::cos(ph), s * std::sin(ph), c);
}

} // namespace

TEST_SUITE("fourier_oracle") {

TEST_CASE("scalar transform: 4 pi / q^2 frozen points") {
  // |q| = 2 -> pi; |q| = 1 -> 4 pi. Quadrature route, tight agreement.
  const OracleValue at2 = oracle_fourier(OracleTerm::OneOverR, Vec3(0, 0, 2));
  CHECK(std::abs(at2.scalar - Complex(kPi, 0)) < 1e-7 * kPi);

  const OracleValue at1 = oracle_fourier(OracleTerm::OneOverR, Vec3(1, 0, 0));
  CHECK(std::abs(at1.scalar - Complex(4 * kPi, 0)) < 1e-7 * 4 * kPi);
}

TEST_CASE("contact term is analytic and exact") {
  const OracleValue v = oracle_fourier(OracleTerm::ContactDelta, Vec3(0, 0, 2));
  CHECK(v.scalar == Complex(1.0, 0.0));
  CHECK(v.rel_error == 0.0);
}

TEST_CASE("vector transform: 4 pi i q / q^2") {
  std::mt19937_64 rng(21);
  for (double qmag : {0.5, 2.0}) {
    const Vec3 q = qmag * random_unit(rng);
    const OracleValue v = oracle_fourier(OracleTerm::VectorROverR3, q);
    Vec3c expect;
    for (int i = 0; i < 3; ++i)
      expect(i) = Complex(0.0, 4.0 * kPi * q(i) / q.squaredNorm());
    CHECK((v.vec - expect).norm() < 1e-4 * expect.norm());
  }
}

TEST_CASE("tensor transforms match their closed forms") {
  std::mt19937_64 rng(22);
  for (double qmag : {0.1, 0.5, 1.0, 2.0, 5.0}) {
    const Vec3 q = qmag * random_unit(rng);
    const Vec3 qh = q.normalized();
    const OracleTransforms t = oracle_all(q);

    Eigen::Matrix3cd rr = Eigen::Matrix3cd::Zero();
    Eigen::Matrix3cd tl = Eigen::Matrix3cd::Zero();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const double dij = (i == j) ? 1.0 : 0.0;
        rr(i, j) = (4.0 * kPi / q.squaredNorm()) * (dij - 2.0 * qh(i) * qh(j));
        tl(i, j) = -4.0 * kPi * (qh(i) * qh(j) - dij / 3.0);
      }
    CHECK((t.tensor_rr_over_r3.tensor - rr).norm() < 1e-4 * rr.norm());
    CHECK((t.tensor_traceless_r5.tensor - tl).norm() < 1e-4 * tl.norm());
    CHECK(std::abs(t.tensor_traceless_r5.tensor.trace()) < 1e-3);

    // scalar along the same sweep
    CHECK(std::abs(t.one_over_r.scalar - 4.0 * kPi / q.squaredNorm()) <
          1e-4 * 4.0 * kPi / q.squaredNorm());
  }
}

TEST_CASE("assembled kernels agree with the closed forms") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.3, 1.5);
  const PotentialParams pp{};
  for (double qmag : {0.5, 1.0, 2.0}) {
    const Vec3 q = qmag * random_unit(rng);
    const Vec3 p1 = u(rng) * random_unit(rng);
    const Vec3 p2 = u(rng) * random_unit(rng);
    const OracleTransforms t = oracle_all(q);

    const SpinOperator oc = assemble_coulomb(t, p1, p2, pp);
    const SpinOperator ols = assemble_spin_orbit(t, p1, p2, pp);
    const SpinOperator oss = assemble_spin_spin(t, pp);

    const SpinOperator kc = coulomb_kernel(q, p1, p2, pp).op;
    const SpinOperator kls = spin_orbit_kernel(q, p1, p2, pp).op;
    const SpinOperator kss = spin_spin_kernel(q, pp).op;

    CHECK((oc - kc).frobenius_norm() < 1e-4 * kc.frobenius_norm());
    CHECK((ols - kls).frobenius_norm() < 1e-4 * kls.frobenius_norm());
    CHECK((oss - kss).frobenius_norm() < 1e-4 * kss.frobenius_norm());
  }
}

TEST_CASE("diagnostics expose the extrapolation path") {
  const OracleValue v = oracle_fourier(OracleTerm::OneOverR, Vec3(0, 0, 1));
  CHECK(v.diag.levels_used >= 2);
  CHECK(v.diag.mu.size() == static_cast<std::size_t>(v.diag.levels_used));
  // q-scaled schedule: mu_0 = 0.4 |q|, halving
  CHECK(v.diag.mu[0] == doctest::Approx(0.4).epsilon(1e-14));
  if (v.diag.mu.size() >= 2)
    CHECK(v.diag.mu[1] == doctest::Approx(0.2).epsilon(1e-14));
  REQUIRE(!v.diag.deltas.empty());
  CHECK(v.rel_error == v.diag.deltas.back());
  CHECK(v.diag.deltas.back() < 1e-6); // met the schedule's rel_tol
}

TEST_CASE("exhausted schedule raises") {
  ScreeningSchedule tight;
  tight.max_levels = 2;
  tight.rel_tol = 1e-14;
  CHECK_THROWS_AS(oracle_fourier(OracleTerm::OneOverR, Vec3(0, 0, 1), tight),
                  ExtrapolationError);
}

TEST_CASE("wrapper kernels run their own sweep") {
  const Vec3 q(0.4, -0.2, 1.1), p1(0.3, 0.8, -0.1), p2(-0.5, 0.2, 0.6);
  const PotentialParams pp{};
  const SpinOperator o = oracle_spin_spin_kernel(q, pp);
  const SpinOperator k = spin_spin_kernel(q, pp).op;
  CHECK((o - k).frobenius_norm() < 1e-4 * k.frobenius_norm());

  const SpinOperator ols = oracle_spin_orbit_kernel(q, p1, p2, pp);
  const SpinOperator kls = spin_orbit_kernel(q, p1, p2, pp).op;
  CHECK((ols - kls).frobenius_norm() < 1e-4 * kls.frobenius_norm());

  const SpinOperator oco = oracle_coulomb_kernel(q, p1, p2, pp);
  const SpinOperator kco = coulomb_kernel(q, p1, p2, pp).op;
  CHECK((oco - kco).frobenius_norm() < 1e-4 * kco.frobenius_norm());
}

} // TEST_SUITE
