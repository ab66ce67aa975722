#pragma once

#include <vector>

#include "spinscat/exec.hpp"
#include "spinscat/potentials.hpp"
#include "spinscat/spin_algebra.hpp"
#include "spinscat/units.hpp"

namespace spinscat {

// Numerical Fourier transforms of the position-space interaction terms,
// independent of the closed forms in potentials.hpp. Each term is screened
// by e^{-mu r}, transformed by spherical product quadrature (Gauss-Legendre
// panels in r, Gauss-Legendre in cos(angle to q), uniform 4-point rule in
// the azimuth, which is exact for these integrands), and extrapolated
// mu -> 0 by a Neville table over a geometric schedule mu_k = mu0 / 2^k.
//
// The screened transforms are analytic in mu only inside |mu| < |q|, so the
// schedule is q-scaled: mu0 = mu_over_q * |q|. Extrapolation stops as soon
// as successive diagonal entries agree to rel_tol; an ExtrapolationError is
// thrown when the schedule is exhausted unconverged.

struct ScreeningSchedule {
  double mu_over_q = 0.4;
  int max_levels = 8;
  double rel_tol = 1e-6;
};

enum class OracleTerm {
  OneOverR,          // 1/r            -> scalar
  ContactDelta,      // delta^3(r)     -> scalar (analytic: exactly 1)
  VectorROverR3,     // r_i / r^3      -> vector (imaginary, odd term)
  TensorRROverR3,    // r_i r_j / r^3  -> tensor
  TensorTracelessR5, // (3 r_i r_j - r^2 d_ij) / r^5 -> tensor (traceless)
};

struct OracleDiagnostics {
  std::vector<double> mu;     // screening values actually evaluated
  std::vector<double> deltas; // relative change of the Neville diagonal
  int levels_used = 0;
};

struct OracleValue {
  Complex scalar{};
  Vec3c vec = Vec3c::Zero();
  Eigen::Matrix3cd tensor = Eigen::Matrix3cd::Zero();
  double rel_error = 0.0;
  OracleDiagnostics diag;
};

// All four quadrature-based terms share one sweep per screening level.
struct OracleTransforms {
  OracleValue one_over_r;
  OracleValue vector_r_over_r3;
  OracleValue tensor_rr_over_r3;
  OracleValue tensor_traceless_r5;
};

OracleTransforms oracle_all(const Vec3 &q, const ScreeningSchedule &sched = {},
                            ExecPolicy policy = ExecPolicy::Parallel);

OracleValue oracle_fourier(OracleTerm term, const Vec3 &q,
                           const ScreeningSchedule &sched = {},
                           ExecPolicy policy = ExecPolicy::Parallel);

// Kernel assembly from transformed terms; mirrors the closed-form kernels
// term by term so the two routes can be compared directly.
SpinOperator assemble_coulomb(const OracleTransforms &t, const Vec3 &p1,
                              const Vec3 &p2, const PotentialParams &params);
SpinOperator assemble_spin_orbit(const OracleTransforms &t, const Vec3 &p1,
                                 const Vec3 &p2, const PotentialParams &params);
SpinOperator assemble_spin_spin(const OracleTransforms &t,
                                const PotentialParams &params);

// Convenience wrappers running their own sweep.
SpinOperator oracle_coulomb_kernel(const Vec3 &q, const Vec3 &p1,
                                   const Vec3 &p2,
                                   const PotentialParams &params = {},
                                   const ScreeningSchedule &sched = {},
                                   ExecPolicy policy = ExecPolicy::Parallel);
SpinOperator oracle_spin_orbit_kernel(const Vec3 &q, const Vec3 &p1,
                                      const Vec3 &p2,
                                      const PotentialParams &params = {},
                                      const ScreeningSchedule &sched = {},
                                      ExecPolicy policy = ExecPolicy::Parallel);
SpinOperator oracle_spin_spin_kernel(const Vec3 &q,
                                     const PotentialParams &params = {},
                                     const ScreeningSchedule &sched = {},
                                     ExecPolicy policy = ExecPolicy::Parallel);

} // namespace spinscat
