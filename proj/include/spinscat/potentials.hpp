#pragma once

#include "spinscat/spin_algebra.hpp"
#include "spinscat/units.hpp"

namespace spinscat {

// Momentum-space interaction kernels, convention
//   K(q, p1, p2) = integral d^3r e^{i q.r} U(r, p1, p2)
// with the momentum operators acting on the incoming plane waves (right
// eigenvalues p1, p2). q is the momentum handed to particle 1.
//
// All three kernels commute with P12. The Coulomb and spin-spin kernels are
// Hermitian matrices at fixed arguments; the spin-orbit kernel carries the
// factor i from the transform of an odd function and is anti-Hermitian at
// fixed arguments. The physical Hermiticity of all three is the reciprocity
// relation K(q; p_in) = K(-q; p_out)^dagger with p1_out = p1 - q,
// p2_out = p2 + q.
struct SpinKernel {
  SpinOperator op;
  Vec3 q;
  bool depends_on_momenta = false;
  // Frobenius norm of K_raw - K_raw^dagger before the retardation piece is
  // symmetrized (Coulomb kernel only; identically zero for the closed form,
  // kept as a diagnostic of the operator-ordering convention).
  double hermitization_defect = 0.0;
};

// Charge-charge part: static Coulomb + contact (Darwin-type) + retardation
// (orbit-orbit) correction. Spin-independent, proportional to the identity:
//   [ 4 pi / q^2 - pi alpha^2 / 4
//     - (4 pi alpha^2 / q^2) ( p1.p2 - (p1.q)(p2.q)/q^2 ) ] * I.
// The transverse projection makes the momentum factor identical for the
// incoming and outgoing eigenvalue choices.
SpinKernel coulomb_kernel(const Vec3 &q, const Vec3 &p1, const Vec3 &p2,
                          const PotentialParams &params = {});

// Spin-orbit part:
//   -(pi alpha^2 i / q^2) [ q x (p1 - p2) ] . (sigma1 + sigma2).
// q x (p1 - p2) is invariant under the in -> out eigenvalue swap.
SpinKernel spin_orbit_kernel(const Vec3 &q, const Vec3 &p1, const Vec3 &p2,
                             const PotentialParams &params = {});

// Spin-spin part (contact + tensor):
//   pi alpha^2 [ (1/3) sigma1.sigma2 + (sigma1.qhat)(sigma2.qhat) ].
SpinKernel spin_spin_kernel(const Vec3 &q, const PotentialParams &params = {});

// Sum of the three kernels.
SpinOperator interaction_kernel(const Vec3 &q, const Vec3 &p1, const Vec3 &p2,
                                const PotentialParams &params = {});

} // namespace spinscat
