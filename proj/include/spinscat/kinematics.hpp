#pragma once

#include "spinscat/spin_algebra.hpp"

namespace spinscat {

// One two-electron scattering configuration. All momenta in 1/a0, kinetic
// energies |p|^2/2 in Hartree. q is the direct transfer (particle 1 in ->
// particle 1 out); q_ex the exchange transfer (particle 1 in -> particle 2
// out).
struct Kinematics {
  Vec3 p1_in, p2_in, p1_out, p2_out;
  Vec3 q, q_ex;
  double e1_in, e2_in, e1_out, e2_out;
  bool elastic;          // total kinetic energy conserved within kElasticTol
  bool forward_singular; // |q| or |q_ex| below kForwardQMin
};

// Throws std::invalid_argument unless total momentum is conserved within
// kMomentumTol (relative to the momentum scale).
Kinematics make_kinematics(const Vec3 &p1_in, const Vec3 &p2_in,
                           const Vec3 &p1_out, const Vec3 &p2_out);

// Center-of-mass elastic configuration: beam along +x with momentum k,
// outgoing direction (cos theta, sin theta cos phi, sin theta sin phi).
Kinematics cm_elastic_kinematics(double k, double theta, double phi);

} // namespace spinscat
