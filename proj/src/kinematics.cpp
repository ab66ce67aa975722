#include "spinscat/kinematics.hpp"

#include <cmath>
#include <stdexcept>

namespace spinscat {

Kinematics make_kinematics(const Vec3 &p1_in, const Vec3 &p2_in,
                           const Vec3 &p1_out, const Vec3 &p2_out) {
  const Vec3 ptot_in = p1_in + p2_in;
  const Vec3 ptot_out = p1_out + p2_out;
  const double scale =
      std::max({1.0, p1_in.norm(), p2_in.norm(), p1_out.norm(), p2_out.norm()});
  if ((ptot_in - ptot_out).norm() > kMomentumTol * scale)
    throw std::invalid_argument("make_kinematics: total momentum not conserved");

  Kinematics kin;
  kin.p1_in = p1_in;
  kin.p2_in = p2_in;
  kin.p1_out = p1_out;
  kin.p2_out = p2_out;
  kin.q = p1_in - p1_out;
  kin.q_ex = p1_in - p2_out;
  kin.e1_in = 0.5 * p1_in.squaredNorm();
  kin.e2_in = 0.5 * p2_in.squaredNorm();
  kin.e1_out = 0.5 * p1_out.squaredNorm();
  kin.e2_out = 0.5 * p2_out.squaredNorm();

  const double ein = kin.e1_in + kin.e2_in;
  const double eout = kin.e1_out + kin.e2_out;
  kin.elastic = std::abs(ein - eout) <= kElasticTol * std::max(1.0, ein);
  kin.forward_singular =
      kin.q.norm() < kForwardQMin || kin.q_ex.norm() < kForwardQMin;
  return kin;
}

Kinematics cm_elastic_kinematics(double k, double theta, double phi) {
  if (!(k > 0))
    throw std::invalid_argument("cm_elastic_kinematics: k must be positive");
  const Vec3 n_out(std::cos(theta), std::sin(theta) * std::cos(phi),
                   std::sin(theta) * std::sin(phi));
  const Vec3 p1 = k * Vec3::UnitX();
  const Vec3 p1o = k * n_out;
  return make_kinematics(p1, -p1, p1o, -p1o);
}

} // namespace spinscat
