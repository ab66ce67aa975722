#include "spinscat/potentials.hpp"

#include <cmath>
#include <numbers>

#include "spinscat/errors.hpp"

namespace spinscat {

namespace {

constexpr double kPi = std::numbers::pi;

void require_off_forward(const Vec3 &q, const char *who) {
  if (q.norm() < kForwardQMin)
    throw ForwardSingularityError(std::string(who) +
                                  ": |q| below forward cutoff 1e-6");
}

} // namespace

SpinKernel coulomb_kernel(const Vec3 &q, const Vec3 &p1, const Vec3 &p2,
                          const PotentialParams &params) {
  require_off_forward(q, "coulomb_kernel");
  const double q2 = q.squaredNorm();
  const double a2 = params.alpha * params.alpha;

  const double coulomb = 4.0 * kPi / q2;
  const double contact = -kPi * a2 / 4.0;
  // Transverse projection of p1 (x) p2 from the r.(r.p1)p2/r^2 ordering.
  const double transverse = p1.dot(p2) - p1.dot(q) * p2.dot(q) / q2;
  const double retard = -(4.0 * kPi * a2 / q2) * transverse;

  Mat4c raw = (coulomb + contact + retard) * Mat4c::Identity();
  const double defect = (raw - raw.adjoint()).norm();
  SpinKernel k;
  k.op = SpinOperator(0.5 * (raw + raw.adjoint().eval()));
  k.q = q;
  k.depends_on_momenta = true;
  k.hermitization_defect = defect;
  return k;
}

SpinKernel spin_orbit_kernel(const Vec3 &q, const Vec3 &p1, const Vec3 &p2,
                             const PotentialParams &params) {
  require_off_forward(q, "spin_orbit_kernel");
  const double q2 = q.squaredNorm();
  const double a2 = params.alpha * params.alpha;
  const Vec3 v = q.cross(p1 - p2);

  const Complex i(0.0, 1.0);
  const Complex coef = -i * kPi * a2 / q2;
  Mat4c m = Mat4c::Zero();
  for (int k = 0; k < 3; ++k)
    m += (coef * v(k)) * sigma_total(k).matrix();

  SpinKernel out;
  out.op = SpinOperator(m);
  out.q = q;
  out.depends_on_momenta = true;
  return out;
}

SpinKernel spin_spin_kernel(const Vec3 &q, const PotentialParams &params) {
  require_off_forward(q, "spin_spin_kernel");
  const double a2 = params.alpha * params.alpha;
  const Vec3 qhat = q.normalized();

  const Mat4c m = kPi * a2 *
                  ((1.0 / 3.0) * sigma_dot_sigma().matrix() +
                   projected_spin_dot(qhat).matrix());

  SpinKernel out;
  out.op = SpinOperator(m);
  out.q = q;
  out.depends_on_momenta = false;
  return out;
}

SpinOperator interaction_kernel(const Vec3 &q, const Vec3 &p1, const Vec3 &p2,
                                const PotentialParams &params) {
  return coulomb_kernel(q, p1, p2, params).op +
         spin_orbit_kernel(q, p1, p2, params).op +
         spin_spin_kernel(q, params).op;
}

} // namespace spinscat
