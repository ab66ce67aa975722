#include "spinscat/born2.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spinscat/errors.hpp"
#include "spinscat/quadrature.hpp"

namespace spinscat {

namespace {

constexpr double kPi = std::numbers::pi;

double energy_of(const Vec3 &p) { return 0.5 * p.squaredNorm(); }

// Regularized 1/D. With eta = 0 the caller vouches for PV pairing or a
// denominator above the floor.
double reg_inverse(double d, double eta, double floor_, bool pv_paired) {
  if (eta > 0.0)
    return d / (d * d + eta * eta);
  if (!pv_paired && std::abs(d) < floor_)
    throw std::invalid_argument(
        "born2: unpaired on-shell denominator with eta = 0");
  return 1.0 / d;
}

} // namespace

EnergyKernel coulomb_energy_kernel() {
  return [](double, const Vec3 &q) {
    const double q2 = q.squaredNorm();
    if (std::sqrt(q2) < kForwardQMin)
      throw ForwardSingularityError(
          "coulomb_energy_kernel: |q| below forward cutoff");
    return SpinOperator((4.0 * kPi / q2) * Mat4c::Identity());
  };
}

SpinOperator brown_mittleman(const EnergyEval &u, double e_in1, double e_in2,
                             double e_out1, double e_out2) {
  return 0.5 * (u(e_in1 - e_out1) + u(e_in2 - e_out2));
}

SpinOperator diff_potential(const EnergyEval &u, double e_in1, double e_in2,
                            double e_out1, double e_out2) {
  return -1.0 * (u(e_in1 - e_out1) - u(e_in2 - e_out2));
}

IntermediateGrid make_intermediate_grid(double k_on_shell, int n_radial,
                                        int n_tail, double eta) {
  if (!(k_on_shell > 0) || n_radial < 2 || n_tail < 0)
    throw std::invalid_argument("make_intermediate_grid: bad parameters");
  if (n_radial % 2 != 0)
    throw std::invalid_argument(
        "make_intermediate_grid: n_radial must be even (PV pairing)");

  IntermediateGrid grid;
  grid.eta = eta;

  const auto &sphere = lebedev26();
  const double measure = 4.0 * kPi / std::pow(2.0 * kPi, 3);

  // PV window [0, 2k]: even Gauss-Legendre, nodes symmetric about k.
  const Quad1D win = gauss_legendre_ab(n_radial, 0.0, 2.0 * k_on_shell);
  for (int i = 0; i < n_radial; ++i) {
    const double r = win.x[i];
    const double w = win.w[i] * r * r * measure;
    for (const auto &pt : sphere)
      grid.nodes.push_back({r * pt.n, w * pt.w, true});
  }

  // Tail [2k, inf) through r = 2k + s u/(1-u), s = 2k.
  const double s = 2.0 * k_on_shell;
  const Quad1D gl = gauss_legendre(std::max(n_tail, 1));
  if (n_tail > 0) {
    for (int i = 0; i < n_tail; ++i) {
      const double uu = 0.5 * (gl.x[i] + 1.0);
      const double om = 1.0 - uu;
      const double r = 2.0 * k_on_shell + s * uu / om;
      const double jac = 0.5 * s / (om * om);
      const double w = gl.w[i] * jac * r * r * measure;
      for (const auto &pt : sphere)
        grid.nodes.push_back({r * pt.n, w * pt.w, false});
    }
  }
  return grid;
}

namespace {

SpinOperator second_order_sum(
    const Vec3 &c, const Vec3 &d, const Vec3 &a, const Vec3 &b,
    const IntermediateGrid &grid, const EnergyKernel &u, ExecPolicy policy,
    bool crossed) {
  if ((c + d - a - b).norm() >
      kMomentumTol * std::max({1.0, a.norm(), b.norm(), c.norm(), d.norm()}))
    throw std::invalid_argument("born2: external momenta not conserved");
  if (grid.nodes.empty())
    return SpinOperator();

  const EnergyKernel k0 = coulomb_energy_kernel();
  const double ea = energy_of(a), eb = energy_of(b), ec = energy_of(c),
               ed = energy_of(d);

  const std::size_t n = grid.nodes.size();
  std::vector<Mat4c> partial(n, Mat4c::Zero());

  // exceptions may not escape the parallel region: latch per node, rethrow
  // the lowest-index one after the loop.
  std::vector<std::exception_ptr> errs(n);
  indexed_for(n, policy, [&](std::size_t i) {
    try {
      const auto &node = grid.nodes[i];
      const Vec3 r = node.k;
      const double er = energy_of(r);

      Mat4c term;
      double denom;
      if (!crossed) {
        const Vec3 sP = a + b - r;
        const double es = energy_of(sP);
        denom = ea + eb - er - es;
        // left leg <cd|K0|rs>, right leg <rs|U_BM|ab> and the mirror.
        const SpinOperator k_left = k0(0.0, r - c);
        const SpinOperator k_right = k0(0.0, a - r);
        const Vec3 q_ab = a - r; // transfer on the U vertex, rs <- ab
        const SpinOperator u_right =
            0.5 * (u(ea - er, q_ab) + u(eb - es, q_ab));
        const Vec3 q_rs = r - c; // transfer on the U vertex, cd <- rs
        const SpinOperator u_left =
            0.5 * (u(er - ec, q_rs) + u(es - ed, q_rs));
        term = (k_left * u_right + u_left * k_right).matrix();
      } else {
        const Vec3 sP = r + b - c;
        const double es = energy_of(sP);
        denom = ea + es - ed - er;
        const SpinOperator k_left = k0(0.0, r - c);  // <cs|K0|rb>
        const SpinOperator k_right = k0(0.0, a - r); // <rd|K0|as>
        const Vec3 q_ad = a - r; // transfer on <rd|V_diff|as>
        const SpinOperator v_right =
            -1.0 * (u(ea - er, q_ad) - u(es - ed, q_ad));
        const Vec3 q_cb = r - c; // transfer on <cs|V_diff|rb>
        const SpinOperator v_left =
            -1.0 * (u(er - ec, q_cb) - u(eb - es, q_cb));
        term = (k_left * v_right + v_left * k_right).matrix();
      }

      const double g =
          reg_inverse(denom, grid.eta, grid.denom_floor, node.pv_paired);
      partial[i] = (0.5 * node.weight * g) * term;
    } catch (...) {
      errs[i] = std::current_exception();
    }
  });
  for (const auto &e : errs)
    if (e)
      std::rethrow_exception(e);

  return SpinOperator(pairwise_sum(partial, Mat4c(Mat4c::Zero())));
}

} // namespace

SpinOperator ladder_element(const Vec3 &c, const Vec3 &d, const Vec3 &a,
                            const Vec3 &b, const IntermediateGrid &grid,
                            const EnergyKernel &u, ExecPolicy policy) {
  return second_order_sum(c, d, a, b, grid, u, policy, false);
}

SpinOperator crossed_element(const Vec3 &c, const Vec3 &d, const Vec3 &a,
                             const Vec3 &b, const IntermediateGrid &grid,
                             const EnergyKernel &u, ExecPolicy policy) {
  return second_order_sum(c, d, a, b, grid, u, policy, true);
}

} // namespace spinscat
