#pragma once

#include <functional>
#include <vector>

#include "spinscat/exec.hpp"
#include "spinscat/spin_algebra.hpp"
#include "spinscat/units.hpp"

namespace spinscat {

// Second-order (two-vertex) machinery. Matrix-element convention for a
// two-body vertex <out1 out2 | V | in1 in2>: kernel evaluated at
// q = in1 - out1 (particle 2 receives -q automatically).

// Interaction kernel at fixed momentum transfer as a function of the energy
// argument carried by one vertex.
using EnergyEval = std::function<SpinOperator(double energy)>;

// Full kernel for vertex sums: (energy, q) -> 4x4 spin operator.
using EnergyKernel = std::function<SpinOperator(double energy, const Vec3 &q)>;

// Static Coulomb vertex: (4 pi / q^2) * I, energy ignored.
EnergyKernel coulomb_energy_kernel();

// Energy-symmetrized vertex: (1/2) [ u(e_in1 - e_out1) + u(e_in2 - e_out2) ].
SpinOperator brown_mittleman(const EnergyEval &u, double e_in1, double e_in2,
                             double e_out1, double e_out2);

// Antisymmetrized-energy remainder driving the crossed term:
//   -[ u(e_in1 - e_out1) - u(e_in2 - e_out2) ].
// Vanishes identically for an energy-independent u.
SpinOperator diff_potential(const EnergyEval &u, double e_in1, double e_in2,
                            double e_out1, double e_out2);

// Intermediate-momentum grid: radial Gauss-Legendre on [0, 2k] (even count,
// symmetric about the on-shell k so principal-value pairs cancel) plus a
// mapped tail on [2k, inf), crossed with the 26-point Lebedev sphere rule.
// Weights carry r^2 dr dOmega / (2 pi)^3. eta > 0 regularizes every energy
// denominator D as D/(D^2 + eta^2); with eta = 0 a node is accepted only if
// it is principal-value paired or |D| >= denom_floor.
struct IntermediateGrid {
  struct Node {
    Vec3 k;
    double weight;
    bool pv_paired;
  };
  std::vector<Node> nodes;
  double eta = 1e-3;
  double denom_floor = 1e-8;
};

IntermediateGrid make_intermediate_grid(double k_on_shell, int n_radial = 16,
                                        int n_tail = 16, double eta = 1e-3);

// Ladder element <c d| V_L |a b>: intermediate pair (r, s = a + b - r),
//   (1/2) sum_r w_r [ K0(r - c) U_BM(r,s <- a,b) +
//                     U_BM(c,d <- r,s) K0(a - r) ] / (ea + eb - er - es),
// with K0 the static Coulomb vertex and U_BM the energy-symmetrized kernel
// u. Coulomb-only mode (u = coulomb_energy_kernel()) keeps the element
// proportional to the identity: no sector mixing, commutes with the total
// spin. An empty grid returns the zero operator.
SpinOperator ladder_element(const Vec3 &c, const Vec3 &d, const Vec3 &a,
                            const Vec3 &b, const IntermediateGrid &grid,
                            const EnergyKernel &u = coulomb_energy_kernel(),
                            ExecPolicy policy = ExecPolicy::Parallel);

// Crossed element: intermediate pair (r, s = r + b - c),
//   (1/2) sum_r w_r [ K0(r - c) V_diff(r,d <- a,s) +
//                     V_diff(c,s <- r,b) K0(a - r) ] / (ea + es - ed - er).
// V_diff vanishes for any energy-independent u, so the Coulomb-only crossed
// element is exactly zero.
SpinOperator crossed_element(const Vec3 &c, const Vec3 &d, const Vec3 &a,
                             const Vec3 &b, const IntermediateGrid &grid,
                             const EnergyKernel &u = coulomb_energy_kernel(),
                             ExecPolicy policy = ExecPolicy::Parallel);

} // namespace spinscat
