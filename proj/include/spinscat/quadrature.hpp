#pragma once

#include <vector>

#include "spinscat/spin_algebra.hpp"

namespace spinscat {

struct Quad1D {
  std::vector<double> x; // nodes
  std::vector<double> w; // weights
};

// n-point Gauss-Legendre rule on [-1, 1]. Nodes by Newton iteration on P_n,
// accurate to machine precision; cached internally per n.
const Quad1D &gauss_legendre(int n);

// Same rule mapped to [a, b].
Quad1D gauss_legendre_ab(int n, double a, double b);

// 26-point Lebedev rule on the unit sphere, exact for spherical harmonics
// through degree 7. Weights sum to 1, so  integral dOmega f = 4 pi sum w f.
struct SpherePoint {
  Vec3 n;
  double w;
};
const std::vector<SpherePoint> &lebedev26();

} // namespace spinscat
