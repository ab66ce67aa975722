#pragma once

#include <array>

#include "spinscat/spin_algebra.hpp"

namespace spinscat {

// Schmidt form of a normalized two-spin state:
//   chi = sum_k coeff[k] |basis_a[k]> (x) |basis_b[k]>,
// coeff[0] >= coeff[1] >= 0, both single-particle bases orthonormal. Phases
// are fixed so the largest-magnitude component of each basis_a[k] is real
// and positive (the compensating phase is pushed into basis_b[k]).
struct SchmidtForm {
  std::array<double, 2> coeff{};
  std::array<Eigen::Vector2cd, 2> basis_a{};
  std::array<Eigen::Vector2cd, 2> basis_b{};
};

SchmidtForm schmidt_decompose(const SpinState &chi);

// chi from its Schmidt form (round-trip helper).
SpinState reconstruct(const SchmidtForm &f);

// Wootters concurrence of a pure two-qubit state: 2 |a0 a3 - a1 a2|.
// Requires a normalized input.
double concurrence(const SpinState &chi);

bool is_separable(const SpinState &chi, double tol = kSeparabilityTol);

} // namespace spinscat
