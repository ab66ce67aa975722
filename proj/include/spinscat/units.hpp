#pragma once

// Hartree atomic units throughout: hbar = m_e = e = 1, c = 1/alpha.
// Momenta in 1/a0, energies in Hartree. The relative-order-(v/c)^2 terms
// of the interaction enter with an explicit alpha^2 = 1/c^2.

namespace spinscat {

inline constexpr double kAlphaFS = 7.2973525693e-3; // CODATA 2018

// A single knob for the interaction strength of the corrections. alpha = 0
// switches every (v/c)^2 term off; alpha = kAlphaFS is the physical point.
struct PotentialParams {
  double alpha = kAlphaFS;
};

// Frozen tolerances. These are contract values used by both the library
// checks and the test suite; do not tune them per call site.
inline constexpr double kNormTol = 1e-12;              // |sum|a|^2 - 1|
inline constexpr double kHermitianTol = 1e-14;         // operator Hermiticity flag
inline constexpr double kExchangeClassTol = 1e-10;     // P12 classification, relative
inline constexpr double kSeparabilityTol = 1e-10;      // concurrence threshold
inline constexpr double kForwardQMin = 1e-6;           // smallest allowed |q|
inline constexpr double kMomentumTol = 1e-12;          // conservation, relative
inline constexpr double kElasticTol = 1e-10;           // energy balance, relative
inline constexpr double kForbiddenTol = 1e-12;         // ||M chi|| / ||M||_F floor

} // namespace spinscat
