#pragma once

#include <stdexcept>
#include <string>

namespace spinscat {

// |q| below kForwardQMin: the 1/q^2 kernels are singular there by design.
struct ForwardSingularityError : std::domain_error {
  explicit ForwardSingularityError(const std::string &msg)
      : std::domain_error(msg) {}
};

// A spatial/spin symmetry pairing that no antisymmetric two-electron state has.
struct SymmetryMismatchError : std::invalid_argument {
  explicit SymmetryMismatchError(const std::string &msg)
      : std::invalid_argument(msg) {}
};

// Amplitude annihilates the initial spin state; no outgoing state to normalize.
struct ForbiddenTransitionError : std::runtime_error {
  explicit ForbiddenTransitionError(const std::string &msg)
      : std::runtime_error(msg) {}
};

// The screened-transform extrapolation ran out of schedule without converging.
struct ExtrapolationError : std::runtime_error {
  explicit ExtrapolationError(const std::string &msg)
      : std::runtime_error(msg) {}
};

} // namespace spinscat
