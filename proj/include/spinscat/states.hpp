#pragma once

#include "spinscat/kinematics.hpp"
#include "spinscat/spin_algebra.hpp"

namespace spinscat {

enum class SpatialSymmetry { Symmetric, Antisymmetric };

// Spin coefficients (C, D, D, G) of the symmetric-sector family. D^2 = CG
// makes the spin factor a product state; D^2 != CG an entangled triplet-
// sector state.
struct SpinCoefficients {
  Complex c{1.0, 0.0};
  Complex d{0.0, 0.0};
  Complex g{0.0, 0.0};
};

// Antisymmetrized two-electron plane-wave state: spatial (anti)symmetric
// combination of e^{i p1.r1} e^{i p2.r2} paired with a spin factor of the
// opposite exchange class. The constructor enforces the pairing.
class TwoElectronState {
public:
  TwoElectronState(SpatialSymmetry spatial, const SpinState &spin,
                   const Vec3 &p1, const Vec3 &p2);

  SpatialSymmetry spatial_symmetry() const { return spatial_; }
  const SpinState &spin() const { return spin_; }
  const Vec3 &p1() const { return p1_; }
  const Vec3 &p2() const { return p2_; }

private:
  SpatialSymmetry spatial_;
  SpinState spin_;
  Vec3 p1_, p2_;
};

// The three admissible state kinds:
//   Unentangled      - symmetric spin (C,D,D,G) with D^2 = CG, antisym. spatial
//   EntangledTriplet - symmetric spin (C,D,D,G) with D^2 != CG, antisym. spatial
//   Singlet          - spin psi-, symmetric spatial
enum class StateKind { Unentangled = 1, EntangledTriplet = 2, Singlet = 3 };

// Builds the state, normalizing the spin factor. Throws
// SymmetryMismatchError when the coefficients do not realize the requested
// kind (e.g. kind Unentangled with D^2 != CG). The cdg argument is ignored
// for the singlet.
TwoElectronState make_state(StateKind kind, const Vec3 &p1, const Vec3 &p2,
                            const SpinCoefficients &cdg = {});

// 2|D^2 - CG| / (|C|^2 + 2|D|^2 + |G|^2): concurrence of the normalized
// (C, D, D, G) spin factor.
double cdg_concurrence(const SpinCoefficients &cdg);

} // namespace spinscat
