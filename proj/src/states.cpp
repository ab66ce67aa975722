#include "spinscat/states.hpp"

#include <cmath>

#include "spinscat/entanglement.hpp"
#include "spinscat/errors.hpp"

namespace spinscat {

TwoElectronState::TwoElectronState(SpatialSymmetry spatial,
                                   const SpinState &spin, const Vec3 &p1,
                                   const Vec3 &p2)
    : spatial_(spatial), spin_(spin), p1_(p1), p2_(p2) {
  const ExchangeClass cls = spin.exchange_class();
  const bool ok =
      (spatial == SpatialSymmetry::Antisymmetric &&
       cls == ExchangeClass::Symmetric) ||
      (spatial == SpatialSymmetry::Symmetric &&
       cls == ExchangeClass::Antisymmetric);
  if (!ok)
    throw SymmetryMismatchError(
        "TwoElectronState: spatial and spin exchange classes must be opposite");
}

TwoElectronState make_state(StateKind kind, const Vec3 &p1, const Vec3 &p2,
                            const SpinCoefficients &cdg) {
  if (kind == StateKind::Singlet)
    return TwoElectronState(SpatialSymmetry::Symmetric,
                            bell_state(Bell::PsiMinus), p1, p2);

  const Vec4c a(cdg.c, cdg.d, cdg.d, cdg.g);
  if (a.norm() < 1e-300)
    throw SymmetryMismatchError("make_state: zero spin coefficients");
  const SpinState spin(a, true);

  const bool separable = is_separable(spin);
  if (kind == StateKind::Unentangled && !separable)
    throw SymmetryMismatchError(
        "make_state: Unentangled requires D^2 = CG within tolerance");
  if (kind == StateKind::EntangledTriplet && separable)
    throw SymmetryMismatchError(
        "make_state: EntangledTriplet requires D^2 != CG");

  return TwoElectronState(SpatialSymmetry::Antisymmetric, spin, p1, p2);
}

double cdg_concurrence(const SpinCoefficients &cdg) {
  const Vec4c a(cdg.c, cdg.d, cdg.d, cdg.g);
  const double n2 = a.squaredNorm();
  if (n2 < 1e-300)
    throw std::invalid_argument("cdg_concurrence: zero coefficients");
  return 2.0 * std::abs(cdg.d * cdg.d - cdg.c * cdg.g) / n2;
}

} // namespace spinscat
