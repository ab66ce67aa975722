#include "spinscat/spin_algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace spinscat {

SpinState::SpinState(const Vec4c &amplitudes, bool normalize) : a_(amplitudes) {
  const double n = a_.norm();
  if (normalize) {
    if (n < 1e-300)
      throw std::invalid_argument("SpinState: cannot normalize a zero vector");
    a_ /= n;
    normalized_ = true;
  } else {
    normalized_ = std::abs(n * n - 1.0) <= kNormTol;
  }
}

ExchangeClass SpinState::exchange_class(double tol) const {
  // P12 swaps the middle components and fixes the outer ones.
  const Vec4c swapped(a_(0), a_(2), a_(1), a_(3));
  const double scale = a_.norm();
  if (scale < 1e-300)
    return ExchangeClass::Mixed;
  const double ds = (swapped - a_).norm() / scale;
  const double da = (swapped + a_).norm() / scale;
  if (ds <= tol)
    return ExchangeClass::Symmetric;
  if (da <= tol)
    return ExchangeClass::Antisymmetric;
  return ExchangeClass::Mixed;
}

bool SpinOperator::is_hermitian(double tol) const {
  const double scale = std::max(1.0, m_.norm());
  return (m_ - m_.adjoint()).norm() <= tol * scale;
}

//==============================================================================

namespace {

Mat2c pauli2(int axis) {
  const Complex i(0.0, 1.0);
  Mat2c s = Mat2c::Zero();
  switch (axis) {
  case 0:
    s << 0, 1, 1, 0;
    break;
  case 1:
    s << 0, -i, i, 0;
    break;
  case 2:
    s << 1, 0, 0, -1;
    break;
  default:
    throw std::invalid_argument("pauli: axis must be 0, 1 or 2");
  }
  return s;
}

// particle 1 is the first tensor factor: index = 2*s1 + s2.
Mat4c kron2(const Mat2c &a, const Mat2c &b) {
  Mat4c m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          m(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return m;
}

} // namespace

SpinOperator pauli(int particle, int axis) {
  if (particle != 1 && particle != 2)
    throw std::invalid_argument("pauli: particle must be 1 or 2");
  const Mat2c s = pauli2(axis);
  const Mat2c id = Mat2c::Identity();
  return SpinOperator(particle == 1 ? kron2(s, id) : kron2(id, s));
}

SpinOperator sigma_dot(int particle, const Vec3c &v) {
  Mat4c m = Mat4c::Zero();
  for (int k = 0; k < 3; ++k)
    m += v(k) * pauli(particle, k).matrix();
  return SpinOperator(m);
}

SpinOperator sigma_dot(int particle, const Vec3 &v) {
  return sigma_dot(particle, Vec3c(v(0), v(1), v(2)));
}

SpinOperator sigma_dot_sigma() {
  Mat4c m = Mat4c::Zero();
  for (int k = 0; k < 3; ++k)
    m += (pauli(1, k) * pauli(2, k)).matrix();
  return SpinOperator(m);
}

SpinOperator sigma_total(int axis) {
  return SpinOperator(pauli(1, axis).matrix() + pauli(2, axis).matrix());
}

SpinOperator swap_operator() {
  Mat4c m = Mat4c::Zero();
  m(0, 0) = 1;
  m(1, 2) = 1;
  m(2, 1) = 1;
  m(3, 3) = 1;
  return SpinOperator(m);
}

SpinOperator projected_spin_dot(const Vec3 &n) {
  if (std::abs(n.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("projected_spin_dot: n must be a unit vector");
  return sigma_dot(1, n) * sigma_dot(2, n);
}

SpinOperator commutator(const SpinOperator &a, const SpinOperator &b) {
  return a * b - b * a;
}

SpinState bell_state(Bell which) {
  const double s = 1.0 / std::sqrt(2.0);
  Vec4c a = Vec4c::Zero();
  switch (which) {
  case Bell::PhiPlus:
    a(0) = s;
    a(3) = s;
    break;
  case Bell::PhiMinus:
    a(0) = s;
    a(3) = -s;
    break;
  case Bell::PsiPlus:
    a(1) = s;
    a(2) = s;
    break;
  case Bell::PsiMinus:
    a(1) = s;
    a(2) = -s;
    break;
  }
  return SpinState(a, false);
}

} // namespace spinscat
