#pragma once

#include <Eigen/Dense>
#include <complex>

#include "spinscat/units.hpp"

namespace spinscat {

using Complex = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using Vec3c = Eigen::Vector3cd;
using Vec4c = Eigen::Vector4cd;
using Mat2c = Eigen::Matrix2cd;
using Mat4c = Eigen::Matrix4cd;

// Two-spin basis order everywhere: |uu>, |ud>, |du>, |dd>, particle 1 first.
// "Symmetric"/"Antisymmetric" refer to the particle-exchange operator P12.

enum class ExchangeClass { Symmetric, Antisymmetric, Mixed };

class SpinState {
public:
  // normalize=true rescales to unit norm (throws std::invalid_argument on a
  // zero vector); normalize=false keeps the amplitudes as given and records
  // whether they happen to be normalized.
  explicit SpinState(const Vec4c &amplitudes, bool normalize = true);

  const Vec4c &amplitudes() const { return a_; }
  Complex amplitude(int i) const { return a_(i); }
  double norm() const { return a_.norm(); }
  bool normalized() const { return normalized_; }
  SpinState renormalized() const { return SpinState(a_, true); }

  ExchangeClass exchange_class(double tol = kExchangeClassTol) const;

  Complex overlap(const SpinState &other) const { return a_.dot(other.a_); }

private:
  Vec4c a_;
  bool normalized_;
};

class SpinOperator {
public:
  SpinOperator() : m_(Mat4c::Zero()) {}
  explicit SpinOperator(const Mat4c &m) : m_(m) {}

  static SpinOperator identity() { return SpinOperator(Mat4c::Identity()); }

  const Mat4c &matrix() const { return m_; }
  SpinOperator adjoint() const { return SpinOperator(m_.adjoint()); }
  bool is_hermitian(double tol = kHermitianTol) const;
  double frobenius_norm() const { return m_.norm(); }

  SpinState apply(const SpinState &chi) const {
    return SpinState(m_ * chi.amplitudes(), false);
  }

  SpinOperator &operator+=(const SpinOperator &o) {
    m_ += o.m_;
    return *this;
  }
  friend SpinOperator operator+(SpinOperator a, const SpinOperator &b) {
    return a += b;
  }
  friend SpinOperator operator-(const SpinOperator &a, const SpinOperator &b) {
    return SpinOperator(a.m_ - b.m_);
  }
  friend SpinOperator operator*(Complex c, const SpinOperator &a) {
    return SpinOperator(c * a.m_);
  }
  friend SpinOperator operator*(double c, const SpinOperator &a) {
    return SpinOperator(c * a.m_);
  }
  friend SpinOperator operator*(const SpinOperator &a, const SpinOperator &b) {
    return SpinOperator(a.m_ * b.m_);
  }

private:
  Mat4c m_;
};

// sigma_axis acting on one particle (particle = 1 or 2; axis = 0,1,2 for
// x,y,z). sigma_y convention: [[0,-i],[i,0]].
SpinOperator pauli(int particle, int axis);

// sigma_p . v for a real or complex coefficient vector.
SpinOperator sigma_dot(int particle, const Vec3 &v);
SpinOperator sigma_dot(int particle, const Vec3c &v);

SpinOperator sigma_dot_sigma();              // sigma1 . sigma2
SpinOperator sigma_total(int axis);          // sigma1_k + sigma2_k
SpinOperator swap_operator();                // P12

// (sigma1.n)(sigma2.n) for a unit vector n (|n| must be 1 within 1e-12).
SpinOperator projected_spin_dot(const Vec3 &n);

SpinOperator commutator(const SpinOperator &a, const SpinOperator &b);

enum class Bell { PhiPlus, PhiMinus, PsiPlus, PsiMinus };
SpinState bell_state(Bell which);

} // namespace spinscat
