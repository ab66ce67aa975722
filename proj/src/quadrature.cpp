#include "spinscat/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace spinscat {

namespace {

Quad1D compute_gl(int n) {
  if (n < 1)
    throw std::invalid_argument("gauss_legendre: n must be >= 1");
  Quad1D q;
  q.x.resize(n);
  q.w.resize(n);
  // Roots of P_n from the Chebyshev-like initial guess, polished by Newton.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double p0 = 0, p1 = 0;
    for (int iter = 0; iter < 100; ++iter) {
      // Legendre recurrence: p1 = P_n(x), p0 = P_{n-1}(x).
      p0 = 1.0;
      p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) {
        p1 = x;
        p0 = 1.0;
      }
      const double dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15)
        break;
    }
    // Recompute derivative at the converged node for the weight.
    p0 = 1.0;
    p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    const double dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    q.x[i] = -x; // ascending order
    q.w[i] = w;
    q.x[n - 1 - i] = x;
    q.w[n - 1 - i] = w;
  }
  if (n % 2 == 1) {
    // Center node of odd rules sits exactly at zero.
    q.x[n / 2] = 0.0;
    double p0 = 1.0, p1 = 0.0;
    for (int k = 2; k <= n; ++k) {
      const double p2 = (-(k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    const double dp = n * (0.0 - p0) / (-1.0);
    q.w[n / 2] = 2.0 / (dp * dp);
  }
  return q;
}

} // namespace

const Quad1D &gauss_legendre(int n) {
  static std::map<int, Quad1D> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, compute_gl(n)).first;
  return it->second;
}

Quad1D gauss_legendre_ab(int n, double a, double b) {
  const Quad1D &base = gauss_legendre(n);
  Quad1D q;
  q.x.resize(n);
  q.w.resize(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    q.x[i] = mid + half * base.x[i];
    q.w[i] = half * base.w[i];
  }
  return q;
}

const std::vector<SpherePoint> &lebedev26() {
  static const std::vector<SpherePoint> pts = [] {
    std::vector<SpherePoint> v;
    const double wa = 1.0 / 21.0;
    const double wb = 4.0 / 105.0;
    const double wc = 27.0 / 840.0;
    const double s2 = 1.0 / std::sqrt(2.0);
    const double s3 = 1.0 / std::sqrt(3.0);
    for (int ax = 0; ax < 3; ++ax)
      for (int sgn : {+1, -1}) {
        Vec3 n = Vec3::Zero();
        n(ax) = sgn;
        v.push_back({n, wa});
      }
    for (int ax = 0; ax < 3; ++ax) // pair of axes orthogonal to ax
      for (int s1 : {+1, -1})
        for (int s2s : {+1, -1}) {
          Vec3 n = Vec3::Zero();
          n((ax + 1) % 3) = s1 * s2;
          n((ax + 2) % 3) = s2s * s2;
          v.push_back({n, wb});
        }
    for (int s1 : {+1, -1})
      for (int s2s : {+1, -1})
        for (int s3s : {+1, -1})
          v.push_back({Vec3(s1 * s3, s2s * s3, s3s * s3), wc});
    return v;
  }();
  return pts;
}

} // namespace spinscat
