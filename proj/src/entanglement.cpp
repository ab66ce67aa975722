#include "spinscat/entanglement.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

namespace spinscat {

namespace {

void require_normalized(const SpinState &chi, const char *who) {
  if (std::abs(chi.norm() - 1.0) > 1e-9)
    throw std::invalid_argument(std::string(who) +
                                ": state must be normalized");
}

} // namespace

SchmidtForm schmidt_decompose(const SpinState &chi) {
  require_normalized(chi, "schmidt_decompose");

  // Reshape amplitudes into the coefficient matrix C with chi_{s1 s2} =
  // C(s1, s2); then C = U diag(a) V^H gives the Schmidt vectors as columns
  // of U and conj(V).
  Eigen::Matrix2cd c;
  c << chi.amplitude(0), chi.amplitude(1), chi.amplitude(2), chi.amplitude(3);

  Eigen::JacobiSVD<Eigen::Matrix2cd> svd(c, Eigen::ComputeFullU |
                                                Eigen::ComputeFullV);

  SchmidtForm f;
  for (int k = 0; k < 2; ++k) {
    f.coeff[k] = svd.singularValues()(k);
    Eigen::Vector2cd ua = svd.matrixU().col(k);
    Eigen::Vector2cd ub = svd.matrixV().col(k).conjugate();

    // Phase fixing: rotate the dominant component of ua onto the positive
    // real axis; the inverse rotation on ub keeps the product term intact.
    const int dom = (std::abs(ua(0)) >= std::abs(ua(1))) ? 0 : 1;
    const double mag = std::abs(ua(dom));
    if (mag > 1e-300) {
      const Complex phase = ua(dom) / mag;
      ua *= std::conj(phase);
      ub *= phase;
    }
    f.basis_a[k] = ua;
    f.basis_b[k] = ub;
  }
  return f;
}

SpinState reconstruct(const SchmidtForm &f) {
  Vec4c a = Vec4c::Zero();
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        a(2 * i + j) += f.coeff[k] * f.basis_a[k](i) * f.basis_b[k](j);
  return SpinState(a, false);
}

double concurrence(const SpinState &chi) {
  require_normalized(chi, "concurrence");
  const Complex det = chi.amplitude(0) * chi.amplitude(3) -
                      chi.amplitude(1) * chi.amplitude(2);
  return 2.0 * std::abs(det);
}

bool is_separable(const SpinState &chi, double tol) {
  return concurrence(chi) <= tol;
}

} // namespace spinscat
