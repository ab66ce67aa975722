#include "spinscat/fourier_oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "spinscat/errors.hpp"
#include "spinscat/quadrature.hpp"

namespace spinscat {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Flattened component layout of one screened sweep:
// [0]      1/r scalar
// [1..3]   r_i/r^3 vector
// [4..12]  r_i r_j / r^3 tensor, row major
// [13..21] (3 r_i r_j - r^2 d_ij)/r^5 tensor, row major
constexpr int kComps = 22;
using Comps = Eigen::Matrix<Complex, kComps, 1>;

// Gauss-Legendre in c = cos(angle to qhat) must resolve e^{i kappa c}; below
// ~e*kappa/4 nodes the rule is useless, so grow with the panel's largest
// kappa (margin included) and round up to a cached size.
const std::array<int, 16> kBuckets = {24,   32,   48,   64,  96,   128,
                                      192,  256,  384,  512, 768,  1024,
                                      1536, 2048, 3072, 4096};

int bucket_for(double kappa_max) {
  const double need = 24.0 + 0.75 * kappa_max;
  for (int b : kBuckets)
    if (b >= need)
      return b;
  throw ExtrapolationError(
      "oracle: angular rule exhausted (kappa_max too large)");
}

// The azimuth integral uses the uniform 4-point rule, exact for the
// trigonometric degree (<= 2) of these integrands. The phi sums of the
// direction structures depend only on c, so they are tabulated per rule.
struct AngularTable {
  std::vector<double> c, w;
  std::vector<Eigen::Vector3d> sv; // sum_phi w_phi rhat
  std::vector<Eigen::Matrix3d> st; // sum_phi w_phi rhat rhat^T
};

AngularTable build_angular_table(int n, const Vec3 &e1, const Vec3 &e2,
                                 const Vec3 &qhat) {
  const Quad1D &gl = gauss_legendre(n);
  AngularTable t;
  t.c = gl.x;
  t.w = gl.w;
  t.sv.resize(n);
  t.st.resize(n);
  const double wphi = kTwoPi / 4.0;
  const std::array<std::array<double, 2>, 4> phis = {
      {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}}};
  for (int ic = 0; ic < n; ++ic) {
    const double c = gl.x[ic];
    const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
    Eigen::Vector3d sv = Eigen::Vector3d::Zero();
    Eigen::Matrix3d st = Eigen::Matrix3d::Zero();
    for (const auto &p : phis) {
      const Vec3 rhat = s * p[0] * e1 + s * p[1] * e2 + c * qhat;
      sv += wphi * rhat;
      st += wphi * rhat * rhat.transpose();
    }
    t.sv[ic] = sv;
    t.st[ic] = st;
  }
  return t;
}

struct Panel {
  double ra, rb;
  int table_index;
};

// One screened sweep: all four quadrature terms at screening mu.
Comps screened_transforms(const Vec3 &q, double mu, ExecPolicy policy) {
  const double qn = q.norm();
  const Vec3 qhat = q / qn;

  // Orthonormal frame transverse to q, seeded from the smallest component.
  const int drop =
      (std::abs(qhat(0)) <= std::abs(qhat(1)))
          ? ((std::abs(qhat(0)) <= std::abs(qhat(2))) ? 0 : 2)
          : ((std::abs(qhat(1)) <= std::abs(qhat(2))) ? 1 : 2);
  Vec3 seed = Vec3::Zero();
  seed(drop) = 1.0;
  const Vec3 e1 = (seed - seed.dot(qhat) * qhat).normalized();
  const Vec3 e2 = qhat.cross(e1);

  // Radial panels: short enough for ~2 oscillation periods and a modest
  // decay factor per 16-point panel.
  const double r_max = 20.0 / mu;
  const double h = std::min({2.0 * kTwoPi / qn, 0.5 / mu, r_max / 8.0});
  const int n_panels = static_cast<int>(std::ceil(r_max / h));

  std::vector<Panel> panels(n_panels);
  std::vector<int> sizes;
  for (int p = 0; p < n_panels; ++p) {
    panels[p].ra = h * p;
    panels[p].rb = std::min(r_max, h * (p + 1));
    const int b = bucket_for(qn * panels[p].rb);
    auto it = std::find(sizes.begin(), sizes.end(), b);
    if (it == sizes.end()) {
      panels[p].table_index = static_cast<int>(sizes.size());
      sizes.push_back(b);
    } else {
      panels[p].table_index = static_cast<int>(it - sizes.begin());
    }
  }
  std::vector<AngularTable> tables;
  tables.reserve(sizes.size());
  for (int b : sizes)
    tables.push_back(build_angular_table(b, e1, e2, qhat));

  const Quad1D &gl16 = gauss_legendre(16);

  std::vector<Comps> partial(n_panels, Comps::Zero());
  indexed_for(static_cast<std::size_t>(n_panels), policy, [&](std::size_t ip) {
    const Panel &pan = panels[ip];
    const AngularTable &tab = tables[pan.table_index];
    Comps acc = Comps::Zero();
    const double mid = 0.5 * (pan.ra + pan.rb);
    const double half = 0.5 * (pan.rb - pan.ra);
    for (int ir = 0; ir < 16; ++ir) {
      const double r = mid + half * gl16.x[ir];
      if (r <= 0.0)
        continue;
      const double wr = half * gl16.w[ir];
      const double kappa = qn * r;
      const double wr2 = wr * r * r * std::exp(-mu * r);
      const double w1 = wr2 / r;
      const double wv = wr2 / (r * r);
      const double wt3 = wr2 / r;
      const double wt5 = wr2 / (r * r * r);
      const int nc = static_cast<int>(tab.c.size());
      for (int ic = 0; ic < nc; ++ic) {
        const double arg = kappa * tab.c[ic];
        const Complex u(tab.w[ic] * std::cos(arg), tab.w[ic] * std::sin(arg));
        acc(0) += (w1 * kTwoPi) * u;
        const Eigen::Vector3d &sv = tab.sv[ic];
        const Eigen::Matrix3d &st = tab.st[ic];
        for (int i = 0; i < 3; ++i)
          acc(1 + i) += (wv * sv(i)) * u;
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) {
            const double tij = st(i, j);
            acc(4 + 3 * i + j) += (wt3 * tij) * u;
            acc(13 + 3 * i + j) +=
                (wt5 * (3.0 * tij - ((i == j) ? kTwoPi : 0.0))) * u;
          }
      }
    }
    partial[ip] = acc;
  });

  return pairwise_sum(partial, Comps(Comps::Zero()));
}

struct TermView {
  int offset, count;
};

TermView view_of(OracleTerm term) {
  switch (term) {
  case OracleTerm::OneOverR:
    return {0, 1};
  case OracleTerm::VectorROverR3:
    return {1, 3};
  case OracleTerm::TensorRROverR3:
    return {4, 9};
  case OracleTerm::TensorTracelessR5:
    return {13, 9};
  case OracleTerm::ContactDelta:
    return {0, 0};
  }
  return {0, 0};
}

double seg_norm(const Comps &c, TermView tv) {
  double s = 0;
  for (int i = 0; i < tv.count; ++i)
    s += std::norm(c(tv.offset + i));
  return std::sqrt(s);
}

struct Extrapolated {
  Comps value = Comps::Zero();
  std::array<double, 4> rel_err{}; // OneOverR, Vector, TensorRR, Traceless
  OracleDiagnostics diag;
};

constexpr std::array<OracleTerm, 4> kQuadTerms = {
    OracleTerm::OneOverR, OracleTerm::VectorROverR3,
    OracleTerm::TensorRROverR3, OracleTerm::TensorTracelessR5};

// Neville table toward mu = 0 over mu_k = mu0/2^k, stopping when every
// quadrature term's diagonal has settled to rel_tol.
Extrapolated extrapolate_all(const Vec3 &q, const ScreeningSchedule &sched,
                             ExecPolicy policy) {
  if (q.norm() < kForwardQMin)
    throw ForwardSingularityError("oracle: |q| below forward cutoff 1e-6");
  if (sched.max_levels < 2 || sched.mu_over_q <= 0.0 || sched.rel_tol <= 0.0)
    throw std::invalid_argument("oracle: malformed screening schedule");

  const double mu0 = sched.mu_over_q * q.norm();
  std::vector<double> mus;
  std::vector<Comps> row; // row[j] = T[k][j] after processing level k
  Extrapolated out;
  Comps prev_diag = Comps::Zero();

  for (int k = 0; k < sched.max_levels; ++k) {
    const double mu = mu0 / static_cast<double>(1 << k);
    mus.push_back(mu);
    out.diag.mu.push_back(mu);

    std::vector<Comps> cur(k + 1, Comps::Zero());
    cur[0] = screened_transforms(q, mu, policy);
    for (int j = 1; j <= k; ++j) {
      const double xl = mus[k - j];
      cur[j] = (xl * cur[j - 1] - mu * row[j - 1]) / (xl - mu);
    }
    const Comps diag = cur[k];
    row = std::move(cur);

    if (k > 0) {
      bool all_ok = true;
      double worst = 0.0;
      for (int t = 0; t < 4; ++t) {
        const TermView tv = view_of(kQuadTerms[t]);
        const double scale = std::max(seg_norm(diag, tv), 1e-300);
        Comps dd = diag - prev_diag;
        const double rel = seg_norm(dd, tv) / scale;
        out.rel_err[t] = rel;
        worst = std::max(worst, rel);
        if (rel > sched.rel_tol)
          all_ok = false;
      }
      out.diag.deltas.push_back(worst);
      if (all_ok) {
        out.value = diag;
        out.diag.levels_used = k + 1;
        return out;
      }
    }
    prev_diag = diag;
  }

  std::ostringstream msg;
  msg << "oracle: screening extrapolation did not converge at |q| = "
      << q.norm() << " after " << sched.max_levels
      << " levels; last relative deltas:";
  for (double d : out.diag.deltas)
    msg << " " << d;
  throw ExtrapolationError(msg.str());
}

OracleValue project(OracleTerm term, const Extrapolated &e) {
  OracleValue v;
  v.diag = e.diag;
  switch (term) {
  case OracleTerm::OneOverR:
    v.scalar = e.value(0);
    v.rel_error = e.rel_err[0];
    break;
  case OracleTerm::VectorROverR3:
    v.vec = Vec3c(e.value(1), e.value(2), e.value(3));
    v.rel_error = e.rel_err[1];
    break;
  case OracleTerm::TensorRROverR3:
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        v.tensor(i, j) = e.value(4 + 3 * i + j);
    v.rel_error = e.rel_err[2];
    break;
  case OracleTerm::TensorTracelessR5:
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        v.tensor(i, j) = e.value(13 + 3 * i + j);
    v.rel_error = e.rel_err[3];
    break;
  case OracleTerm::ContactDelta:
    // The contact transform is exact: integral of delta^3 against e^{iq.r}.
    v.scalar = 1.0;
    v.rel_error = 0.0;
    v.diag = OracleDiagnostics{};
    break;
  }
  return v;
}

} // namespace

OracleTransforms oracle_all(const Vec3 &q, const ScreeningSchedule &sched,
                            ExecPolicy policy) {
  const Extrapolated e = extrapolate_all(q, sched, policy);
  OracleTransforms t;
  t.one_over_r = project(OracleTerm::OneOverR, e);
  t.vector_r_over_r3 = project(OracleTerm::VectorROverR3, e);
  t.tensor_rr_over_r3 = project(OracleTerm::TensorRROverR3, e);
  t.tensor_traceless_r5 = project(OracleTerm::TensorTracelessR5, e);
  return t;
}

OracleValue oracle_fourier(OracleTerm term, const Vec3 &q,
                           const ScreeningSchedule &sched, ExecPolicy policy) {
  if (term == OracleTerm::ContactDelta) {
    OracleValue v;
    v.scalar = 1.0;
    return v;
  }
  return project(term, extrapolate_all(q, sched, policy));
}

//==============================================================================
// Kernel assembly, term by term as in the position-space interaction.

SpinOperator assemble_coulomb(const OracleTransforms &t, const Vec3 &p1,
                              const Vec3 &p2, const PotentialParams &params) {
  const double a2 = params.alpha * params.alpha;
  const Complex f1 = t.one_over_r.scalar;
  Complex retard = f1 * p1.dot(p2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      retard += t.tensor_rr_over_r3.tensor(i, j) * p1(i) * p2(j);
  const Complex value = f1 - (std::numbers::pi * a2 / 4.0) * 1.0 -
                        (a2 / 2.0) * retard;
  return SpinOperator(value * Mat4c::Identity());
}

SpinOperator assemble_spin_orbit(const OracleTransforms &t, const Vec3 &p1,
                                 const Vec3 &p2,
                                 const PotentialParams &params) {
  const double a2 = params.alpha * params.alpha;
  const Vec3 dp = p1 - p2;
  const Vec3c fv = t.vector_r_over_r3.vec;
  // (fv x dp) . (sigma1 + sigma2), complex coefficients allowed.
  const Vec3c cross(fv(1) * dp(2) - fv(2) * dp(1),
                    fv(2) * dp(0) - fv(0) * dp(2),
                    fv(0) * dp(1) - fv(1) * dp(0));
  Mat4c m = Mat4c::Zero();
  for (int k = 0; k < 3; ++k)
    m += cross(k) * sigma_total(k).matrix();
  return SpinOperator((-a2 / 4.0) * m);
}

SpinOperator assemble_spin_spin(const OracleTransforms &t,
                                const PotentialParams &params) {
  const double a2 = params.alpha * params.alpha;
  Mat4c m = (8.0 * std::numbers::pi / 3.0) * sigma_dot_sigma().matrix();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m -= t.tensor_traceless_r5.tensor(i, j) *
           (pauli(1, i) * pauli(2, j)).matrix();
  return SpinOperator((a2 / 4.0) * m);
}

SpinOperator oracle_coulomb_kernel(const Vec3 &q, const Vec3 &p1,
                                   const Vec3 &p2, const PotentialParams &params,
                                   const ScreeningSchedule &sched,
                                   ExecPolicy policy) {
  return assemble_coulomb(oracle_all(q, sched, policy), p1, p2, params);
}

SpinOperator oracle_spin_orbit_kernel(const Vec3 &q, const Vec3 &p1,
                                      const Vec3 &p2,
                                      const PotentialParams &params,
                                      const ScreeningSchedule &sched,
                                      ExecPolicy policy) {
  return assemble_spin_orbit(oracle_all(q, sched, policy), p1, p2, params);
}

SpinOperator oracle_spin_spin_kernel(const Vec3 &q,
                                     const PotentialParams &params,
                                     const ScreeningSchedule &sched,
                                     ExecPolicy policy) {
  return assemble_spin_spin(oracle_all(q, sched, policy), params);
}

} // namespace spinscat
