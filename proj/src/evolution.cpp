#include "spinscat/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "spinscat/errors.hpp"

namespace spinscat {

SpinState scatter_spin(const SpinState &chi_in, const Kinematics &kin,
                       const PotentialParams &params) {
  if (std::abs(chi_in.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("scatter_spin: initial state must be normalized");
  if (chi_in.exchange_class() == ExchangeClass::Mixed)
    throw std::invalid_argument(
        "scatter_spin: initial spin state must have definite exchange class");

  const AmplitudeOperator amp = first_born(kin, params);
  const Vec4c y = amp.total.matrix() * chi_in.amplitudes();
  const double mnorm = amp.total.frobenius_norm();
  if (y.norm() < kForbiddenTol * mnorm)
    throw ForbiddenTransitionError(
        "scatter_spin: amplitude annihilates the initial spin state");
  return SpinState(y, true);
}

std::vector<double> make_theta_grid(int n) {
  if (n < 1)
    throw std::invalid_argument("make_theta_grid: n must be positive");
  std::vector<double> g(n);
  for (int j = 1; j <= n; ++j)
    g[j - 1] = j * std::numbers::pi / (n + 2);
  return g;
}

std::vector<double> make_phi_grid(int n) {
  if (n < 1)
    throw std::invalid_argument("make_phi_grid: n must be positive");
  std::vector<double> g(n);
  for (int j = 0; j < n; ++j)
    g[j] = 2.0 * std::numbers::pi * j / n;
  return g;
}

SpinState parse_initial_state(const std::string &label) {
  if (label == "psi_plus")
    return bell_state(Bell::PsiPlus);
  if (label == "psi_minus")
    return bell_state(Bell::PsiMinus);
  if (label == "phi_plus")
    return bell_state(Bell::PhiPlus);
  if (label == "phi_minus")
    return bell_state(Bell::PhiMinus);
  if (label == "up_up")
    return SpinState(Vec4c(1, 0, 0, 0), false);
  if (label == "up_down")
    return SpinState(Vec4c(0, 1, 0, 0), false);
  if (label == "down_up")
    return SpinState(Vec4c(0, 0, 1, 0), false);
  if (label == "down_down")
    return SpinState(Vec4c(0, 0, 0, 1), false);
  if (label.rfind("cdg:", 0) == 0) {
    std::istringstream ss(label.substr(4));
    double c, d, g;
    char c1, c2;
    if ((ss >> c >> c1 >> d >> c2 >> g) && c1 == ',' && c2 == ',')
      return SpinState(Vec4c(c, d, d, g), true);
    throw std::invalid_argument("parse_initial_state: malformed cdg:C,D,G");
  }
  throw std::invalid_argument("parse_initial_state: unknown label '" + label +
                              "'");
}

ScanResult scan_entanglement(const SpinState &initial, const std::string &label,
                             const std::vector<double> &k_grid,
                             const std::vector<double> &theta_grid,
                             const std::vector<double> &phi_grid,
                             const PotentialParams &params,
                             ExecPolicy policy) {
  if (std::abs(initial.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("scan_entanglement: initial state must be normalized");
  if (initial.exchange_class() == ExchangeClass::Mixed)
    throw std::invalid_argument(
        "scan_entanglement: initial state must have definite exchange class");
  if (k_grid.empty() || theta_grid.empty() || phi_grid.empty())
    throw std::invalid_argument("scan_entanglement: empty grid");

  const double c_in = concurrence(initial);
  const std::size_t nt = theta_grid.size(), np = phi_grid.size();
  const std::size_t total = k_grid.size() * nt * np;

  std::vector<EvolutionRecord> recs(total);
  // exceptions may not escape the parallel region: latch per index, rethrow
  // the lowest-index one after the loop (deterministic).
  std::vector<std::exception_ptr> errs(total);
  indexed_for(total, policy, [&](std::size_t idx) {
    try {
      const std::size_t ik = idx / (nt * np);
      const std::size_t it = (idx / np) % nt;
      const std::size_t ip = idx % np;

      EvolutionRecord r;
      r.k = k_grid[ik];
      r.theta = theta_grid[it];
      r.phi = phi_grid[ip];
      r.initial_label = label;
      r.initial_concurrence = c_in;

      const Kinematics kin = cm_elastic_kinematics(r.k, r.theta, r.phi);
      const AmplitudeOperator amp = first_born(kin, params);
      const Vec4c y = amp.total.matrix() * initial.amplitudes();
      const double mnorm = amp.total.frobenius_norm();
      r.outgoing_norm_ratio = mnorm > 0 ? y.norm() / mnorm : 0.0;
      if (y.norm() < kForbiddenTol * mnorm) {
        r.forbidden = true;
        r.final_concurrence = std::numeric_limits<double>::quiet_NaN();
      } else {
        const SpinState out(y, true);
        r.final_amplitudes = out.amplitudes();
        r.final_concurrence = concurrence(out);
      }
      recs[idx] = r;
    } catch (...) {
      errs[idx] = std::current_exception();
    }
  });
  for (const auto &e : errs)
    if (e)
      std::rethrow_exception(e);

  // Sort by final concurrence ascending, forbidden records last; stable
  // tie-break by original grid index keeps the output deterministic.
  std::vector<std::size_t> order(total);
  for (std::size_t i = 0; i < total; ++i)
    order[i] = i;
  auto key = [&](std::size_t i) {
    return recs[i].forbidden ? std::numeric_limits<double>::infinity()
                             : recs[i].final_concurrence;
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double ka = key(a), kb = key(b);
    if (ka != kb)
      return ka < kb;
    return a < b;
  });

  ScanResult res;
  res.records.reserve(total);
  for (std::size_t i : order)
    res.records.push_back(std::move(recs[i]));

  ScanSummary &s = res.summary;
  s.n_records = total;
  s.n_forbidden = 0;
  bool have = false;
  for (const EvolutionRecord &r : res.records) {
    if (r.forbidden) {
      ++s.n_forbidden;
      continue;
    }
    if (!have) {
      s.min_concurrence = s.max_concurrence = r.final_concurrence;
      s.arg_min = r;
      have = true;
    } else {
      if (r.final_concurrence < s.min_concurrence) {
        s.min_concurrence = r.final_concurrence;
        s.arg_min = r;
      }
      s.max_concurrence = std::max(s.max_concurrence, r.final_concurrence);
    }
  }
  return res;
}

} // namespace spinscat
