#include "nls/dispersion.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace nls {

namespace {

double effective_k2(const DispersionQuery& q) {
  return q.omega ? *q.omega - q.lambda : q.k_wave * q.k_wave;
}

double target_omega(const DispersionQuery& q) {
  return q.omega ? *q.omega : exact_omega(q.k_wave, q.lambda);
}

// H'(theta), for the Newton step.
double phase_factor_deriv(const SchemeCoefficients& c, double theta) {
  double s = 0.0;
  for (int j = 0; j < c.k; ++j)
    for (int l = j + 1; l < c.k; ++l) {
      const int m = l - j;
      s -= 2.0 * m * c.beta_d[j] * c.beta_d[l] * std::sin(m * theta);
    }
  return s;
}

double residual_impl(const SchemeCoefficients& c, double k2, double lambda,
                     double tau, double wt) {
  const double half = 0.5 * wt * tau;
  const double phi = phase_factor(c, wt * tau);
  return (2.0 / tau) * std::sin(half) - (k2 + lambda * phi) * std::cos(half);
}

}  // namespace

double exact_omega(double k_wave, double lambda) {
  return k_wave * k_wave + lambda;
}

double phase_factor(const SchemeCoefficients& c, double theta) {
  double s = 0.0;
  for (int j = 0; j < c.k; ++j) s += c.beta_d[j] * c.beta_d[j];
  for (int j = 0; j < c.k; ++j)
    for (int l = j + 1; l < c.k; ++l)
      s += 2.0 * c.beta_d[j] * c.beta_d[l] * std::cos((l - j) * theta);
  return s;
}

double dispersion_residual(const DispersionQuery& q, double omega_tilde) {
  const SchemeCoefficients c = scheme_catalogue(q.scheme);
  return residual_impl(c, effective_k2(q), q.lambda, q.tau, omega_tilde);
}

double solve_omega_tilde(const DispersionQuery& q) {
  if (q.scheme == SchemeId::FourStepSymmetric)
    throw std::invalid_argument(
        "solve_omega_tilde: FourStepSymmetric has no stable solution "
        "recovery; its dispersion relation is not tabulated");
  const double omega = target_omega(q);
  if (!(omega > 0.0))
    throw std::invalid_argument("solve_omega_tilde: requires omega > 0");
  const double k2 = effective_k2(q);

  if (q.scheme == SchemeId::CrankNicolson)
    return (2.0 / q.tau) * std::atan(0.5 * omega * q.tau);

  const SchemeCoefficients c = scheme_catalogue(q.scheme);
  auto g = [&](double wt) {
    return residual_impl(c, k2, q.lambda, q.tau, wt);
  };

  // Newton from the exact frequency; the root is an O(tau^2) perturbation.
  const double hi_cap = (1.0 - 1e-12) * M_PI / q.tau;
  double lo = 0.5 * omega;
  double hi = std::min(1.5 * omega, hi_cap);
  double wt = std::min(omega, hi_cap);
  for (int it = 0; it < 100; ++it) {
    const double half = 0.5 * wt * q.tau;
    const double phi = phase_factor(c, wt * q.tau);
    const double gv = (2.0 / q.tau) * std::sin(half) -
                      (k2 + q.lambda * phi) * std::cos(half);
    const double gp = std::cos(half) -
                      q.lambda * q.tau * phase_factor_deriv(c, wt * q.tau) *
                          std::cos(half) +
                      0.5 * q.tau * (k2 + q.lambda * phi) * std::sin(half);
    if (gp == 0.0) break;
    const double next = wt - gv / gp;
    if (!(next > lo) || !(next < hi)) break;
    if (std::abs(next - wt) <= 1e-16 * std::abs(next)) return next;
    wt = next;
  }
  if (std::abs(g(wt)) < 1e-10 * std::max(1.0, omega)) return wt;

  // Bisection fallback.
  double glo = g(lo), ghi = g(hi);
  if (glo == 0.0) return lo;
  if (ghi == 0.0) return hi;
  if (glo * ghi > 0.0)
    throw std::runtime_error("solve_omega_tilde: failed to bracket the root");
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if (gm == 0.0 || hi - lo <= 1e-16 * std::abs(mid)) return mid;
    if (glo * gm < 0.0) {
      hi = mid;
    } else {
      lo = mid;
      glo = gm;
    }
  }
  return 0.5 * (lo + hi);
}

double dispersion_error(const DispersionQuery& q) {
  const double omega = target_omega(q);
  return std::abs(solve_omega_tilde(q) - omega) / omega;
}

std::vector<DispersionRow> dispersion_rate_table(DispersionQuery q,
                                                 std::span<const double> taus) {
  std::vector<DispersionRow> rows;
  rows.reserve(taus.size());
  for (std::size_t i = 0; i < taus.size(); ++i) {
    q.tau = taus[i];
    DispersionRow r;
    r.tau = q.tau;
    r.omega = target_omega(q);
    r.omega_tilde = solve_omega_tilde(q);
    r.error = std::abs(r.omega_tilde - r.omega) / r.omega;
    r.order = std::numeric_limits<double>::quiet_NaN();
    if (i > 0 && rows[i - 1].error > 0.0 && r.error > 0.0)
      r.order = std::log(rows[i - 1].error / r.error) /
                std::log(taus[i - 1] / taus[i]);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace nls
