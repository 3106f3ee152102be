#pragma once

#include <optional>
#include <vector>

#include "nls/schemes.hpp"

namespace nls {

/// Plane-wave setup u = exp(i(k x - omega t)) for the linearized equation
/// i u_t = -u_xx + lambda u. When omega is set it overrides the exact
/// frequency and the effective wavenumber is taken as k^2 = omega - lambda;
/// this matches tabulations that fix omega rather than k.
struct DispersionQuery {
  SchemeId scheme = SchemeId::CrankNicolson;
  double k_wave = 1.0;
  double lambda = 1.0;
  double tau = 1e-2;
  std::optional<double> omega;  // frequency override
};

/// omega = k^2 + lambda
double exact_omega(double k_wave, double lambda);

/// Phase amplification factor Phi = H(omega_tilde * tau) where
/// H(theta) = |sum_j beta_j e^{i j theta}|^2
///          = sum_j beta_j^2 + 2 sum_{j<l} beta_j beta_l cos((l-j) theta).
double phase_factor(const SchemeCoefficients& c, double theta);

/// Residual of the discrete dispersion relation at trial frequency wt:
/// g(wt) = (2/tau) sin(wt tau/2) - (k^2 + lambda Phi(wt tau)) cos(wt tau/2).
/// The discrete frequency is the root nearest the exact omega.
double dispersion_residual(const DispersionQuery& q, double omega_tilde);

/// Discrete frequency omega_tilde. Crank-Nicolson has the closed form
/// (2/tau) atan(omega tau / 2); the multistep schemes are solved by Newton
/// iteration with bisection fallback on omega * [0.5, 1.5] clipped to
/// (0, pi/tau). FourStepSymmetric has no stable recovery and is rejected.
double solve_omega_tilde(const DispersionQuery& q);

/// Relative frequency error |omega_tilde - omega| / omega.
double dispersion_error(const DispersionQuery& q);

struct DispersionRow {
  double tau;
  double omega;
  double omega_tilde;
  double error;  // relative, |omega_tilde - omega| / omega
  double order;  // NaN on the first row
};

std::vector<DispersionRow> dispersion_rate_table(DispersionQuery q,
                                                 std::span<const double> taus);

}  // namespace nls
