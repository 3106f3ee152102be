#pragma once

#include <cmath>
#include <span>

#include "nls/grid.hpp"
#include "nls/nonlinearity.hpp"

// Data-parallel grid kernels (OpenMP). A plain serial reference of every
// kernel lives in kernels_serial.hpp; tests check the two against each other
// and the benchmark target compares their throughput.

namespace nls::kernels {

// Below this size the parallel region costs more than the loop.
inline constexpr int kParallelCutoff = 4096;

/// (Lap u)_j = (u_{j-1} - 2 u_j + u_{j+1}) / h^2 with wraparound neighbours
/// (Periodic) or zero ghost values (Dirichlet).
inline void apply_laplacian(std::span<const cplx> u, const Grid1D& g,
                            std::span<cplx> out) {
  const int n = static_cast<int>(u.size());
  const double inv_h2 = 1.0 / (g.h * g.h);
#pragma omp parallel for schedule(static) if (n >= kParallelCutoff)
  for (int j = 1; j < n - 1; ++j)
    out[j] = (u[j - 1] - 2.0 * u[j] + u[j + 1]) * inv_h2;
  if (g.bc == Bc::Periodic) {
    out[0] = (u[n - 1] - 2.0 * u[0] + u[1]) * inv_h2;
    out[n - 1] = (u[n - 2] - 2.0 * u[n - 1] + u[0]) * inv_h2;
  } else {
    out[0] = (-2.0 * u[0] + u[1]) * inv_h2;
    out[n - 1] = (u[n - 2] - 2.0 * u[n - 1]) * inv_h2;
  }
}

/// d_j = (lambda tau / 2) G(|2 w_j - R_j|^2, |R_j|^2), the nonlinear diagonal
/// of the fixed-point linear system.
inline void assemble_diagonal(std::span<const cplx> R, std::span<const cplx> w,
                              const Nonlinearity& nl, double tau,
                              std::span<double> d) {
  const int n = static_cast<int>(R.size());
  const double c = 0.5 * nl.lambda * tau;
#pragma omp parallel for schedule(static) if (n >= kParallelCutoff)
  for (int j = 0; j < n; ++j) {
    const cplx v = 2.0 * w[j] - R[j];
    d[j] = c * nl.G(std::norm(v), std::norm(R[j]));
  }
}

/// h * sum_j u_j conj(v_j)
inline cplx inner_product(std::span<const cplx> u, std::span<const cplx> v,
                          double h) {
  const int n = static_cast<int>(u.size());
  double re = 0.0, im = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : re, im) \
    if (n >= kParallelCutoff)
  for (int j = 0; j < n; ++j) {
    const cplx t = u[j] * std::conj(v[j]);
    re += t.real();
    im += t.imag();
  }
  return {h * re, h * im};
}

inline double norm_l2_sq(std::span<const cplx> u, double h) {
  const int n = static_cast<int>(u.size());
  double s = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : s) \
    if (n >= kParallelCutoff)
  for (int j = 0; j < n; ++j) s += std::norm(u[j]);
  return h * s;
}

inline double norm_l4_pow4(std::span<const cplx> u, double h) {
  const int n = static_cast<int>(u.size());
  double s = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : s) \
    if (n >= kParallelCutoff)
  for (int j = 0; j < n; ++j) {
    const double a = std::norm(u[j]);
    s += a * a;
  }
  return h * s;
}

inline double norm_linf(std::span<const cplx> u) {
  const int n = static_cast<int>(u.size());
  double m = 0.0;
#pragma omp parallel for schedule(static) reduction(max : m) \
    if (n >= kParallelCutoff)
  for (int j = 0; j < n; ++j) m = std::max(m, std::abs(u[j]));
  return m;
}

/// l2 distance between successive fixed-point iterates.
inline double dist_l2(std::span<const cplx> u, std::span<const cplx> v,
                      double h) {
  const int n = static_cast<int>(u.size());
  double s = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : s) \
    if (n >= kParallelCutoff)
  for (int j = 0; j < n; ++j) s += std::norm(u[j] - v[j]);
  return std::sqrt(h * s);
}

/// out_j = sum_i coeff_i * states_i[j]
inline void linear_combination(std::span<const std::span<const cplx>> states,
                               std::span<const double> coeff,
                               std::span<cplx> out) {
  const int n = static_cast<int>(out.size());
  const int m = static_cast<int>(states.size());
#pragma omp parallel for schedule(static) if (n >= kParallelCutoff)
  for (int j = 0; j < n; ++j) {
    cplx acc = coeff[0] * states[0][j];
    for (int i = 1; i < m; ++i) acc += coeff[i] * states[i][j];
    out[j] = acc;
  }
}

inline bool all_finite(std::span<const cplx> u) {
  for (const cplx& z : u)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

}  // namespace nls::kernels
