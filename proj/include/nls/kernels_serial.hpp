#pragma once

#include <cmath>
#include <span>

#include "nls/grid.hpp"
#include "nls/nonlinearity.hpp"

// Serial reference kernels. Deliberately written as the most direct loop,
// with modular index arithmetic instead of peeled boundary cases, so each
// one can serve as an oracle for its OpenMP counterpart.

namespace nls::serial {

inline void apply_laplacian(std::span<const cplx> u, const Grid1D& g,
                            std::span<cplx> out) {
  const int n = static_cast<int>(u.size());
  const double inv_h2 = 1.0 / (g.h * g.h);
  for (int j = 0; j < n; ++j) {
    cplx left, right;
    if (g.bc == Bc::Periodic) {
      left = u[(j + n - 1) % n];
      right = u[(j + 1) % n];
    } else {
      left = j > 0 ? u[j - 1] : cplx{0.0, 0.0};
      right = j < n - 1 ? u[j + 1] : cplx{0.0, 0.0};
    }
    out[j] = (left - 2.0 * u[j] + right) * inv_h2;
  }
}

inline void assemble_diagonal(std::span<const cplx> R, std::span<const cplx> w,
                              const Nonlinearity& nl, double tau,
                              std::span<double> d) {
  for (std::size_t j = 0; j < R.size(); ++j) {
    const cplx v = 2.0 * w[j] - R[j];
    d[j] = 0.5 * nl.lambda * tau * nl.G(std::norm(v), std::norm(R[j]));
  }
}

inline cplx inner_product(std::span<const cplx> u, std::span<const cplx> v,
                          double h) {
  cplx s{0.0, 0.0};
  for (std::size_t j = 0; j < u.size(); ++j) s += u[j] * std::conj(v[j]);
  return h * s;
}

inline double norm_l2_sq(std::span<const cplx> u, double h) {
  double s = 0.0;
  for (const cplx& z : u) s += std::norm(z);
  return h * s;
}

inline double norm_l4_pow4(std::span<const cplx> u, double h) {
  double s = 0.0;
  for (const cplx& z : u) s += std::norm(z) * std::norm(z);
  return h * s;
}

inline double norm_linf(std::span<const cplx> u) {
  double m = 0.0;
  for (const cplx& z : u) m = std::max(m, std::abs(z));
  return m;
}

inline double dist_l2(std::span<const cplx> u, std::span<const cplx> v,
                      double h) {
  double s = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) s += std::norm(u[j] - v[j]);
  return std::sqrt(h * s);
}

inline void linear_combination(std::span<const std::span<const cplx>> states,
                               std::span<const double> coeff,
                               std::span<cplx> out) {
  for (std::size_t j = 0; j < out.size(); ++j) {
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < states.size(); ++i)
      acc += coeff[i] * states[i][j];
    out[j] = acc;
  }
}

}  // namespace nls::serial
