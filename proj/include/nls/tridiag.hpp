#pragma once

#include <span>
#include <stdexcept>

#include "nls/grid.hpp"

namespace nls {

/// Structured failure of the shifted-Laplacian linear solve (singular or
/// ill-conditioned pivot).
struct SolveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Solves (i I + (tau/2) Lap_h - diag(d)) w = rhs exactly (to rounding).
/// Dirichlet grids use ordinary tridiagonal elimination; periodic grids use
/// a cyclic solve via Sherman-Morrison rank-one correction of two ordinary
/// tridiagonal solves, O(n) total. tau may be negative (backward step).
/// Throws SolveError when a pivot magnitude falls below 1e-14 of its row
/// scale.
ComplexState solve_shifted_system(std::span<const double> d,
                                  const ComplexState& rhs, const Grid1D& g,
                                  double tau);

}  // namespace nls
