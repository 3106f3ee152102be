#include "nls/tridiag.hpp"

#include <cmath>
#include <vector>

namespace nls {

namespace {

constexpr double kPivotTol = 1e-14;

// Constant-off-diagonal Thomas solve: (diag(b) + c * offdiag) x = r.
// b is consumed as scratch.
void thomas(std::vector<cplx>& b, cplx c, std::vector<cplx>& r,
            std::span<cplx> x) {
  const int n = static_cast<int>(b.size());
  const double row_scale_off = 2.0 * std::abs(c);
  for (int j = 1; j < n; ++j) {
    const double scale = std::abs(b[j - 1]) + row_scale_off;
    if (std::abs(b[j - 1]) < kPivotTol * scale)
      throw SolveError("solve_shifted_system: vanishing pivot");
    const cplx m = c / b[j - 1];
    b[j] -= m * c;
    r[j] -= m * r[j - 1];
  }
  const double scale = std::abs(b[n - 1]) + row_scale_off;
  if (std::abs(b[n - 1]) < kPivotTol * scale)
    throw SolveError("solve_shifted_system: vanishing pivot");
  x[n - 1] = r[n - 1] / b[n - 1];
  for (int j = n - 2; j >= 0; --j) x[j] = (r[j] - c * x[j + 1]) / b[j];
}

}  // namespace

ComplexState solve_shifted_system(std::span<const double> d,
                                  const ComplexState& rhs, const Grid1D& g,
                                  double tau) {
  require_conforming(rhs, g, "solve_shifted_system");
  const int n = g.num_nodes();
  if (static_cast<int>(d.size()) != n)
    throw std::invalid_argument(
        "solve_shifted_system: diagonal does not conform to grid");

  const double inv_h2 = 1.0 / (g.h * g.h);
  const cplx c{0.5 * tau * inv_h2, 0.0};  // off-diagonal entry

  std::vector<cplx> b(n);
  for (int j = 0; j < n; ++j) b[j] = cplx{-tau * inv_h2 - d[j], 1.0};

  ComplexState w(cvec(n), rhs.t);

  if (g.bc == Bc::HomogeneousDirichlet) {
    std::vector<cplx> r(rhs.values);
    thomas(b, c, r, w.values);
    return w;
  }

  // Periodic: corners A[0][n-1] = A[n-1][0] = c. Fold them into a rank-one
  // update A = T' + u v^T with u = (gamma, 0, .., 0, c), v = (1, 0, .., 0,
  // c/gamma), then combine two Thomas solves via Sherman-Morrison.
  const cplx gamma = -b[0];
  std::vector<cplx> bp(b);
  bp[0] = b[0] - gamma;
  bp[n - 1] = b[n - 1] - c * c / gamma;

  std::vector<cplx> r1(rhs.values);
  std::vector<cplx> y(n), z(n);
  {
    std::vector<cplx> b1(bp);
    thomas(b1, c, r1, y);
  }
  std::vector<cplx> r2(n, cplx{0.0, 0.0});
  r2[0] = gamma;
  r2[n - 1] = c;
  thomas(bp, c, r2, z);

  const cplx vy = y[0] + (c / gamma) * y[n - 1];
  const cplx vz = z[0] + (c / gamma) * z[n - 1];
  const cplx denom = 1.0 + vz;
  if (std::abs(denom) < kPivotTol)
    throw SolveError("solve_shifted_system: singular cyclic correction");
  const cplx factor = vy / denom;
  for (int j = 0; j < n; ++j) w.values[j] = y[j] - factor * z[j];
  return w;
}

}  // namespace nls
