#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace nls {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

enum class Bc { Periodic, HomogeneousDirichlet };

/// Uniform 1D mesh on [a, b] with n_cells cells of width h = (b-a)/n_cells.
/// Periodic grids carry unknowns at nodes x_j = a + j h, j = 0..n_cells-1;
/// Dirichlet grids at the interior nodes j = 1..n_cells-1 (boundary values
/// are identically zero).
struct Grid1D {
  double a;
  double b;
  int n_cells;
  Bc bc;
  double h;

  Grid1D(double a_, double b_, int n_cells_, Bc bc_)
      : a(a_), b(b_), n_cells(n_cells_), bc(bc_), h((b_ - a_) / n_cells_) {
    if (n_cells < 3) throw std::invalid_argument("Grid1D: n_cells must be >= 3");
    if (!(h > 0.0)) throw std::invalid_argument("Grid1D: requires b > a");
  }

  static Grid1D periodic(double a, double b, int n_cells) {
    return Grid1D(a, b, n_cells, Bc::Periodic);
  }
  static Grid1D dirichlet(double a, double b, int n_cells) {
    return Grid1D(a, b, n_cells, Bc::HomogeneousDirichlet);
  }

  int num_nodes() const {
    return bc == Bc::Periodic ? n_cells : n_cells - 1;
  }

  double node(int j) const {
    return bc == Bc::Periodic ? a + j * h : a + (j + 1) * h;
  }

  std::vector<double> nodes() const {
    std::vector<double> x(num_nodes());
    for (int j = 0; j < num_nodes(); ++j) x[j] = node(j);
    return x;
  }
};

/// Complex-valued grid function plus the time it was recorded at.
struct ComplexState {
  cvec values;
  double t = 0.0;

  ComplexState() = default;
  ComplexState(cvec v, double t_) : values(std::move(v)), t(t_) {}

  std::size_t size() const { return values.size(); }
};

inline void require_conforming(const ComplexState& u, const Grid1D& g,
                               const char* what) {
  if (static_cast<int>(u.size()) != g.num_nodes())
    throw std::invalid_argument(std::string(what) +
                                ": state does not conform to grid");
}

}  // namespace nls
