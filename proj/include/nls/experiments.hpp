#pragma once

#include <span>
#include <vector>

#include "nls/stepper.hpp"

namespace nls {

/// Travelling soliton of i u_t = -u_xx - 2 |u|^2 u:
/// u(x,t) = sech(x - 4t) exp(i(2x - 3t)).
cplx soliton_exact(double x, double t);
ComplexState soliton_state(const Grid1D& g, double t);

/// Cubic soliton benchmark: periodic [-20, 20], lambda = -2.
Grid1D soliton_grid(int n_cells);
Nonlinearity soliton_nonlinearity();

/// Quintic focusing benchmark: periodic [-10, 10], lambda = -1,
/// u0 = 1.6 exp(-x^2), integrated to t = 0.8.
Grid1D blowup_grid(int n_cells);
Nonlinearity blowup_nonlinearity();
ComplexState blowup_initial(const Grid1D& g);
inline constexpr double kBlowupTEnd = 0.8;

struct ConvergenceRow {
  double tau;
  double l2_re;
  double order_re;       // NaN on the first row
  double linf_re;
  double order_linf_re;
  double l2_im;
  double order_im;
  double linf_im;
  double order_linf_im;
};

/// Errors of the recovered solution against the exact soliton at t_eval,
/// measured separately in the real and imaginary parts, for each tau.
/// Rows are ordered as the input taus; orders compare consecutive rows.
std::vector<ConvergenceRow> convergence_study(SchemeId scheme, int n_cells,
                                              std::span<const double> taus,
                                              double t_eval,
                                              const SolverConfig& base);

/// Max drift of mass and energy of R over the records of a finished run,
/// relative to the first record.
struct ConservationDrift {
  double mass = 0.0;
  double energy = 0.0;
};
ConservationDrift max_drift(const RunDiagnostics& diag);

/// Blow-up detection diagnostics from a quintic run. All times come from
/// the per-step records, earliest index on ties:
///   t_max: time of the largest finite linf(u),
///   u_max: that amplitude,
///   t1_R:  time of the minimum of the conserved energy of R,
///   t2_R:  time t_{n+1} of the largest one-step energy increase.
struct BlowupReport {
  SchemeId scheme;
  double tau;
  int n_cells;
  double t_max;
  double u_max;
  double t1_R;
  double t2_R;
  RunStatus status;
};

BlowupReport blowup_study(SchemeId scheme, double tau, int n_cells,
                          const SolverConfig& base);

}  // namespace nls
