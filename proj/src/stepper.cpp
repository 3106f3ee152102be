#include "nls/stepper.hpp"

#include <cmath>
#include <utility>

#include "nls/kernels.hpp"
#include "nls/tridiag.hpp"

namespace nls {

const char* to_string(RunStatus s) {
  switch (s) {
    case RunStatus::Completed: return "completed";
    case RunStatus::AmplitudeStop: return "amplitude_stop";
    case RunStatus::SolverFailure: return "solver_failure";
    case RunStatus::NonFinite: return "non_finite";
  }
  return "unknown";
}

FixedPointResult fixed_point_update(const ComplexState& R, const Grid1D& g,
                                    const Nonlinearity& nl, double tau,
                                    double delta, int max_iters) {
  require_conforming(R, g, "fixed_point_update");
  const int n = g.num_nodes();

  ComplexState rhs(cvec(n), R.t);
  for (int j = 0; j < n; ++j) rhs.values[j] = cplx{0.0, 1.0} * R.values[j];

  cvec w(R.values);  // w^0 = R^n
  std::vector<double> d(n);

  FixedPointResult out;
  for (int l = 0; l < max_iters; ++l) {
    kernels::assemble_diagonal(R.values, w, nl, tau, d);
    ComplexState w_next = solve_shifted_system(d, rhs, g, tau);
    ++out.iterations;
    const double incr = kernels::dist_l2(w_next.values, w, g.h);
    w = std::move(w_next.values);
    if (incr <= delta) {
      out.converged = true;
      break;
    }
  }

  out.R_next = ComplexState(cvec(n), R.t + tau);
  for (int j = 0; j < n; ++j)
    out.R_next.values[j] = 2.0 * w[j] - R.values[j];
  return out;
}

UHistory startup_history(const ComplexState& u0, const Grid1D& g,
                         const Nonlinearity& nl, const SchemeCoefficients& c,
                         const SolverConfig& cfg, const ExactSampler& sampler) {
  require_conforming(u0, g, "startup_history");
  UHistory hist(c.k);
  if (cfg.startup == Startup::ExactSamples) {
    if (!sampler)
      throw std::invalid_argument(
          "startup_history: ExactSamples requires a sampler");
    for (int j = 0; j < c.k; ++j) hist.push(sampler(j * cfg.tau));
    return hist;
  }
  // CascadeCN: Crank-Nicolson coincides with its own auxiliary variable, so
  // the cascade steps are plain fixed-point updates on u.
  hist.push(u0);
  for (int j = 1; j < c.k; ++j) {
    FixedPointResult fp = fixed_point_update(hist.back(), g, nl, cfg.tau,
                                             cfg.delta, cfg.max_iters);
    if (!fp.converged)
      throw SolveError("startup_history: cascade step did not converge");
    hist.push(std::move(fp.R_next));
  }
  return hist;
}

RunDiagnostics run(const ComplexState& u0, const Grid1D& g,
                   const Nonlinearity& nl, const SchemeCoefficients& c,
                   const SolverConfig& cfg, const ExactSampler& sampler) {
  RunDiagnostics diag;
  UHistory hist = startup_history(u0, g, nl, c, cfg, sampler);

  const double linf0 = kernels::norm_linf(hist.back(c.k - 1).values);
  const int n_steps = static_cast<int>(std::llround(cfg.t_end / cfg.tau));

  ComplexState R = compose_R(hist, c);

  auto record = [&](int step, const ComplexState& Rn, const ComplexState& un,
                    int iters) {
    StepRecord r;
    r.step = step;
    r.t = un.t;
    r.mass_R = mass(Rn, g);
    r.energy_R = energy(Rn, g, nl);
    r.mass_u = mass(un, g);
    r.energy_u = energy(un, g, nl);
    r.linf_u = kernels::norm_linf(un.values);
    r.fp_iters = iters;
    diag.records.push_back(r);
  };

  record(c.k - 1, R, hist.back(), 0);

  for (int n = c.k - 1; n < n_steps; ++n) {
    FixedPointResult fp;
    try {
      fp = fixed_point_update(R, g, nl, cfg.tau, cfg.delta, cfg.max_iters);
    } catch (const SolveError& e) {
      diag.status = RunStatus::SolverFailure;
      diag.message = e.what();
      break;
    }
    if (!fp.converged) {
      diag.status = RunStatus::SolverFailure;
      diag.message = "fixed-point iteration did not converge";
      break;
    }
    ComplexState u_next = recover_u(fp.R_next, hist, c);
    if (!kernels::all_finite(fp.R_next.values) ||
        !kernels::all_finite(u_next.values)) {
      diag.status = RunStatus::NonFinite;
      diag.message = "non-finite state";
      break;
    }

    R = std::move(fp.R_next);
    hist.push(std::move(u_next));
    record(n + 1, R, hist.back(), fp.iterations);

    if (cfg.snapshot_every > 0 && (n + 1) % cfg.snapshot_every == 0)
      diag.snapshots.push_back(hist.back());

    if (diag.records.back().linf_u > cfg.amplitude_stop_factor * linf0) {
      diag.status = RunStatus::AmplitudeStop;
      diag.message = "amplitude exceeded stop factor";
      break;
    }
  }

  diag.final_u = hist.back();
  diag.final_R = R;
  return diag;
}

}  // namespace nls
