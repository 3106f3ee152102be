#include "nls/experiments.hpp"

#include <cmath>
#include <limits>

#include "nls/kernels.hpp"

namespace nls {

cplx soliton_exact(double x, double t) {
  const double phase = 2.0 * x - 3.0 * t;
  const double amp = 1.0 / std::cosh(x - 4.0 * t);
  return amp * cplx{std::cos(phase), std::sin(phase)};
}

ComplexState soliton_state(const Grid1D& g, double t) {
  ComplexState u(cvec(g.num_nodes()), t);
  for (int j = 0; j < g.num_nodes(); ++j)
    u.values[j] = soliton_exact(g.node(j), t);
  return u;
}

Grid1D soliton_grid(int n_cells) { return Grid1D::periodic(-20.0, 20.0, n_cells); }
Nonlinearity soliton_nonlinearity() { return Nonlinearity::cubic(-2.0); }

Grid1D blowup_grid(int n_cells) { return Grid1D::periodic(-10.0, 10.0, n_cells); }
Nonlinearity blowup_nonlinearity() { return Nonlinearity::quintic(-1.0); }

ComplexState blowup_initial(const Grid1D& g) {
  ComplexState u(cvec(g.num_nodes()), 0.0);
  for (int j = 0; j < g.num_nodes(); ++j) {
    const double x = g.node(j);
    u.values[j] = cplx{1.6 * std::exp(-x * x), 0.0};
  }
  return u;
}

namespace {

struct PartErrors {
  double l2_re, linf_re, l2_im, linf_im;
};

PartErrors part_errors(const ComplexState& num, const ComplexState& ref,
                       double h) {
  PartErrors e{0.0, 0.0, 0.0, 0.0};
  for (std::size_t j = 0; j < num.size(); ++j) {
    const double dre = num.values[j].real() - ref.values[j].real();
    const double dim = num.values[j].imag() - ref.values[j].imag();
    e.l2_re += dre * dre;
    e.l2_im += dim * dim;
    e.linf_re = std::max(e.linf_re, std::abs(dre));
    e.linf_im = std::max(e.linf_im, std::abs(dim));
  }
  e.l2_re = std::sqrt(h * e.l2_re);
  e.l2_im = std::sqrt(h * e.l2_im);
  return e;
}

double rate(double e_coarse, double e_fine, double tau_coarse,
            double tau_fine) {
  if (!(e_coarse > 0.0) || !(e_fine > 0.0))
    return std::numeric_limits<double>::quiet_NaN();
  return std::log(e_coarse / e_fine) / std::log(tau_coarse / tau_fine);
}

}  // namespace

std::vector<ConvergenceRow> convergence_study(SchemeId scheme, int n_cells,
                                              std::span<const double> taus,
                                              double t_eval,
                                              const SolverConfig& base) {
  const Grid1D g = soliton_grid(n_cells);
  const Nonlinearity nl = soliton_nonlinearity();
  const SchemeCoefficients c = scheme_catalogue(scheme);
  const ExactSampler sampler = [&g](double t) { return soliton_state(g, t); };

  std::vector<ConvergenceRow> rows;
  rows.reserve(taus.size());
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = 0; i < taus.size(); ++i) {
    SolverConfig cfg = base;
    cfg.tau = taus[i];
    cfg.t_end = t_eval;
    RunDiagnostics diag = run(soliton_state(g, 0.0), g, nl, c, cfg, sampler);
    if (diag.status != RunStatus::Completed)
      throw std::runtime_error("convergence_study: run did not complete (" +
                               std::string(to_string(diag.status)) + ")");
    const PartErrors e = part_errors(diag.final_u, soliton_state(g, t_eval), g.h);

    ConvergenceRow r{taus[i], e.l2_re, nan, e.linf_re, nan,
                     e.l2_im,  nan,    e.linf_im, nan};
    if (i > 0) {
      const ConvergenceRow& p = rows[i - 1];
      r.order_re = rate(p.l2_re, r.l2_re, p.tau, r.tau);
      r.order_linf_re = rate(p.linf_re, r.linf_re, p.tau, r.tau);
      r.order_im = rate(p.l2_im, r.l2_im, p.tau, r.tau);
      r.order_linf_im = rate(p.linf_im, r.linf_im, p.tau, r.tau);
    }
    rows.push_back(r);
  }
  return rows;
}

ConservationDrift max_drift(const RunDiagnostics& diag) {
  ConservationDrift d;
  if (diag.records.empty()) return d;
  const double m0 = diag.records.front().mass_R;
  const double e0 = diag.records.front().energy_R;
  for (const StepRecord& r : diag.records) {
    d.mass = std::max(d.mass, std::abs(r.mass_R - m0));
    d.energy = std::max(d.energy, std::abs(r.energy_R - e0));
  }
  return d;
}

BlowupReport blowup_study(SchemeId scheme, double tau, int n_cells,
                          const SolverConfig& base) {
  const Grid1D g = blowup_grid(n_cells);
  const Nonlinearity nl = blowup_nonlinearity();
  const SchemeCoefficients c = scheme_catalogue(scheme);

  SolverConfig cfg = base;
  cfg.tau = tau;
  cfg.t_end = kBlowupTEnd;
  RunDiagnostics diag =
      run(blowup_initial(g), g, nl, c, cfg, nullptr);

  BlowupReport rep{scheme, tau, n_cells, 0.0, 0.0, 0.0, 0.0, diag.status};
  double min_energy = std::numeric_limits<double>::infinity();
  double max_jump = -std::numeric_limits<double>::infinity();
  bool have_prev = false;
  double prev_energy = 0.0;
  for (const StepRecord& r : diag.records) {
    if (!std::isfinite(r.linf_u) || !std::isfinite(r.energy_R)) break;
    if (r.linf_u > rep.u_max) {
      rep.u_max = r.linf_u;
      rep.t_max = r.t;
    }
    if (r.energy_R < min_energy) {
      min_energy = r.energy_R;
      rep.t1_R = r.t;
    }
    if (have_prev && r.energy_R - prev_energy > max_jump) {
      max_jump = r.energy_R - prev_energy;
      rep.t2_R = r.t;
    }
    prev_energy = r.energy_R;
    have_prev = true;
  }
  return rep;
}

}  // namespace nls
