#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "nls/grid.hpp"
#include "nls/nonlinearity.hpp"
#include "nls/schemes.hpp"

namespace nls {

enum class Startup {
  /// Seed u^0..u^{k-1} from a user-supplied exact sampler at t = j tau.
  ExactSamples,
  /// Seed from u^0 by taking k-1 Crank-Nicolson steps.
  CascadeCN,
};

struct SolverConfig {
  double tau = 1e-2;
  double t_end = 1.0;
  double delta = 1e-12;     // fixed-point stopping tolerance (l2)
  int max_iters = 200;      // fixed-point iteration cap
  Startup startup = Startup::CascadeCN;
  double amplitude_stop_factor = 10.0;  // stop when linf(u) exceeds this
                                        // multiple of linf(u^0)
  int snapshot_every = 0;   // 0 disables state snapshots
};

enum class RunStatus { Completed, AmplitudeStop, SolverFailure, NonFinite };

const char* to_string(RunStatus s);

/// Per-step conserved-quantity record. mass_R and energy_R track the
/// auxiliary variable R (the exactly conserved pair); mass_u, energy_u and
/// linf_u track the recovered solution.
struct StepRecord {
  int step;
  double t;
  double mass_R;
  double energy_R;
  double mass_u;
  double energy_u;
  double linf_u;
  int fp_iters;
};

struct RunDiagnostics {
  RunStatus status = RunStatus::Completed;
  std::vector<StepRecord> records;
  ComplexState final_u;
  ComplexState final_R;
  std::vector<ComplexState> snapshots;
  std::string message;
};

struct FixedPointResult {
  ComplexState R_next;
  int iterations = 0;
  bool converged = false;
};

/// One conservative step R^n -> R^{n+1} by Picard iteration on the midpoint
/// unknown w = (R^{n+1} + R^n)/2:
///   (i I + (tau/2) Lap_h - diag(d^l)) w^{l+1} = i R^n,
///   d^l_j = (lambda tau / 2) G(|2 w^l_j - R^n_j|^2, |R^n_j|^2),
/// starting from w^0 = R^n and stopping when the l2 increment drops to
/// delta. tau may be negative; the update is time symmetric.
FixedPointResult fixed_point_update(const ComplexState& R, const Grid1D& g,
                                    const Nonlinearity& nl, double tau,
                                    double delta, int max_iters);

using ExactSampler = std::function<ComplexState(double t)>;

/// Fills the history with the k starting values required by the scheme.
UHistory startup_history(const ComplexState& u0, const Grid1D& g,
                         const Nonlinearity& nl, const SchemeCoefficients& c,
                         const SolverConfig& cfg,
                         const ExactSampler& sampler = nullptr);

/// Runs the scheme from t = 0 to cfg.t_end. Conservation records start at
/// the first genuine step (n = k-1); startup states are diagnosed once at
/// entry. The sampler is only consulted for Startup::ExactSamples.
RunDiagnostics run(const ComplexState& u0, const Grid1D& g,
                   const Nonlinearity& nl, const SchemeCoefficients& c,
                   const SolverConfig& cfg,
                   const ExactSampler& sampler = nullptr);

}  // namespace nls
