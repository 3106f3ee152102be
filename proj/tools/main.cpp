#include <CLI11.hpp>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nls/csv.hpp"
#include "nls/dispersion.hpp"
#include "nls/experiments.hpp"
#include "nls/stepper.hpp"

namespace {

using namespace nls;

// Exit codes: 0 success, 1 runtime failure, 2 usage error.
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct OutputTarget {
  std::string path;  // empty: stdout

  int write(const std::string& body) const {
    if (path.empty()) {
      std::cout << body;
      return 0;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot open output file: " << path << "\n";
      return kExitRuntime;
    }
    f << body;
    return f ? 0 : kExitRuntime;
  }
};

struct ProblemOpts {
  std::string preset;  // "", "soliton", "quintic-blowup"
  std::string nl_name = "cubic";
  double lambda = -2.0;
  int power_p = 3;
  int cells = 1000;
  std::vector<double> domain = {-20.0, 20.0};
};

void add_problem_flags(CLI::App* cmd, ProblemOpts& o) {
  cmd->add_option("--preset", o.preset, "Problem preset")
      ->check(CLI::IsMember({"soliton", "quintic-blowup"}));
  cmd->add_option("--nl", o.nl_name, "Nonlinearity family")
      ->check(CLI::IsMember({"cubic", "quintic", "power"}));
  cmd->add_option("--lambda", o.lambda, "Coupling constant");
  cmd->add_option("--p", o.power_p,
                  "Exponent p of f(s) = s^p for the power family");
  cmd->add_option("--cells", o.cells, "Number of mesh cells");
  cmd->add_option("--domain", o.domain, "Domain endpoints a b")
      ->expected(2);
}

struct SolverOpts {
  double tau = 1e-2;
  double t_end = 1.0;
  double delta = 1e-12;
  int max_iters = 200;
  std::string startup = "cascade";
};

void add_solver_flags(CLI::App* cmd, SolverOpts& o) {
  cmd->add_option("--tau", o.tau, "Time step");
  cmd->add_option("--tend", o.t_end, "Final time");
  cmd->add_option("--delta", o.delta, "Fixed-point tolerance");
  cmd->add_option("--max-iters", o.max_iters, "Fixed-point iteration cap");
  cmd->add_option("--startup", o.startup,
                  "Multistep startup: exact (soliton preset only) or cascade")
      ->check(CLI::IsMember({"exact", "cascade"}));
}

SolverConfig to_config(const SolverOpts& o) {
  SolverConfig cfg;
  cfg.tau = o.tau;
  cfg.t_end = o.t_end;
  cfg.delta = o.delta;
  cfg.max_iters = o.max_iters;
  cfg.startup = o.startup == "exact" ? Startup::ExactSamples
                                     : Startup::CascadeCN;
  return cfg;
}

int run_solve(const std::string& scheme_name, const ProblemOpts& po,
              const SolverOpts& so, const OutputTarget& out) {
  const SchemeId scheme = scheme_from_name(scheme_name);
  SolverConfig cfg = to_config(so);

  Grid1D g = Grid1D::periodic(po.domain[0], po.domain[1], po.cells);
  Nonlinearity nl = Nonlinearity::cubic(po.lambda);
  ComplexState u0;
  ExactSampler sampler;

  if (po.preset == "soliton") {
    g = soliton_grid(po.cells);
    nl = soliton_nonlinearity();
    u0 = soliton_state(g, 0.0);
    sampler = [g](double t) { return soliton_state(g, t); };
  } else if (po.preset == "quintic-blowup") {
    g = blowup_grid(po.cells);
    nl = blowup_nonlinearity();
    u0 = blowup_initial(g);
  } else {
    if (po.nl_name == "quintic")
      nl = Nonlinearity::quintic(po.lambda);
    else if (po.nl_name == "power")
      nl = Nonlinearity::power(po.lambda, po.power_p);
    u0 = ComplexState(cvec(g.num_nodes(), cplx{0.0, 0.0}), 0.0);
    std::cerr << "warning: no preset given, starting from zero data\n";
  }

  if (cfg.startup == Startup::ExactSamples && !sampler) {
    std::cerr << "error: --startup exact requires --preset soliton\n";
    return kExitUsage;
  }

  RunDiagnostics diag =
      run(u0, g, nl, scheme_catalogue(scheme), cfg, sampler);

  std::ostringstream body;
  csv::write_solve(body, diag.records);
  const int rc = out.write(body.str());
  if (rc != 0) return rc;

  if (diag.status != RunStatus::Completed) {
    std::cerr << "run ended early: " << to_string(diag.status);
    if (!diag.message.empty()) std::cerr << " (" << diag.message << ")";
    std::cerr << "\n";
    // Early stop is the expected outcome for the blow-up preset.
    return po.preset == "quintic-blowup" ? 0 : kExitRuntime;
  }
  return 0;
}

int run_converge(const std::string& scheme_name, int cells,
                 const std::vector<double>& taus, double t_eval,
                 const SolverOpts& so, const OutputTarget& out) {
  const SchemeId scheme = scheme_from_name(scheme_name);
  const std::vector<ConvergenceRow> rows =
      convergence_study(scheme, cells, taus, t_eval, to_config(so));
  std::ostringstream body;
  csv::write_converge(body, rows);
  return out.write(body.str());
}

int run_dispersion(const std::string& scheme_name, double k_wave,
                   double lambda, const std::vector<double>& taus,
                   std::optional<double> omega, const OutputTarget& out) {
  DispersionQuery q;
  q.scheme = scheme_from_name(scheme_name);
  q.k_wave = k_wave;
  q.lambda = lambda;
  q.omega = omega;
  const std::vector<DispersionRow> rows = dispersion_rate_table(q, taus);
  std::ostringstream body;
  csv::write_dispersion(body, rows);
  return out.write(body.str());
}

int run_blowup(const std::vector<std::string>& scheme_names,
               const std::vector<double>& taus, int cells,
               const SolverOpts& so, const OutputTarget& out) {
  const SolverConfig cfg = to_config(so);
  std::vector<std::future<BlowupReport>> jobs;
  for (const std::string& name : scheme_names) {
    const SchemeId scheme = scheme_from_name(name);
    for (double tau : taus)
      jobs.push_back(std::async(std::launch::async, [=] {
        return blowup_study(scheme, tau, cells, cfg);
      }));
  }
  std::vector<BlowupReport> reports;
  reports.reserve(jobs.size());
  for (auto& j : jobs) reports.push_back(j.get());
  std::ostringstream body;
  csv::write_blowup(body, reports);
  return out.write(body.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conservative multistep solver for the 1D nonlinear "
               "Schrodinger equation"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::simple);
  // INI config: keys live in a section named after the subcommand, e.g.
  // [dispersion] scheme=mbdf2. Unknown keys are an error.
  app.set_config("--config")->configurable(false);
  app.allow_config_extras(false);

  OutputTarget out;
  std::string scheme = "cn";

  // Accept --config after the subcommand name too (falls through to the
  // main app) and let the section apply the subcommand's flags.
  auto enable_config = [](CLI::App* cmd) {
    cmd->fallthrough(true);
    cmd->configurable(true);
  };

  auto* solve = app.add_subcommand("solve", "Integrate and emit per-step "
                                            "conserved-quantity records");
  ProblemOpts solve_po;
  SolverOpts solve_so;
  solve->add_option("--scheme", scheme, "Time-stepping scheme");
  add_problem_flags(solve, solve_po);
  add_solver_flags(solve, solve_so);
  solve->add_option("--out", out.path, "Output CSV path (default stdout)");
  enable_config(solve);

  auto* conv = app.add_subcommand(
      "converge", "Soliton accuracy study over a sequence of time steps");
  int conv_cells = 4000;
  std::vector<double> conv_taus = {0.125, 0.0625, 0.03125};
  double conv_teval = 2.0;
  SolverOpts conv_so;
  conv->add_option("--scheme", scheme, "Time-stepping scheme");
  conv->add_option("--cells", conv_cells, "Number of mesh cells");
  conv->add_option("--taus", conv_taus, "Time steps, coarse to fine")
      ->expected(-1);
  conv->add_option("--teval", conv_teval, "Evaluation time");
  add_solver_flags(conv, conv_so);
  conv->add_option("--out", out.path, "Output CSV path (default stdout)");
  enable_config(conv);

  auto* disp = app.add_subcommand(
      "dispersion", "Discrete dispersion relation error against tau");
  double disp_k = 1.0, disp_lambda = 1.0;
  std::vector<double> disp_taus = {1e-2, 1e-3, 1e-4};
  double disp_omega = 0.0;
  disp->add_option("--scheme", scheme, "Time-stepping scheme");
  disp->add_option("--k", disp_k, "Wavenumber");
  disp->add_option("--lambda", disp_lambda, "Coupling constant");
  disp->add_option("--taus", disp_taus, "Time steps")->expected(-1);
  auto* omega_opt = disp->add_option(
      "--omega", disp_omega,
      "Fix the continuous frequency instead of deriving it from --k");
  disp->add_option("--out", out.path, "Output CSV path (default stdout)");
  enable_config(disp);

  auto* blow = app.add_subcommand(
      "blowup", "Quintic blow-up detection times per scheme and tau");
  std::vector<std::string> blow_schemes = {"cn"};
  std::vector<double> blow_taus = {0.01};
  int blow_cells = 1000;
  SolverOpts blow_so;
  blow->add_option("--schemes", blow_schemes, "Schemes to run")->expected(-1);
  blow->add_option("--taus", blow_taus, "Time steps")->expected(-1);
  blow->add_option("--cells", blow_cells, "Number of mesh cells");
  add_solver_flags(blow, blow_so);
  blow->add_option("--out", out.path, "Output CSV path (default stdout)");
  enable_config(blow);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (solve->parsed())
      return run_solve(scheme, solve_po, solve_so, out);
    if (conv->parsed())
      return run_converge(scheme, conv_cells, conv_taus, conv_teval, conv_so,
                          out);
    if (disp->parsed()) {
      std::optional<double> omega;
      if (omega_opt->count() > 0) omega = disp_omega;
      return run_dispersion(scheme, disp_k, disp_lambda, disp_taus, omega,
                            out);
    }
    if (blow->parsed())
      return run_blowup(blow_schemes, blow_taus, blow_cells, blow_so, out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}
