#include "nls/csv.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace nls::csv {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

void write_solve(std::ostream& os, const std::vector<StepRecord>& records) {
  os << "step,t,mass_R,energy_R,mass_u,energy_u,linf_u,fp_iters\n";
  for (const StepRecord& r : records)
    os << r.step << ',' << format_double(r.t) << ','
       << format_double(r.mass_R) << ',' << format_double(r.energy_R) << ','
       << format_double(r.mass_u) << ',' << format_double(r.energy_u) << ','
       << format_double(r.linf_u) << ',' << r.fp_iters << '\n';
}

void write_converge(std::ostream& os, const std::vector<ConvergenceRow>& rows) {
  os << "tau,l2_re,order_re,linf_re,order_linf_re,"
        "l2_im,order_im,linf_im,order_linf_im\n";
  for (const ConvergenceRow& r : rows)
    os << format_double(r.tau) << ',' << format_double(r.l2_re) << ','
       << format_double(r.order_re) << ',' << format_double(r.linf_re) << ','
       << format_double(r.order_linf_re) << ',' << format_double(r.l2_im)
       << ',' << format_double(r.order_im) << ',' << format_double(r.linf_im)
       << ',' << format_double(r.order_linf_im) << '\n';
}

void write_dispersion(std::ostream& os,
                      const std::vector<DispersionRow>& rows) {
  os << "tau,omega,omega_tilde,error,order\n";
  for (const DispersionRow& r : rows)
    os << format_double(r.tau) << ',' << format_double(r.omega) << ','
       << format_double(r.omega_tilde) << ',' << format_double(r.error) << ','
       << format_double(r.order) << '\n';
}

void write_blowup(std::ostream& os, const std::vector<BlowupReport>& reports) {
  os << "scheme,tau,n_cells,t_max,u_max,t1_R,t2_R,status\n";
  for (const BlowupReport& r : reports)
    os << scheme_catalogue(r.scheme).name << ',' << format_double(r.tau) << ','
       << r.n_cells << ',' << format_double(r.t_max) << ','
       << format_double(r.u_max) << ',' << format_double(r.t1_R) << ','
       << format_double(r.t2_R) << ',' << to_string(r.status) << '\n';
}

}  // namespace nls::csv
