#include <doctest.h>

#include <cstdlib>
#include <limits>
#include <sstream>

#include "nls/csv.hpp"

using namespace nls;

TEST_CASE("format_double round-trips and stays short") {
  for (double v : {0.1, 1.0 / 3.0, 0.015625, -2.718281828459045, 1e-300,
                   35.2965, 0.0})
    CHECK(std::strtod(csv::format_double(v).c_str(), nullptr) == v);
  CHECK(csv::format_double(0.5) == "0.5");
  CHECK(csv::format_double(2.0) == "2");
  CHECK(csv::format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
}

TEST_CASE("solve schema") {
  std::ostringstream os;
  csv::write_solve(os, {{0, 0.0, 1.5, -2.25, 1.5, -2.25, 1.0, 0},
                        {1, 0.5, 1.5, -2.25, 1.5, -2.25, 1.0, 6}});
  CHECK(os.str() ==
        "step,t,mass_R,energy_R,mass_u,energy_u,linf_u,fp_iters\n"
        "0,0,1.5,-2.25,1.5,-2.25,1,0\n"
        "1,0.5,1.5,-2.25,1.5,-2.25,1,6\n");
}

TEST_CASE("dispersion schema carries nan order on the first row") {
  std::ostringstream os;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  csv::write_dispersion(os, {{0.001, 2.0, 1.9999993, 3.3e-7, nan}});
  CHECK(os.str() ==
        "tau,omega,omega_tilde,error,order\n"
        "0.001,2,1.9999993,3.3e-07,nan\n");
}

TEST_CASE("blowup schema names scheme and status") {
  std::ostringstream os;
  csv::write_blowup(os, {{SchemeId::Mbdf2, 0.01, 2000, 0.64, 15.3288, 0.65,
                          0.67, RunStatus::Completed}});
  CHECK(os.str() ==
        "scheme,tau,n_cells,t_max,u_max,t1_R,t2_R,status\n"
        "mbdf2,0.01,2000,0.64,15.3288,0.65,0.67,completed\n");
}

TEST_CASE("writers are deterministic") {
  const std::vector<ConvergenceRow> rows = {
      {0.125, 0.5207171439589566, std::numeric_limits<double>::quiet_NaN(),
       0.515, std::numeric_limits<double>::quiet_NaN(), 0.53,
       std::numeric_limits<double>::quiet_NaN(), 0.436,
       std::numeric_limits<double>::quiet_NaN()}};
  std::ostringstream a, b;
  csv::write_converge(a, rows);
  csv::write_converge(b, rows);
  CHECK(a.str() == b.str());
  CHECK(a.str().find("0.5207171439589566") != std::string::npos);
}
