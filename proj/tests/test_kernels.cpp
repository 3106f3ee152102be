#include <doctest.h>

#include <cmath>
#include <random>

#include "nls/kernels.hpp"
#include "nls/kernels_serial.hpp"

using namespace nls;

namespace {

cvec random_state(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d(0.0, 1.0);
  cvec u(n);
  for (cplx& z : u) z = cplx{d(rng), d(rng)};
  return u;
}

}  // namespace

TEST_CASE("laplacian periodic hand example") {
  // n = 4 on [0, 4], h = 1, u = (1, i, -1, -i)
  const Grid1D g = Grid1D::periodic(0.0, 4.0, 4);
  const cvec u = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  cvec out(4);
  kernels::apply_laplacian(u, g, out);
  // (u_{j-1} - 2 u_j + u_{j+1}): row 0: -i - 2 + i = -2
  CHECK(out[0] == cplx{-2.0, 0.0});
  CHECK(out[1] == cplx{0.0, -2.0});
  CHECK(out[2] == cplx{2.0, 0.0});
  CHECK(out[3] == cplx{0.0, 2.0});
}

TEST_CASE("laplacian dirichlet boundary stencil") {
  const Grid1D g = Grid1D::dirichlet(0.0, 4.0, 4);  // 3 interior nodes, h = 1
  const cvec u = {{1, 0}, {2, 0}, {3, 0}};
  cvec out(3);
  kernels::apply_laplacian(u, g, out);
  CHECK(out[0].real() == doctest::Approx(0.0 - 2.0 + 2.0));
  CHECK(out[1].real() == doctest::Approx(1.0 - 4.0 + 3.0));
  CHECK(out[2].real() == doctest::Approx(2.0 - 6.0 + 0.0));
}

TEST_CASE("periodic laplacian eigenvector symbol") {
  const int n = 64;
  const Grid1D g = Grid1D::periodic(-20.0, 20.0, n);
  const double k = 2.0 * M_PI * 3.0 / 40.0;  // mode 3
  cvec u(n);
  for (int j = 0; j < n; ++j) {
    const double x = g.node(j);
    u[j] = cplx{std::cos(k * x), std::sin(k * x)};
  }
  cvec out(n);
  kernels::apply_laplacian(u, g, out);
  const double mu = -4.0 / (g.h * g.h) * std::pow(std::sin(0.5 * k * g.h), 2);
  for (int j = 0; j < n; ++j)
    CHECK(std::abs(out[j] - mu * u[j]) < 1e-11 * std::abs(mu));
}

TEST_CASE("laplacian is second order on a smooth function") {
  auto err = [](int n) {
    const Grid1D g = Grid1D::periodic(-20.0, 20.0, n);
    cvec u(n), out(n);
    for (int j = 0; j < n; ++j) {
      const double x = g.node(j);
      u[j] = cplx{std::exp(-x * x / 4.0), 0.0};
    }
    kernels::apply_laplacian(u, g, out);
    double e = 0.0;
    for (int j = 0; j < n; ++j) {
      const double x = g.node(j);
      const double exact = (x * x / 4.0 - 0.5) * std::exp(-x * x / 4.0);
      e = std::max(e, std::abs(out[j].real() - exact));
    }
    return e;
  };
  const double e1 = err(200), e2 = err(400);
  CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("laplacian is symmetric and negative semidefinite") {
  const int n = 97;
  const Grid1D g = Grid1D::periodic(-20.0, 20.0, n);
  const cvec u = random_state(n, 1), v = random_state(n, 2);
  cvec Lu(n), Lv(n);
  kernels::apply_laplacian(u, g, Lu);
  kernels::apply_laplacian(v, g, Lv);
  const cplx a = kernels::inner_product(Lu, v, g.h);
  const cplx b = kernels::inner_product(u, Lv, g.h);
  CHECK(std::abs(a - b) < 1e-12);
  CHECK(kernels::inner_product(Lu, u, g.h).real() <= 1e-12);
}

TEST_CASE("omp kernels agree with the serial references") {
  for (int n : {257, 5000}) {  // below and above kParallelCutoff
    for (Bc bc : {Bc::Periodic, Bc::HomogeneousDirichlet}) {
      const Grid1D g(-20.0, 20.0, bc == Bc::Periodic ? n : n + 1, bc);
      REQUIRE(g.num_nodes() == n);
      const cvec u = random_state(n, 3), v = random_state(n, 4);
      const Nonlinearity nl = Nonlinearity::quintic(-1.0);

      cvec a(n), b(n);
      kernels::apply_laplacian(u, g, a);
      serial::apply_laplacian(u, g, b);
      for (int j = 0; j < n; ++j) CHECK(a[j] == b[j]);

      std::vector<double> da(n), db(n);
      kernels::assemble_diagonal(u, v, nl, 0.01, da);
      serial::assemble_diagonal(u, v, nl, 0.01, db);
      for (int j = 0; j < n; ++j) CHECK(da[j] == doctest::Approx(db[j]));

      CHECK(std::abs(kernels::inner_product(u, v, g.h) -
                     serial::inner_product(u, v, g.h)) < 1e-12);
      CHECK(kernels::norm_l2_sq(u, g.h) ==
            doctest::Approx(serial::norm_l2_sq(u, g.h)));
      CHECK(kernels::norm_l4_pow4(u, g.h) ==
            doctest::Approx(serial::norm_l4_pow4(u, g.h)));
      CHECK(kernels::norm_linf(u) == serial::norm_linf(u));
      CHECK(kernels::dist_l2(u, v, g.h) ==
            doctest::Approx(serial::dist_l2(u, v, g.h)));

      const cvec w = random_state(n, 5);
      const std::vector<std::span<const cplx>> states = {u, v, w};
      const std::vector<double> coeff = {1.5, -0.5, 0.25};
      cvec ca(n), cb(n);
      kernels::linear_combination(states, coeff, ca);
      serial::linear_combination(states, coeff, cb);
      for (int j = 0; j < n; ++j) CHECK(ca[j] == cb[j]);
    }
  }
}

TEST_CASE("norms on a known vector") {
  const cvec u = {{3, 4}, {0, 0}, {1, 0}};  // |u| = 5, 0, 1
  CHECK(kernels::norm_l2_sq(u, 0.5) == doctest::Approx(13.0));
  CHECK(kernels::norm_l4_pow4(u, 0.5) == doctest::Approx(313.0));
  CHECK(kernels::norm_linf(u) == doctest::Approx(5.0));
}

TEST_CASE("all_finite flags nan and inf") {
  cvec u = {{1, 2}, {3, 4}};
  CHECK(kernels::all_finite(u));
  u[1] = cplx{std::nan(""), 0.0};
  CHECK(!kernels::all_finite(u));
  u[1] = cplx{0.0, INFINITY};
  CHECK(!kernels::all_finite(u));
}
