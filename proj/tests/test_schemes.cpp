#include <doctest.h>

#include <cmath>
#include <random>

#include "nls/schemes.hpp"

using namespace nls;

namespace {

cvec random_vec(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d(0.0, 1.0);
  cvec u(n);
  for (cplx& z : u) z = cplx{d(rng), d(rng)};
  return u;
}

}  // namespace

TEST_CASE("catalogue: beta weights of every scheme sum to one") {
  for (SchemeId id : all_schemes()) {
    const SchemeCoefficients c = scheme_catalogue(id);
    REQUIRE(static_cast<int>(c.beta_d.size()) == c.k);
    long long num = 0, den = 1;
    for (const Rational& r : c.beta) {
      num = num * r.den + r.num * den;
      den *= r.den;
    }
    CHECK(num == den);  // exact rational sum = 1
  }
}

TEST_CASE("catalogue names round-trip") {
  for (SchemeId id : all_schemes())
    CHECK(scheme_from_name(scheme_catalogue(id).name) == id);
  CHECK_THROWS_AS(scheme_from_name("nope"), std::invalid_argument);
}

TEST_CASE("mbdf beta equals partial sums of the bdf alpha table") {
  const SchemeId mbdf[] = {SchemeId::Mbdf2, SchemeId::Mbdf3, SchemeId::Mbdf4,
                           SchemeId::Mbdf5, SchemeId::Mbdf6};
  for (int s = 2; s <= 6; ++s) {
    const std::vector<Rational> alpha = bdf_alpha(s);
    std::vector<double> alpha_d;
    for (const Rational& r : alpha) alpha_d.push_back(r.value());
    const std::vector<double> beta = beta_from_alpha(alpha_d);
    const SchemeCoefficients c = scheme_catalogue(mbdf[s - 2]);
    REQUIRE(static_cast<int>(beta.size()) == c.k);
    for (int j = 0; j < c.k; ++j)
      CHECK(beta[j] == doctest::Approx(c.beta_d[j]).epsilon(1e-15));
  }
}

TEST_CASE("beta_from_alpha rejects a non-telescoping alpha") {
  const std::vector<double> alpha = {1.5, -2.0, 0.6};
  CHECK_THROWS_AS(beta_from_alpha(alpha), std::invalid_argument);
}

TEST_CASE("telescoping identity on random scalar sequences") {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> dist(0.0, 1.0);
  for (int s = 2; s <= 6; ++s) {
    const std::vector<Rational> alpha = bdf_alpha(s);
    std::vector<double> alpha_d;
    for (const Rational& r : alpha) alpha_d.push_back(r.value());
    const std::vector<double> beta = beta_from_alpha(alpha_d);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<cplx> u(s + 1);
      for (cplx& z : u) z = cplx{dist(rng), dist(rng)};
      // u[s] is u^n, u[s-1] is u^{n-1}, ...
      cplx lhs{0, 0}, Rn{0, 0}, Rm{0, 0};
      for (int l = 0; l <= s; ++l) lhs += alpha_d[l] * u[s - l];
      for (int j = 0; j < s; ++j) {
        Rn += beta[j] * u[s - j];
        Rm += beta[j] * u[s - 1 - j];
      }
      CHECK(std::abs(lhs - (Rn - Rm)) < 1e-13);
    }
  }
}

TEST_CASE("compose_R / recover_u round trip") {
  const Grid1D g = Grid1D::periodic(-1.0, 1.0, 32);
  for (SchemeId id : all_schemes()) {
    const SchemeCoefficients c = scheme_catalogue(id);
    UHistory full(c.k), partial(c.k);
    for (int j = 0; j < c.k; ++j) {
      ComplexState s(random_vec(32, 100 + j), 0.1 * j);
      if (j < c.k - 1) partial.push(s);
      full.push(std::move(s));
    }
    const ComplexState R = compose_R(full, c);
    CHECK(R.t == full.back().t);
    if (c.k == 1) {
      for (int j = 0; j < 32; ++j)
        CHECK(R.values[j] == full.back().values[j]);
      continue;
    }
    const ComplexState u = recover_u(R, partial, c);
    for (int j = 0; j < 32; ++j)
      CHECK(std::abs(u.values[j] - full.back().values[j]) < 1e-13);
  }
}

TEST_CASE("history evicts the oldest state at capacity") {
  UHistory h(2);
  h.push(ComplexState(cvec(4), 0.0));
  h.push(ComplexState(cvec(4), 1.0));
  h.push(ComplexState(cvec(4), 2.0));
  CHECK(h.size() == 2);
  CHECK(h.back(0).t == 2.0);
  CHECK(h.back(1).t == 1.0);
}

TEST_CASE("mass and energy on a constant state") {
  // Constant R = 2 on periodic grid: Lap R = 0, mass = |R|^2 (b-a).
  const Grid1D g = Grid1D::periodic(0.0, 1.0, 10);
  const ComplexState R(cvec(10, cplx{2.0, 0.0}), 0.0);
  CHECK(mass(R, g) == doctest::Approx(4.0));
  const Nonlinearity cub = Nonlinearity::cubic(-2.0);
  // H = 0 + (lambda/4) ||R||_4^4 = (-2/4) * 16 = -8
  CHECK(energy(R, g, cub) == doctest::Approx(-8.0));
  const Nonlinearity qui = Nonlinearity::quintic(-1.0);
  // H_g = lambda * h * sum F(4) = -1 * 64/3
  CHECK(energy(R, g, qui) == doctest::Approx(-64.0 / 3.0));
}

TEST_CASE("general energy of the p = 1 power family doubles the cubic form") {
  const Grid1D g = Grid1D::periodic(-5.0, 5.0, 64);
  const ComplexState R(random_vec(64, 42), 0.0);
  const double h_cubic = energy(R, g, Nonlinearity::cubic(-2.0));
  const double h_general = energy(R, g, Nonlinearity::power(-2.0, 1));
  CHECK(h_general == doctest::Approx(2.0 * h_cubic).epsilon(1e-12));
}
