#include "nls/schemes.hpp"

#include <cmath>
#include <stdexcept>

#include "nls/kernels.hpp"

namespace nls {

namespace {

SchemeCoefficients make(SchemeId id, std::string name,
                        std::vector<Rational> beta) {
  SchemeCoefficients c;
  c.id = id;
  c.name = std::move(name);
  c.k = static_cast<int>(beta.size());
  c.beta = std::move(beta);
  c.beta_d.reserve(c.beta.size());
  for (const Rational& r : c.beta) c.beta_d.push_back(r.value());
  return c;
}

}  // namespace

std::vector<Rational> bdf_alpha(int s) {
  switch (s) {
    case 2: return {{3, 2}, {-2, 1}, {1, 2}};
    case 3: return {{11, 6}, {-3, 1}, {3, 2}, {-1, 3}};
    case 4: return {{25, 12}, {-4, 1}, {3, 1}, {-4, 3}, {1, 4}};
    case 5: return {{137, 60}, {-5, 1}, {5, 1}, {-10, 3}, {5, 4}, {-1, 5}};
    case 6:
      return {{147, 60}, {-6, 1}, {15, 2}, {-20, 3}, {15, 4}, {-6, 5}, {1, 6}};
    default:
      throw std::invalid_argument("bdf_alpha: s must be in 2..6");
  }
}

std::vector<double> beta_from_alpha(std::span<const double> alpha) {
  double total = 0.0;
  for (double a : alpha) total += a;
  if (std::abs(total) > 1e-13)
    throw std::invalid_argument("beta_from_alpha: alpha does not sum to zero");
  // With sum(alpha) = 0 the last partial sum vanishes, so the s-step
  // combination sum_l alpha_l u^{n-l} telescopes to R^n - R^{n-1} with
  // beta_j = sum_{l<=j} alpha_l, j = 0..s-1.
  std::vector<double> beta(alpha.size() - 1);
  double run = 0.0;
  for (std::size_t j = 0; j + 1 < alpha.size(); ++j) {
    run += alpha[j];
    beta[j] = run;
  }
  return beta;
}

SchemeCoefficients scheme_catalogue(SchemeId id) {
  switch (id) {
    case SchemeId::CrankNicolson:
      return make(id, "cn", {{1, 1}});
    case SchemeId::Leapfrog:
      return make(id, "leapfrog", {{1, 2}, {1, 2}});
    case SchemeId::Mbdf2:
      return make(id, "mbdf2", {{3, 2}, {-1, 2}});
    case SchemeId::Mbdf3:
      return make(id, "mbdf3", {{11, 6}, {-7, 6}, {1, 3}});
    case SchemeId::Mbdf4:
      return make(id, "mbdf4", {{25, 12}, {-23, 12}, {13, 12}, {-1, 4}});
    case SchemeId::Mbdf5:
      return make(id, "mbdf5",
                  {{137, 60}, {-163, 60}, {137, 60}, {-21, 20}, {1, 5}});
    case SchemeId::Mbdf6:
      return make(id, "mbdf6", {{147, 60},
                                {-213, 60},
                                {237, 60},
                                {-163, 60},
                                {31, 30},
                                {-1, 6}});
    case SchemeId::FourStepSymmetric:
      return make(id, "4ss", {{-1, 12}, {7, 12}, {7, 12}, {-1, 12}});
  }
  throw std::invalid_argument("scheme_catalogue: unknown scheme");
}

const std::vector<SchemeId>& all_schemes() {
  static const std::vector<SchemeId> ids = {
      SchemeId::CrankNicolson, SchemeId::Leapfrog, SchemeId::Mbdf2,
      SchemeId::Mbdf3,         SchemeId::Mbdf4,    SchemeId::Mbdf5,
      SchemeId::Mbdf6,         SchemeId::FourStepSymmetric};
  return ids;
}

SchemeId scheme_from_name(const std::string& name) {
  for (SchemeId id : all_schemes())
    if (scheme_catalogue(id).name == name) return id;
  throw std::invalid_argument("unknown scheme name: " + name);
}

ComplexState compose_R(const UHistory& hist, const SchemeCoefficients& c) {
  if (hist.size() < c.k)
    throw std::invalid_argument("compose_R: insufficient history");
  std::vector<std::span<const cplx>> states(c.k);
  for (int j = 0; j < c.k; ++j) states[j] = hist.back(j).values;
  ComplexState R(cvec(states[0].size()), hist.back(0).t);
  kernels::linear_combination(states, c.beta_d, R.values);
  return R;
}

ComplexState recover_u(const ComplexState& R_next, const UHistory& hist,
                       const SchemeCoefficients& c) {
  if (hist.size() < c.k - 1)
    throw std::invalid_argument("recover_u: insufficient history");
  std::vector<std::span<const cplx>> states;
  std::vector<double> coeff;
  states.reserve(c.k);
  coeff.reserve(c.k);
  const double inv_b0 = 1.0 / c.beta_d[0];
  states.push_back(R_next.values);
  coeff.push_back(inv_b0);
  for (int j = 1; j < c.k; ++j) {
    states.push_back(hist.back(j - 1).values);
    coeff.push_back(-inv_b0 * c.beta_d[j]);
  }
  ComplexState u(cvec(R_next.size()), R_next.t);
  kernels::linear_combination(states, coeff, u.values);
  return u;
}

double mass(const ComplexState& R, const Grid1D& g) {
  return kernels::norm_l2_sq(R.values, g.h);
}

double energy(const ComplexState& R, const Grid1D& g, const Nonlinearity& nl) {
  cvec lap(R.size());
  kernels::apply_laplacian(R.values, g, lap);
  const double kinetic = -kernels::inner_product(lap, R.values, g.h).real();
  if (nl.family == Family::Cubic)
    return 0.5 * kinetic +
           0.25 * nl.lambda * kernels::norm_l4_pow4(R.values, g.h);
  double pot = 0.0;
  for (const cplx& z : R.values) pot += nl.F(std::norm(z));
  return kinetic + nl.lambda * g.h * pot;
}

}  // namespace nls
