#pragma once

#include <deque>
#include <span>
#include <string>
#include <vector>

#include "nls/grid.hpp"
#include "nls/nonlinearity.hpp"

namespace nls {

enum class SchemeId {
  CrankNicolson,
  Leapfrog,
  Mbdf2,
  Mbdf3,
  Mbdf4,
  Mbdf5,
  Mbdf6,
  FourStepSymmetric,
};

/// Exact fraction; the coefficient tables are rational and invariant checks
/// run at the rational level before the values are materialized to double.
struct Rational {
  long long num = 0;
  long long den = 1;
  double value() const { return static_cast<double>(num) / den; }
};

/// A catalogued scheme: step count k and the weights beta_0..beta_{k-1} of
/// the auxiliary combination R^n = sum_j beta_j u^{n-j}.
struct SchemeCoefficients {
  SchemeId id;
  std::string name;
  int k;
  std::vector<Rational> beta;
  std::vector<double> beta_d;  // beta materialized once
};

SchemeCoefficients scheme_catalogue(SchemeId id);
const std::vector<SchemeId>& all_schemes();
SchemeId scheme_from_name(const std::string& name);

/// Alpha coefficients of the s-step BDF difference formula, s in 2..6.
std::vector<Rational> bdf_alpha(int s);

/// beta_j = sum_{l<=j} alpha_l, the partial sums that rewrite an s-step BDF
/// combination as a first-order backward difference of R.
/// Requires sum(alpha) = 0 to 1e-13.
std::vector<double> beta_from_alpha(std::span<const double> alpha);

/// Ring buffer of the k most recent u-states, newest last.
class UHistory {
 public:
  explicit UHistory(int capacity) : capacity_(capacity) {}

  void push(ComplexState s) {
    states_.push_back(std::move(s));
    if (static_cast<int>(states_.size()) > capacity_) states_.pop_front();
  }

  /// u^{n-j}: newest state is j = 0.
  const ComplexState& back(int j = 0) const {
    return states_.at(states_.size() - 1 - j);
  }
  int size() const { return static_cast<int>(states_.size()); }
  int capacity() const { return capacity_; }

 private:
  int capacity_;
  std::deque<ComplexState> states_;
};

/// R^n = sum_{j=0}^{k-1} beta_j u^{n-j}; requires k states of history.
ComplexState compose_R(const UHistory& hist, const SchemeCoefficients& c);

/// u^{n+1} = beta_0^{-1} (R^{n+1} - sum_{j=1}^{k-1} beta_j u^{n+1-j});
/// requires k-1 states of history. Inverse of compose_R on the updated
/// history.
ComplexState recover_u(const ComplexState& R_next, const UHistory& hist,
                       const SchemeCoefficients& c);

/// Discrete mass of R: ||R||_l2^2.
double mass(const ComplexState& R, const Grid1D& g);

/// Conserved discrete energy. Cubic family: H = 1/2 <-Lap R, R> +
/// (lambda/4) ||R||_l4^4. Other families: H_g = <-Lap R, R> +
/// lambda h sum_j F(|R_j|^2).
double energy(const ComplexState& R, const Grid1D& g, const Nonlinearity& nl);

}  // namespace nls
