#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nls {

enum class Family { Cubic, Quintic, Power };

/// Nonlinear coupling lambda * f(|u|^2) u with f(s) = s^p.
/// F is the antiderivative of f with F(0) = 0, and
/// G(a,b) = (F(a) - F(b)) / (a - b) is the symmetric difference quotient
/// driving the conservative update (G(a,a) = f(a)).
struct Nonlinearity {
  double lambda;
  Family family;
  int p;  // exponent of f(s) = s^p; 1 for Cubic, 2 for Quintic

  static Nonlinearity cubic(double lambda) { return {lambda, Family::Cubic, 1}; }
  static Nonlinearity quintic(double lambda) { return {lambda, Family::Quintic, 2}; }
  static Nonlinearity power(double lambda, int p) {
    if (p < 1) throw std::invalid_argument("Nonlinearity: p must be >= 1");
    return {lambda, Family::Power, p};
  }

  double f(double s) const {
    switch (family) {
      case Family::Cubic: return s;
      case Family::Quintic: return s * s;
      case Family::Power: return std::pow(s, p);
    }
    return 0.0;
  }

  double F(double s) const {
    switch (family) {
      case Family::Cubic: return 0.5 * s * s;
      case Family::Quintic: return s * s * s / 3.0;
      case Family::Power: return std::pow(s, p + 1) / (p + 1);
    }
    return 0.0;
  }

  /// G(a,b) for a,b >= 0, with the removable singularity at a == b
  /// handled via f((a+b)/2) when |a-b| <= 1e-12 * max(1,a,b).
  double G(double a, double b) const {
    if (a < 0.0 || b < 0.0)
      throw std::invalid_argument("Nonlinearity::G: negative argument");
    switch (family) {
      case Family::Cubic:
        return 0.5 * (a + b);
      case Family::Quintic:
        return (a * a + a * b + b * b) / 3.0;
      case Family::Power: {
        if (std::abs(a - b) <= 1e-12 * std::max({1.0, a, b}))
          return f(0.5 * (a + b));
        // (sum_{j=0}^{p} a^{p-j} b^j) / (p+1)
        double sum = 0.0;
        for (int j = 0; j <= p; ++j)
          sum += std::pow(a, p - j) * std::pow(b, j);
        return sum / (p + 1);
      }
    }
    return 0.0;
  }
};

}  // namespace nls
