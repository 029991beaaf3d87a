#pragma once

#include <cmath>

#include "ltlab/errors.hpp"

namespace ltlab {

// Gamma function for positive real argument, Lanczos approximation (g = 7,
// nine coefficients).  Relative accuracy ~1e-14 on the range used here; the
// test suite pins it against closed forms and the standard-library gamma.
inline double gamma_function(double x) {
  if (!(x > 0.0)) throw DomainError("gamma_function requires x > 0");
  static const double g = 7.0;
  static const double c[9] = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  if (x < 0.5) {
    // reflection keeps the series argument >= 0.5
    return M_PI / (std::sin(M_PI * x) * gamma_function(1.0 - x));
  }
  const double z = x - 1.0;
  double a = c[0];
  for (int i = 1; i < 9; ++i) a += c[i] / (z + i);
  const double t = z + g + 0.5;
  return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

// log Gamma on x > 0 without overflow for large x.
inline double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma requires x > 0");
  if (x < 142.0) return std::log(gamma_function(x));
  return std::lgamma(x);
}

}  // namespace ltlab
