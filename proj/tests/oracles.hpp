#pragma once

// Analytic oracles used by the suite, independent of the library's own
// numerics: exactly solvable spectra, transcendental equations solved by
// high-iteration bisection, and a handful of frozen reference values that
// were computed offline with an independent stack.

#include <cmath>
#include <functional>
#include <vector>

namespace oracles {

inline double bisect(const std::function<double(double)>& f, double a, double b,
                     int iterations = 200) {
  double fa = f(a);
  for (int i = 0; i < iterations; ++i) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if ((fa < 0.0) == (fm < 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

// Poschl-Teller V = -lambda(lambda+1) sech^2 x: e_k = -(lambda - k)^2 for
// integer k >= 0 with k < lambda.  Ascending (deepest first).
inline std::vector<double> poschl_teller_levels(double lambda) {
  std::vector<double> e;
  for (int k = 0; k < lambda; ++k) e.push_back(-(lambda - k) * (lambda - k));
  return e;
}

// 1-d square well of depth V0 > 0 and half-width a: with k^2 + kappa^2 = V0,
// even states solve k tan(ka) = kappa on ka in (j pi, j pi + pi/2) and odd
// states solve -k cot(ka) = kappa on ka in (j pi + pi/2, (j+1) pi).
// Returns eigenvalues e = k^2 - V0, ascending.
inline std::vector<double> square_well_levels_1d(double V0, double a) {
  const double kmax = std::sqrt(V0);
  std::vector<double> ks;
  const double eps = 1e-13;
  for (int j = 0;; ++j) {
    const double even_lo = j * M_PI / a;
    const double even_hi = (j + 0.5) * M_PI / a;
    if (even_lo >= kmax) break;
    {
      const double lo = even_lo + eps * (j == 0 ? 1.0 : even_lo);
      const double hi = std::min(even_hi * (1.0 - 1e-14), kmax);
      auto f = [&](double k) { return k * std::tan(k * a) - std::sqrt(std::max(V0 - k * k, 0.0)); };
      if (lo < hi && f(lo) < 0.0 && f(hi) > 0.0) ks.push_back(bisect(f, lo, hi));
      else if (lo < hi && f(hi) >= 0.0 && f(lo) < 0.0) ks.push_back(bisect(f, lo, hi));
    }
    const double odd_lo = (j + 0.5) * M_PI / a;
    const double odd_hi = (j + 1.0) * M_PI / a;
    if (odd_lo >= kmax) break;
    {
      const double lo = odd_lo * (1.0 + 1e-14);
      const double hi = std::min(odd_hi * (1.0 - 1e-14), kmax);
      auto f = [&](double k) {
        return -k / std::tan(k * a) - std::sqrt(std::max(V0 - k * k, 0.0));
      };
      if (lo < hi && f(lo) < 0.0 && f(hi) > 0.0) ks.push_back(bisect(f, lo, hi));
    }
  }
  std::vector<double> e;
  for (double k : ks) e.push_back(k * k - V0);
  return e;  // k ascending means e ascending
}

// 3-d s-wave levels of the radial square well: k cot(ka) = -kappa on
// ka in (j pi + pi/2, (j+1) pi).  Ascending eigenvalues.
inline std::vector<double> square_well_s_levels_3d(double V0, double a) {
  const double kmax = std::sqrt(V0);
  std::vector<double> e;
  for (int j = 0;; ++j) {
    const double lo = ((j + 0.5) * M_PI / a) * (1.0 + 1e-14);
    const double hi = std::min(((j + 1.0) * M_PI / a) * (1.0 - 1e-14), kmax);
    if (lo >= kmax) break;
    auto f = [&](double k) {
      return k / std::tan(k * a) + std::sqrt(std::max(V0 - k * k, 0.0));
    };
    if (lo < hi && f(lo) > 0.0 && f(hi) < 0.0)
      e.push_back(bisect([&](double k) { return -f(k); }, lo, hi));
  }
  for (double& k : e) k = k * k - V0;
  return e;
}

// Frozen reference values (independent computation, high-accuracy):
// ground state of the 1-d square well V0 = 100, a = 0.01 (near-delta witness)
inline constexpr double kDeltaWellE1 = -0.9868677666575962;
// 1-d square well V0 = 4, a = 1.5: both levels
inline constexpr double kSW4_15_E1 = -3.391474205495534;
inline constexpr double kSW4_15_E2 = -1.6919044340061076;
// 3-d square well V0 = 3, a = 2: s-wave ground state
inline constexpr double kSW3_2_SwaveE1 = -1.5803420528812464;
// 2-d square well V0 = 100, a = 1: m = 0 ground state (Bessel matching)
inline constexpr double k2dDeepWellE1 = -95.22787755663867;
// 3-d square well V0 = 100, a = 1: total number of bound states (all ells)
inline constexpr int kDeepWell3dCount = 69;

// exact integrals of the sech family: int sech^4 = 4/3, int sech^3 = pi/2
inline constexpr double kSech4Integral = 4.0 / 3.0;
inline const double kSech3Integral = M_PI / 2.0;

}  // namespace oracles
