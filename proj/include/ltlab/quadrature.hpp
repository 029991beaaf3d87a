#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "ltlab/errors.hpp"

namespace ltlab {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // accumulated |Richardson correction|
  long evaluations = 0;
};

namespace detail {

// One adaptive step: Simpson on [a,b] vs the two halves, Richardson
// correction (S2 - S1)/15.  Depth-limited; on hitting the depth limit the
// remaining discrepancy is charged to the error estimate instead of looping.
// The first `force` levels subdivide unconditionally: a narrow bump between
// the initial nodes would otherwise fake convergence onto zero.
template <class F>
void simpson_recurse(F& f, double a, double b, double fa, double fm, double fb,
                     double whole, double tol, int depth, int force, QuadratureResult& out) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  out.evaluations += 2;
  if (!std::isfinite(flm) || !std::isfinite(frm))
    throw NonIntegrableError("integrand is not finite inside the interval");
  const double h6 = (b - a) / 12.0;
  const double left = h6 * (fa + 4.0 * flm + fm);
  const double right = h6 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || (force <= 0 && std::fabs(delta) <= 15.0 * tol)) {
    out.value += left + right + delta / 15.0;
    out.error_estimate += std::fabs(delta) / 15.0;
    return;
  }
  simpson_recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, force - 1, out);
  simpson_recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, force - 1, out);
}

}  // namespace detail

// Adaptive Simpson with an absolute tolerance.  Degenerate intervals give 0.
template <class F>
QuadratureResult integrate_adaptive(F&& f, double a, double b,
                                    double abs_tol = 1e-10, int max_depth = 48) {
  QuadratureResult out;
  if (!(std::isfinite(a) && std::isfinite(b)))
    throw DomainError("integration endpoints must be finite");
  if (a == b) return out;
  double sign = 1.0;
  if (a > b) {
    std::swap(a, b);
    sign = -1.0;
  }
  const double fa = f(a);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  const double fb = f(b);
  out.evaluations = 3;
  if (!std::isfinite(fa) || !std::isfinite(fm) || !std::isfinite(fb))
    throw NonIntegrableError("integrand is not finite at an initial node");
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  detail::simpson_recurse(f, a, b, fa, fm, fb, whole, abs_tol, max_depth, 6, out);
  out.value *= sign;
  return out;
}

// Same integral but with forced subdivision at interior breakpoints (kinks,
// jump points).  Points outside (a,b) are ignored; the tolerance is split
// across the pieces in proportion to their length.
template <class F>
QuadratureResult integrate_piecewise(F&& f, double a, double b,
                                     std::vector<double> breakpoints,
                                     double abs_tol = 1e-10, int max_depth = 48) {
  if (a > b) {
    QuadratureResult r = integrate_piecewise(std::forward<F>(f), b, a,
                                             std::move(breakpoints), abs_tol, max_depth);
    r.value = -r.value;
    return r;
  }
  std::vector<double> cuts;
  cuts.push_back(a);
  std::sort(breakpoints.begin(), breakpoints.end());
  for (double p : breakpoints)
    if (p > a && p < b && (cuts.empty() || p > cuts.back())) cuts.push_back(p);
  cuts.push_back(b);

  QuadratureResult total;
  const double span = b - a;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double len = cuts[i + 1] - cuts[i];
    if (len <= 0.0) continue;
    const double piece_tol = std::max(abs_tol * len / span, 1e-3 * abs_tol);
    QuadratureResult r = integrate_adaptive(f, cuts[i], cuts[i + 1], piece_tol, max_depth);
    total.value += r.value;
    total.error_estimate += r.error_estimate;
    total.evaluations += r.evaluations;
  }
  return total;
}

}  // namespace ltlab
