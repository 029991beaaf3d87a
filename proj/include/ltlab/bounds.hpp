#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ltlab/constants.hpp"
#include "ltlab/potential.hpp"
#include "ltlab/quadrature.hpp"
#include "ltlab/spectrum.hpp"

namespace ltlab {

enum class Verdict { Satisfied, Violated, NotApplicable };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Satisfied: return "satisfied";
    case Verdict::Violated: return "violated";
    case Verdict::NotApplicable: return "not_applicable";
  }
  return "?";
}

struct BoundCheckOptions {
  SpectrumOptions spectrum;
  double quadrature_tol = 1e-10;
  std::optional<double> user_constant;  // for ConstantSource::UserSupplied
};

// One evaluated instance of the Riesz-mean inequality.  The verdict compares
// lhs against rhs plus an explicit error budget, so "violated" can only come
// from the mathematics, not from discretization noise (for honest budgets).
struct BoundReport {
  std::string potential;
  double gamma = 0.0;
  int dim = 1;
  double lhs = 0.0;        // sum of |e_j|^gamma
  double rhs = 0.0;        // L * integral of V_-^{gamma + n/2}
  double ratio = 0.0;      // lhs / rhs (0 when rhs = 0)
  double constant = 0.0;
  ConstantSource source = ConstantSource::Semiclassical;
  Verdict verdict = Verdict::NotApplicable;
  double error_budget = 0.0;
  int states = 0;          // total multiplicity entering lhs
};

namespace detail {

// Absolute error budget for the verdict: bracket widths propagated through
// |e|^gamma (floored so gamma < 1 cannot blow up on near-zero eigenvalues),
// the Richardson estimate of the h^2 discretization bias of the Riesz mean,
// and the accumulated quadrature correction, all with generous factors.  A
// violation verdict has to clear this budget, so it can only come from the
// mathematics, not from the numerics.
inline double bound_error_budget(const SpectralResult& spec, double gamma, double constant,
                                 double discretization_error, double quad_error) {
  double lhs_err = discretization_error;
  for (const auto& e : spec.eigenvalues) {
    const double mag = std::max(std::fabs(e.value), 10.0 * spec.tolerance);
    const double deriv = gamma == 0.0 ? 0.0 : gamma * std::pow(mag, gamma - 1.0);
    lhs_err += e.multiplicity * deriv * spec.tolerance;
  }
  return 2.0 * lhs_err + 10.0 * constant * quad_error;
}

// Second-order scheme: solving again at half the grid and comparing Riesz
// means estimates the discretization error of the fine solve as diff / 3.
inline double riesz_discretization_error(const SpectralResult& fine,
                                         const SpectralResult& coarse, double gamma) {
  return std::fabs(riesz_mean(fine, gamma) - riesz_mean(coarse, gamma)) / 3.0;
}

inline SpectralResult coarse_spectrum(const Potential& V, const SpectrumOptions& opt) {
  SpectrumOptions half = opt;
  half.grid_points = std::max(16, opt.grid_points / 2);
  return negative_spectrum(V, half);
}

inline BoundReport report_from_parts(const Potential& V, const SpectralResult& spec,
                                     double gamma, const std::optional<ConstantValue>& L,
                                     double discretization_error, double quad_tol) {
  BoundReport rep;
  rep.potential = V.label();
  rep.gamma = gamma;
  rep.dim = V.dim();
  rep.lhs = riesz_mean(spec, gamma);
  rep.states = spec.total_multiplicity();
  if (!L) {
    rep.verdict = Verdict::NotApplicable;
    return rep;
  }
  const RhsIntegral integral = rhs_integral(V, gamma, V.dim(), quad_tol);
  rep.constant = L->value;
  rep.source = L->source;
  rep.rhs = L->value * integral.value;
  rep.ratio = rep.rhs > 0.0 ? rep.lhs / rep.rhs : 0.0;
  rep.error_budget =
      bound_error_budget(spec, gamma, L->value, discretization_error, integral.error_estimate);
  rep.verdict = rep.lhs <= rep.rhs + rep.error_budget ? Verdict::Satisfied : Verdict::Violated;
  return rep;
}

}  // namespace detail

// Evaluate the inequality sum |e_j|^gamma <= L integral V_-^{gamma+n/2} for
// one potential, one gamma, one choice of constant.
inline BoundReport bound_report(const Potential& V, double gamma, ConstantSource source,
                                const BoundCheckOptions& opt = {}) {
  require_valid_gamma(gamma, V.dim());
  const SpectralResult spec = negative_spectrum(V, opt.spectrum);
  const SpectralResult coarse = detail::coarse_spectrum(V, opt.spectrum);
  const std::optional<ConstantValue> L =
      resolve_constant(gamma, V.dim(), source, opt.user_constant);
  return detail::report_from_parts(V, spec, gamma, L,
                                   detail::riesz_discretization_error(spec, coarse, gamma),
                                   opt.quadrature_tol);
}

// Ratios of the Riesz mean to the (by default semiclassical) bound across a
// list of gammas, with the spectrum computed once: witness lower bounds for
// the ratio of the sharp constant to L^c.
inline std::vector<BoundReport> ratio_curve(const Potential& V,
                                            const std::vector<double>& gammas,
                                            ConstantSource source = ConstantSource::Semiclassical,
                                            const BoundCheckOptions& opt = {}) {
  const SpectralResult spec = negative_spectrum(V, opt.spectrum);
  const SpectralResult coarse = detail::coarse_spectrum(V, opt.spectrum);
  std::vector<BoundReport> out;
  out.reserve(gammas.size());
  for (double g : gammas) {
    require_valid_gamma(g, V.dim());
    const std::optional<ConstantValue> L = resolve_constant(g, V.dim(), source, opt.user_constant);
    out.push_back(detail::report_from_parts(V, spec, g, L,
                                            detail::riesz_discretization_error(spec, coarse, g),
                                            opt.quadrature_tol));
  }
  return out;
}

struct PhaseSpaceCheck {
  double lhs = 0.0;  // (2 pi)^{-n} volume of {(p,x): p^2 + V(x) < 0}, gamma-weighted
  double rhs = 0.0;  // L^c_{gamma,n} integral of V_-^{gamma+n/2}
};

// Independent evaluation of the phase-space identity
//   (2 pi)^{-n} int dx dp (p^2 + V(x))_-^gamma = L^c int dx V_-^{gamma+n/2}
// with the momentum integral done by quadrature rather than the closed form,
// so the two sides agree only if the semiclassical constant is right.  Valid
// for every gamma >= 0 regardless of the eigenvalue inequality's range.
inline PhaseSpaceCheck phase_space_check(const Potential& V, double gamma,
                                         double quad_tol = 1e-10) {
  if (!(gamma >= 0.0)) throw DomainError("phase_space_check needs gamma >= 0");
  const int n = V.dim();
  const double sphere = (n == 1) ? 2.0 : (n == 2 ? 2.0 * M_PI : 4.0 * M_PI);
  auto momentum_integral = [&](double x) {
    const double v = negative_part(V, x);
    if (v <= 0.0) return 0.0;
    const double pmax = std::sqrt(v);
    // clamp: rounding can push v - p^2 a hair below zero at p = pmax
    auto f = [&](double p) {
      return sphere * std::pow(p, n - 1) * std::pow(std::max(v - p * p, 0.0), gamma);
    };
    return integrate_adaptive(f, 0.0, pmax, quad_tol * 1e-2 * std::max(1.0, std::pow(v, gamma)))
        .value;
  };
  PhaseSpaceCheck out;
  const double R = V.truncation_radius();
  if (n == 1) {
    out.lhs = integrate_piecewise(momentum_integral, -R, R,
                                  detail::quadrature_breakpoints(V, true), quad_tol)
                  .value /
              (2.0 * M_PI);
  } else {
    auto radial = [&](double r) { return sphere * std::pow(r, n - 1) * momentum_integral(r); };
    out.lhs = integrate_piecewise(radial, 0.0, R, detail::quadrature_breakpoints(V, false),
                                  quad_tol)
                  .value /
              std::pow(2.0 * M_PI, n);
  }
  out.rhs = semiclassical_constant(gamma, n).value *
            vminus_power_integral(V, gamma + 0.5 * n, n, quad_tol).value;
  return out;
}

struct RatioMaximum {
  std::vector<double> params;
  double ratio = 0.0;       // |e_1|^gamma / integral of V_-^{gamma+n/2}
  double ground_state = 0.0;
};

struct ParameterBox {
  double lo = 0.0;
  double hi = 1.0;
};

// Maximize the single-bound-state ratio |e_1|^gamma / int V_-^{gamma+n/2}
// over a 1- or 2-parameter family: coarse uniform scan (33 points per axis,
// 17 when two-dimensional) followed by golden-section refinement along each
// axis.  Entirely deterministic for a given family and box.  Throws
// NoBoundStateError when no scanned parameter produces a negative eigenvalue.
inline RatioMaximum single_state_ratio_maximize(
    const std::function<Potential(const std::vector<double>&)>& family,
    const std::vector<ParameterBox>& box, double gamma,
    const BoundCheckOptions& opt = {}) {
  if (box.empty() || box.size() > 2)
    throw DomainError("single_state_ratio_maximize handles 1 or 2 parameters");
  for (const auto& b : box)
    if (!(b.hi > b.lo)) throw DomainError("parameter box must have hi > lo");

  double best_e1 = 0.0;
  auto objective = [&](const std::vector<double>& params) -> double {
    const Potential V = family(params);
    require_valid_gamma(gamma, V.dim());
    const SpectralResult spec = negative_spectrum(V, opt.spectrum);
    if (spec.eigenvalues.empty()) return -1.0;
    const double e1 = spec.eigenvalues.front().value;
    const double denom = vminus_power_integral(V, gamma + 0.5 * V.dim(), V.dim(),
                                               opt.quadrature_tol)
                             .value;
    if (!(denom > 0.0)) return -1.0;
    best_e1 = e1;
    return std::pow(std::fabs(e1), gamma) / denom;
  };

  const int scan = box.size() == 1 ? 33 : 17;
  std::vector<double> best;
  double best_val = -1.0;
  std::vector<double> p(box.size());
  for (int i = 0; i < scan; ++i) {
    p[0] = box[0].lo + (box[0].hi - box[0].lo) * i / (scan - 1);
    if (box.size() == 1) {
      const double v = objective(p);
      if (v > best_val) best_val = v, best = p;
    } else {
      for (int j = 0; j < scan; ++j) {
        p[1] = box[1].lo + (box[1].hi - box[1].lo) * j / (scan - 1);
        const double v = objective(p);
        if (v > best_val) best_val = v, best = p;
      }
    }
  }
  if (best_val < 0.0) throw NoBoundStateError("no parameter in the box yields a bound state");

  // golden-section around the best scan point, one pass per axis (two for 2d)
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  const int rounds = box.size() == 1 ? 1 : 2;
  for (int round = 0; round < rounds; ++round) {
    for (std::size_t axis = 0; axis < box.size(); ++axis) {
      const double step = (box[axis].hi - box[axis].lo) / (scan - 1);
      double a = std::max(box[axis].lo, best[axis] - step);
      double b = std::min(box[axis].hi, best[axis] + step);
      std::vector<double> q = best;
      double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
      q[axis] = x1;
      double f1 = objective(q);
      q[axis] = x2;
      double f2 = objective(q);
      for (int it = 0; it < 40 && b - a > 1e-10 * (box[axis].hi - box[axis].lo); ++it) {
        if (f1 < f2) {
          a = x1;
          x1 = x2;
          f1 = f2;
          x2 = a + gr * (b - a);
          q[axis] = x2;
          f2 = objective(q);
        } else {
          b = x2;
          x2 = x1;
          f2 = f1;
          x1 = b - gr * (b - a);
          q[axis] = x1;
          f1 = objective(q);
        }
      }
      q[axis] = 0.5 * (a + b);
      const double fm = objective(q);
      if (fm > best_val) best_val = fm, best = q;
    }
  }

  RatioMaximum out;
  out.params = best;
  out.ratio = objective(best);
  out.ground_state = best_e1;
  return out;
}

}  // namespace ltlab
