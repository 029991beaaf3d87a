#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "ltlab/errors.hpp"
#include "ltlab/quadrature.hpp"

namespace ltlab {

enum class PotentialFamily {
  SquareWell,
  PoschlTeller,
  GaussianWell,
  HarmonicTruncated,
  Scaled,
  Sum,
  Tabulated,
};

inline const char* family_name(PotentialFamily f) {
  switch (f) {
    case PotentialFamily::SquareWell: return "square_well";
    case PotentialFamily::PoschlTeller: return "poschl_teller";
    case PotentialFamily::GaussianWell: return "gaussian_well";
    case PotentialFamily::HarmonicTruncated: return "harmonic_truncated";
    case PotentialFamily::Scaled: return "scaled";
    case PotentialFamily::Sum: return "sum";
    case PotentialFamily::Tabulated: return "tabulated";
  }
  return "?";
}

// A potential V on R^n (n = 1, 2, 3), treated as exactly zero beyond its
// truncation radius.  For n >= 2 the potential must be radially symmetric and
// operator()(x) reads x as the radius.  Value type; Sum/Scaled own copies of
// their children.
class Potential {
 public:
  // V = -depth on |x| <= half_width, 0 outside.
  static Potential square_well(double depth, double half_width, int dim = 1,
                               double truncation_radius = 0.0) {
    require(depth > 0.0 && half_width > 0.0, "square_well needs depth > 0, half_width > 0");
    Potential p(PotentialFamily::SquareWell, dim);
    p.params_ = {depth, half_width};
    p.radius_ = pick_radius(truncation_radius, std::max(20.0, 4.0 * half_width));
    require(p.radius_ >= half_width, "truncation radius smaller than the well");
    p.kinks_ = {half_width};
    return p;
  }

  // V = -lambda (lambda + 1) sech^2 x; eigenvalues -(lambda - k)^2 in 1d.
  static Potential poschl_teller(double lambda, int dim = 1,
                                 double truncation_radius = 0.0) {
    require(lambda > 0.0, "poschl_teller needs lambda > 0");
    Potential p(PotentialFamily::PoschlTeller, dim);
    p.params_ = {lambda};
    p.radius_ = pick_radius(truncation_radius, 20.0);
    return p;
  }

  // V = -depth exp(-(x/width)^2).
  static Potential gaussian_well(double depth, double width, int dim = 1,
                                 double truncation_radius = 0.0) {
    require(depth > 0.0 && width > 0.0, "gaussian_well needs depth > 0, width > 0");
    Potential p(PotentialFamily::GaussianWell, dim);
    p.params_ = {depth, width};
    p.radius_ = pick_radius(truncation_radius, std::max(20.0, 8.0 * width));
    return p;
  }

  // V = (k/2)(x^2 - a^2) on |x| <= a, 0 outside.
  static Potential harmonic_truncated(double curvature, double half_width, int dim = 1,
                                      double truncation_radius = 0.0) {
    require(curvature > 0.0 && half_width > 0.0,
            "harmonic_truncated needs curvature > 0, half_width > 0");
    Potential p(PotentialFamily::HarmonicTruncated, dim);
    p.params_ = {curvature, half_width};
    p.radius_ = pick_radius(truncation_radius, std::max(20.0, 4.0 * half_width));
    require(p.radius_ >= half_width, "truncation radius smaller than the well");
    p.kinks_ = {half_width};
    return p;
  }

  // factor * inner, evaluated exactly as the product.
  static Potential scaled(double factor, Potential inner) {
    require(std::isfinite(factor), "scaled needs a finite factor");
    Potential p(PotentialFamily::Scaled, inner.dim());
    p.params_ = {factor};
    p.radius_ = inner.radius_;
    p.kinks_ = inner.kinks_;
    p.children_.push_back(std::move(inner));
    return p;
  }

  static Potential sum(std::vector<Potential> terms) {
    require(!terms.empty(), "sum needs at least one term");
    Potential p(PotentialFamily::Sum, terms.front().dim());
    p.radius_ = 0.0;
    for (const Potential& t : terms) {
      require(t.dim() == p.dim_, "sum terms must share the dimension");
      p.radius_ = std::max(p.radius_, t.radius_);
      p.kinks_.insert(p.kinks_.end(), t.kinks_.begin(), t.kinks_.end());
    }
    std::sort(p.kinks_.begin(), p.kinks_.end());
    p.kinks_.erase(std::unique(p.kinks_.begin(), p.kinks_.end()), p.kinks_.end());
    p.children_ = std::move(terms);
    return p;
  }

  // Piecewise-linear interpolation through (x_i, v_i); zero outside the table.
  // For dim >= 2 the abscissae are radii and must start at x >= 0.
  static Potential tabulated(std::vector<double> x, std::vector<double> v, int dim = 1,
                             double truncation_radius = 0.0) {
    require(x.size() >= 2 && x.size() == v.size(), "tabulated needs matching arrays, >= 2 points");
    for (std::size_t i = 1; i < x.size(); ++i)
      require(x[i] > x[i - 1], "tabulated abscissae must be strictly increasing");
    Potential p(PotentialFamily::Tabulated, dim);
    if (dim >= 2) require(x.front() >= 0.0, "radial table needs x >= 0");
    const double reach = std::max(std::fabs(x.front()), std::fabs(x.back()));
    p.radius_ = pick_radius(truncation_radius, std::max(20.0, 2.0 * reach));
    require(p.radius_ >= reach, "truncation radius smaller than the table");
    p.symmetric_table_ = x.front() >= 0.0;
    for (double xi : x) {
      const double r = std::fabs(xi);
      if (r > 0.0) p.kinks_.push_back(r);
    }
    if (!p.symmetric_table_) p.kinks_.push_back(0.0);
    std::sort(p.kinks_.begin(), p.kinks_.end());
    p.kinks_.erase(std::unique(p.kinks_.begin(), p.kinks_.end()), p.kinks_.end());
    p.table_x_ = std::move(x);
    p.table_v_ = std::move(v);
    return p;
  }

  double operator()(double x) const {
    if (std::fabs(x) > radius_) return 0.0;
    switch (family_) {
      case PotentialFamily::SquareWell:
        return std::fabs(x) <= params_[1] ? -params_[0] : 0.0;
      case PotentialFamily::PoschlTeller: {
        const double s = 1.0 / std::cosh(x);
        return -params_[0] * (params_[0] + 1.0) * s * s;
      }
      case PotentialFamily::GaussianWell: {
        const double u = x / params_[1];
        return -params_[0] * std::exp(-u * u);
      }
      case PotentialFamily::HarmonicTruncated: {
        const double a = params_[1];
        if (std::fabs(x) > a) return 0.0;
        return 0.5 * params_[0] * (x * x - a * a);
      }
      case PotentialFamily::Scaled:
        return params_[0] * children_[0](x);
      case PotentialFamily::Sum: {
        double s = 0.0;
        for (const Potential& t : children_) s += t(x);
        return s;
      }
      case PotentialFamily::Tabulated:
        return table_value(x);
    }
    return 0.0;
  }

  PotentialFamily family() const { return family_; }
  int dim() const { return dim_; }
  double truncation_radius() const { return radius_; }

  // Radius outside which V vanishes identically (<= truncation radius);
  // tight for compactly supported families, so quadrature and kernel grids
  // can concentrate on the region that matters.
  double support_radius() const {
    switch (family_) {
      case PotentialFamily::SquareWell:
      case PotentialFamily::HarmonicTruncated:
        return params_[1];
      case PotentialFamily::Tabulated:
        return std::min(radius_, std::max(std::fabs(table_x_.front()),
                                          std::fabs(table_x_.back())));
      case PotentialFamily::Scaled:
        return children_[0].support_radius();
      case PotentialFamily::Sum: {
        double s = 0.0;
        for (const Potential& t : children_) s = std::max(s, t.support_radius());
        return std::min(s, radius_);
      }
      default:
        return radius_;
    }
  }

  // True when V(-x) = V(x) by construction.  Required for dim >= 2.
  bool radial_symmetric() const {
    if (family_ == PotentialFamily::Tabulated) return symmetric_table_;
    if (family_ == PotentialFamily::Scaled) return children_[0].radial_symmetric();
    if (family_ == PotentialFamily::Sum) {
      for (const Potential& t : children_)
        if (!t.radial_symmetric()) return false;
      return true;
    }
    return true;
  }

  // Radii (>= 0) where V has a kink or jump, the truncation edge excluded.
  const std::vector<double>& kinks() const { return kinks_; }

  const std::vector<double>& params() const { return params_; }
  const std::vector<Potential>& children() const { return children_; }
  const std::vector<double>& table_x() const { return table_x_; }
  const std::vector<double>& table_v() const { return table_v_; }

  const std::string& label() const { return label_.empty() ? default_label() : label_; }
  void set_label(std::string label) { label_ = std::move(label); }

 private:
  Potential(PotentialFamily f, int dim) : family_(f), dim_(dim) {
    require(dim >= 1 && dim <= 3, "dimension must be 1, 2, or 3");
  }

  static void require(bool ok, const char* what) {
    if (!ok) throw DomainError(what);
  }

  static double pick_radius(double requested, double fallback) {
    if (requested == 0.0) return fallback;
    if (!(requested > 0.0) || !std::isfinite(requested))
      throw DomainError("truncation radius must be positive and finite");
    return requested;
  }

  double table_value(double x) const {
    if (symmetric_table_) x = std::fabs(x);
    if (x < table_x_.front() || x > table_x_.back()) return 0.0;
    const auto it = std::upper_bound(table_x_.begin(), table_x_.end(), x);
    if (it == table_x_.begin()) return table_v_.front();
    if (it == table_x_.end()) return table_v_.back();
    const std::size_t j = static_cast<std::size_t>(it - table_x_.begin());
    const double t = (x - table_x_[j - 1]) / (table_x_[j] - table_x_[j - 1]);
    return table_v_[j - 1] + t * (table_v_[j] - table_v_[j - 1]);
  }

  const std::string& default_label() const {
    if (cached_label_.empty()) {
      char buf[160];
      switch (family_) {
        case PotentialFamily::SquareWell:
          std::snprintf(buf, sizeof buf, "square_well(%g,%g)", params_[0], params_[1]);
          break;
        case PotentialFamily::PoschlTeller:
          std::snprintf(buf, sizeof buf, "poschl_teller(%g)", params_[0]);
          break;
        case PotentialFamily::GaussianWell:
          std::snprintf(buf, sizeof buf, "gaussian_well(%g,%g)", params_[0], params_[1]);
          break;
        case PotentialFamily::HarmonicTruncated:
          std::snprintf(buf, sizeof buf, "harmonic_truncated(%g,%g)", params_[0], params_[1]);
          break;
        case PotentialFamily::Scaled:
          std::snprintf(buf, sizeof buf, "%g*%s", params_[0], children_[0].label().c_str());
          break;
        case PotentialFamily::Sum:
          std::snprintf(buf, sizeof buf, "sum(%zu terms)", children_.size());
          break;
        case PotentialFamily::Tabulated:
          std::snprintf(buf, sizeof buf, "tabulated(%zu pts)", table_x_.size());
          break;
      }
      cached_label_ = buf;
    }
    return cached_label_;
  }

  PotentialFamily family_;
  int dim_;
  double radius_ = 0.0;
  bool symmetric_table_ = true;
  std::vector<double> params_;
  std::vector<Potential> children_;
  std::vector<double> table_x_, table_v_;
  std::vector<double> kinks_;
  std::string label_;
  mutable std::string cached_label_;
};

inline double negative_part(const Potential& V, double x) {
  const double v = V(x);
  return v < 0.0 ? -v : 0.0;
}

inline Potential scale(double factor, const Potential& V) {
  return Potential::scaled(factor, V);
}

// Validity range of the Riesz-mean inequality: gamma >= 1/2 in one dimension,
// gamma > 0 in two, gamma >= 0 in three and higher.
inline bool riesz_gamma_valid(double gamma, int n) {
  if (!(gamma >= 0.0) || n < 1) return false;
  if (n == 1) return gamma >= 0.5;
  if (n == 2) return gamma > 0.0;
  return true;
}

inline void require_valid_gamma(double gamma, int n) {
  if (!riesz_gamma_valid(gamma, n)) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "gamma = %g is outside the valid range for dimension %d",
                  gamma, n);
    throw InvalidGammaError(buf);
  }
}

namespace detail {

// Breakpoints for integrals over [0, R] (or [-R, R] when mirror = true).
inline std::vector<double> quadrature_breakpoints(const Potential& V, bool mirror) {
  std::vector<double> pts;
  for (double k : V.kinks()) {
    pts.push_back(k);
    if (mirror && k > 0.0) pts.push_back(-k);
  }
  if (mirror) pts.push_back(0.0);
  return pts;
}

}  // namespace detail

// integral over R^n of V_-(x)^p, radial measure for n >= 2.  No validity
// gating on p beyond p >= 0; see rhs_integral for the inequality-facing entry.
inline QuadratureResult vminus_power_integral(const Potential& V, double p, int n,
                                              double abs_tol = 1e-10) {
  if (!(p >= 0.0)) throw DomainError("vminus_power_integral needs p >= 0");
  if (n < 1 || n > 3) throw DomainError("dimension must be 1, 2, or 3");
  if (n >= 2 && !V.radial_symmetric())
    throw DomainError("dimension >= 2 requires a radially symmetric potential");
  const double R = V.truncation_radius();
  auto power = [&](double x) {
    const double v = negative_part(V, x);
    return v > 0.0 ? std::pow(v, p) : 0.0;
  };
  if (n == 1)
    return integrate_piecewise(power, -R, R, detail::quadrature_breakpoints(V, true), abs_tol);
  const double area = (n == 2) ? 2.0 * M_PI : 4.0 * M_PI;
  auto radial = [&](double r) { return area * std::pow(r, n - 1) * power(r); };
  return integrate_piecewise(radial, 0.0, R, detail::quadrature_breakpoints(V, false), abs_tol);
}

struct RhsIntegral {
  double gamma = 0.0;
  int dim = 1;
  double value = 0.0;         // integral of V_-^{gamma + n/2}
  double error_estimate = 0.0;
};

// Right-hand-side integral of the Riesz-mean inequality.  Throws
// InvalidGammaError outside the validity range for the dimension.
inline RhsIntegral rhs_integral(const Potential& V, double gamma, int n,
                                double abs_tol = 1e-10) {
  require_valid_gamma(gamma, n);
  const QuadratureResult q = vminus_power_integral(V, gamma + 0.5 * n, n, abs_tol);
  return RhsIntegral{gamma, n, q.value, q.error_estimate};
}

}  // namespace ltlab
