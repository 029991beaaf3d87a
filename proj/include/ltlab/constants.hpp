#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>

#include "ltlab/errors.hpp"
#include "ltlab/potential.hpp"
#include "ltlab/special_functions.hpp"

namespace ltlab {

enum class ConstantSource {
  Semiclassical,   // L^c, the phase-space value, valid as a bound only where known
  SharpKnown,      // proven sharp values
  Conjectured,     // conjectured sharp one-dimensional constant, 1/2 < gamma < 3/2
  UserSupplied,
};

inline const char* source_name(ConstantSource s) {
  switch (s) {
    case ConstantSource::Semiclassical: return "semiclassical";
    case ConstantSource::SharpKnown: return "sharp";
    case ConstantSource::Conjectured: return "conjectured";
    case ConstantSource::UserSupplied: return "user";
  }
  return "?";
}

inline std::optional<ConstantSource> source_from_name(const std::string& s) {
  if (s == "semiclassical") return ConstantSource::Semiclassical;
  if (s == "sharp") return ConstantSource::SharpKnown;
  if (s == "conjectured") return ConstantSource::Conjectured;
  if (s == "user") return ConstantSource::UserSupplied;
  return std::nullopt;
}

struct ConstantValue {
  double gamma = 0.0;
  int dim = 1;
  double value = 0.0;
  ConstantSource source = ConstantSource::Semiclassical;
};

// Semiclassical (phase-space) constant
//   L^c_{gamma,n} = 2^{-n} pi^{-n/2} Gamma(gamma+1) / Gamma(gamma+1+n/2).
// Finite for every gamma >= 0, independent of the validity range of the
// eigenvalue inequality itself.
inline ConstantValue semiclassical_constant(double gamma, int n) {
  if (!(gamma >= 0.0)) throw DomainError("semiclassical_constant needs gamma >= 0");
  if (n < 1) throw DomainError("dimension must be >= 1");
  const double value = std::pow(2.0, -n) * std::pow(M_PI, -0.5 * n) *
                       gamma_function(gamma + 1.0) / gamma_function(gamma + 1.0 + 0.5 * n);
  return ConstantValue{gamma, n, value, ConstantSource::Semiclassical};
}

// Conjectured sharp one-dimensional constant on the open interval
// 1/2 < gamma < 3/2:
//   L = (sqrt(pi) (gamma-1/2))^{-1} Gamma(gamma+1)/Gamma(gamma+1/2)
//       ((gamma-1/2)/(gamma+1/2))^{gamma+1/2}.
// Evaluated as exp((gamma-1/2) log(gamma-1/2)) / (gamma+1/2)^{gamma+1/2}
// after cancelling one power of (gamma-1/2), which is stable down to the
// left endpoint (limit 1/2; right endpoint limit 3/16).
inline ConstantValue conjectured_constant_1d(double gamma) {
  if (!(gamma > 0.5 && gamma < 1.5))
    throw DomainError("conjectured constant is defined for 1/2 < gamma < 3/2 only");
  const double g = gamma - 0.5;
  const double value = (1.0 / std::sqrt(M_PI)) *
                       (gamma_function(gamma + 1.0) / gamma_function(gamma + 0.5)) *
                       std::exp(g * std::log(g)) /
                       std::pow(gamma + 0.5, gamma + 0.5);
  return ConstantValue{gamma, 1, value, ConstantSource::Conjectured};
}

// Proven sharp values: L = L^c for gamma >= 3/2 (any n), and L_{1/2,1} = 1/2.
// Everything else is open and reported as absent.
inline std::optional<ConstantValue> known_sharp_constant(double gamma, int n) {
  if (!riesz_gamma_valid(gamma, n)) throw InvalidGammaError("(gamma, n) outside validity range");
  if (gamma >= 1.5) {
    ConstantValue c = semiclassical_constant(gamma, n);
    c.source = ConstantSource::SharpKnown;
    return c;
  }
  if (n == 1 && gamma == 0.5)
    return ConstantValue{0.5, 1, 0.5, ConstantSource::SharpKnown};
  return std::nullopt;
}

// Kinetic-energy constant dual to L_{1,n}:
//   K_n = n (2/L)^{2/n} (n+2)^{-1-2/n}.
// Doubling L divides K by 2^{2/n}.
inline double kinetic_constant(int n, const ConstantValue& L1n) {
  if (n < 1) throw DomainError("dimension must be >= 1");
  if (L1n.gamma != 1.0 || L1n.dim != n)
    throw DomainError("kinetic_constant needs a gamma = 1 constant of matching dimension");
  if (!(L1n.value > 0.0)) throw DomainError("constant must be positive");
  return n * std::pow(2.0 / L1n.value, 2.0 / n) * std::pow(n + 2.0, -1.0 - 2.0 / n);
}

// Sharp single-bound-state constant at gamma = 0 from the sharp Sobolev
// constant S_n (n >= 3):  L^1_{0,n} = S_n^{-n}.
inline double single_state_constant_from_sobolev(double Sn, int n) {
  if (n < 3) throw DomainError("the Sobolev relation needs dimension >= 3");
  if (!(Sn > 0.0)) throw DomainError("Sobolev constant must be positive");
  return std::pow(Sn, -static_cast<double>(n));
}

// Resolve a constant by source, for report generation.  SharpKnown returns
// nullopt where no sharp value is proven (reports then carry a NotApplicable
// verdict); use resolve_constant_strict to turn that into an error instead.
// UserSupplied requires a value.
inline std::optional<ConstantValue> resolve_constant(double gamma, int n, ConstantSource source,
                                                     std::optional<double> user_value = {}) {
  switch (source) {
    case ConstantSource::Semiclassical:
      return semiclassical_constant(gamma, n);
    case ConstantSource::SharpKnown:
      return known_sharp_constant(gamma, n);
    case ConstantSource::Conjectured:
      if (n != 1) throw DomainError("conjectured constant is one-dimensional");
      return conjectured_constant_1d(gamma);
    case ConstantSource::UserSupplied:
      if (!user_value || !(*user_value > 0.0))
        throw DomainError("user-supplied constant must be a positive number");
      return ConstantValue{gamma, n, *user_value, ConstantSource::UserSupplied};
  }
  return std::nullopt;
}

inline ConstantValue resolve_constant_strict(double gamma, int n, ConstantSource source,
                                             std::optional<double> user_value = {}) {
  const std::optional<ConstantValue> c = resolve_constant(gamma, n, source, user_value);
  if (!c) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "no sharp constant is known for gamma = %g, n = %d", gamma, n);
    throw MissingConstantError(buf);
  }
  return *c;
}

}  // namespace ltlab
