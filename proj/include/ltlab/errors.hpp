#pragma once

#include <stdexcept>
#include <string>

namespace ltlab {

// Base for everything thrown by this library, so callers can catch one type.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside the documented domain (negative energy, bad dimension, ...).
struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(what) {}
};

// (gamma, n) pair outside the validity range of the Lieb-Thirring inequality:
// gamma >= 1/2 for n = 1, gamma > 0 for n = 2, gamma >= 0 for n >= 3.
struct InvalidGammaError : DomainError {
  explicit InvalidGammaError(const std::string& what) : DomainError(what) {}
};

// Quadrature met a non-finite integrand value or could not converge.
struct NonIntegrableError : Error {
  explicit NonIntegrableError(const std::string& what) : Error(what) {}
};

// Iterative eigensolver failed to reach its target within the sweep budget.
struct ConvergenceError : Error {
  explicit ConvergenceError(const std::string& what) : Error(what) {}
};

// Gram matrix of a raw family is numerically singular.
struct RankDeficientError : Error {
  explicit RankDeficientError(const std::string& what) : Error(what) {}
};

// Requested Slater-determinant grid would exceed the documented memory bound.
struct GridTooLargeError : Error {
  explicit GridTooLargeError(const std::string& what) : Error(what) {}
};

// Sobolev quotient of the zero function is undefined.
struct ZeroFunctionError : Error {
  explicit ZeroFunctionError(const std::string& what) : Error(what) {}
};

// Parameter search never produced a potential with a bound state.
struct NoBoundStateError : Error {
  explicit NoBoundStateError(const std::string& what) : Error(what) {}
};

// Requested a sharp constant where none is proven.
struct MissingConstantError : Error {
  explicit MissingConstantError(const std::string& what) : Error(what) {}
};

// Configuration file failed validation.
struct ConfigError : Error {
  explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace ltlab
