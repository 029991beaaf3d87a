#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "ltlab/errors.hpp"
#include "ltlab/jacobi.hpp"
#include "ltlab/potential.hpp"

namespace ltlab {

// Free resolvent kernel of -d^2/dx^2 at energy -E on the line:
//   G_E(x, y) = exp(-sqrt(E) |x - y|) / (2 sqrt(E)).
inline double green_kernel_1d(double E, double x, double y) {
  if (!(E > 0.0)) throw DomainError("green_kernel_1d needs E > 0");
  const double k = std::sqrt(E);
  return std::exp(-k * std::fabs(x - y)) / (2.0 * k);
}

// Symmetrized Birman-Schwinger kernel, midpoint Nystroem discretization:
//   M_ij = sqrt(w V_-(x_i)) G_E(x_i, x_j) sqrt(V_-(x_j) w),
// nodes at the midpoints of a uniform grid covering the support of V_-.
// The operator e -> number of kernel eigenvalues above 1 reproduces the
// counting function of -d^2/dx^2 + V at energy -E.
struct KernelMatrix {
  std::vector<double> entries;  // row-major, size n*n
  std::vector<double> nodes;
  double weight = 0.0;          // uniform quadrature weight h
  double energy = 0.0;
  std::size_t n = 0;

  double& at(std::size_t i, std::size_t j) { return entries[i * n + j]; }
  double at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
};

inline KernelMatrix build_bs_matrix(const Potential& V, double E, int grid_points = 800) {
  if (V.dim() != 1) throw DomainError("the Birman-Schwinger module is one-dimensional");
  if (!(E > 0.0)) throw DomainError("build_bs_matrix needs E > 0");
  if (grid_points < 16) throw DomainError("grid_points must be at least 16");
  const double S = V.support_radius();
  const std::size_t N = static_cast<std::size_t>(grid_points);
  KernelMatrix K;
  K.energy = E;
  K.n = N;
  K.weight = 2.0 * S / grid_points;
  K.nodes.resize(N);
  std::vector<double> sq(N);
  for (std::size_t i = 0; i < N; ++i) {
    K.nodes[i] = -S + (i + 0.5) * K.weight;
    sq[i] = std::sqrt(negative_part(V, K.nodes[i]) * K.weight);
  }
  K.entries.resize(N * N);
  const double k = std::sqrt(E);
  const double half = 0.5 / k;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = i; j < N; ++j) {
      // |x_i - x_j| = (j - i) h on the uniform grid
      const double g = half * std::exp(-k * K.weight * (j - i));
      const double v = sq[i] * g * sq[j];
      K.entries[i * N + j] = v;
      K.entries[j * N + i] = v;
    }
  }
  return K;
}

// Full spectrum of the discretized kernel, descending.
inline std::vector<double> bs_eigenvalues(const KernelMatrix& K, const JacobiOptions& opt = {}) {
  return jacobi_eigenvalues(K.entries, K.n, opt);
}

// Counting function via the Birman-Schwinger principle: the number of
// eigenvalues of -u'' + V below -E equals the number of kernel eigenvalues
// exceeding 1.  Independent of the finite-difference route.
inline int counting_via_bs(const Potential& V, double E, int grid_points = 800,
                           const JacobiOptions& opt = {}) {
  const std::vector<double> mu = bs_eigenvalues(build_bs_matrix(V, E, grid_points), opt);
  int count = 0;
  for (double m : mu) {
    if (m > 1.0)
      ++count;
    else
      break;  // sorted descending
  }
  return count;
}

// Geometric energy ladder with `points` rungs covering [lo, hi].
inline std::vector<double> geometric_ladder(double lo, double hi, int points = 16) {
  if (!(lo > 0.0) || !(hi > lo)) throw DomainError("geometric_ladder needs 0 < lo < hi");
  if (points < 2) throw DomainError("geometric_ladder needs at least 2 points");
  std::vector<double> E(points);
  const double step = std::log(hi / lo) / (points - 1);
  for (int i = 0; i < points; ++i) E[i] = lo * std::exp(i * step);
  return E;
}

}  // namespace ltlab
