#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "ltlab/errors.hpp"

namespace ltlab {

struct JacobiOptions {
  double rel_offdiag_tol = 1e-12;  // stop when off(A) <= tol * ||A||_F
  int max_sweeps = 64;
};

// Eigenvalues of a dense symmetric matrix (row-major, n x n) by the cyclic
// Jacobi method with the classic small-rotation threshold: during the first
// sweeps rotations below a per-sweep threshold are skipped, and entries tiny
// relative to their diagonal pair are flushed to zero outright.  No
// eigenvectors are accumulated.  Returns the spectrum sorted descending.
inline std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n,
                                              const JacobiOptions& opt = {}) {
  if (a.size() != n * n) throw DomainError("jacobi_eigenvalues: matrix size mismatch");
  if (n == 0) return {};
  if (n == 1) return {a[0]};

  double norm = 0.0;
  for (double v : a) norm += v * v;
  norm = std::sqrt(norm);
  const double target = opt.rel_offdiag_tol * (norm > 0.0 ? norm : 1.0);

  auto off_norm = [&]() {
    double s = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) s += a[p * n + q] * a[p * n + q];
    return std::sqrt(2.0 * s);
  };

  for (int sweep = 0; sweep < opt.max_sweeps; ++sweep) {
    const double off = off_norm();
    if (off <= target) {
      std::vector<double> ev(n);
      for (std::size_t i = 0; i < n; ++i) ev[i] = a[i * n + i];
      std::sort(ev.begin(), ev.end(), std::greater<double>());
      return ev;
    }
    // skip rotations below this during the early sweeps (NR-style schedule)
    const double thresh = sweep < 3 ? 0.2 * off * off / (n * n * 2.0) : 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        const double g = 100.0 * std::fabs(apq);
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        // negligible relative to its diagonal pair: flush and move on
        if (sweep > 3 && std::fabs(app) + g == std::fabs(app) &&
            std::fabs(aqq) + g == std::fabs(aqq)) {
          a[p * n + q] = a[q * n + p] = 0.0;
          continue;
        }
        if (apq * apq <= thresh) continue;
        if (apq == 0.0) continue;

        const double theta = 0.5 * (aqq - app) / apq;
        double t;
        if (std::fabs(theta) > 1e7) {
          t = 0.5 / theta;
        } else {
          t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        a[p * n + p] = app - t * apq;
        a[q * n + q] = aqq + t * apq;
        a[p * n + q] = a[q * n + p] = 0.0;
        double* rowp = &a[p * n];
        double* rowq = &a[q * n];
        for (std::size_t j = 0; j < n; ++j) {
          if (j == p || j == q) continue;
          const double ajp = rowp[j];
          const double ajq = rowq[j];
          rowp[j] = c * ajp - s * ajq;
          rowq[j] = s * ajp + c * ajq;
        }
        // restore symmetry in the two touched columns
        for (std::size_t j = 0; j < n; ++j) {
          if (j == p || j == q) continue;
          a[j * n + p] = rowp[j];
          a[j * n + q] = rowq[j];
        }
      }
    }
  }
  throw ConvergenceError("jacobi_eigenvalues: sweep budget exhausted");
}

}  // namespace ltlab
