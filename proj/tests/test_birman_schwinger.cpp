#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "ltlab/birman_schwinger.hpp"
#include "ltlab/spectrum.hpp"
#include "oracles.hpp"

using namespace ltlab;

TEST_CASE("free resolvent kernel values") {
  CHECK(green_kernel_1d(1.0, 0.3, 0.3) == Catch::Approx(0.5).epsilon(1e-15));
  CHECK(green_kernel_1d(4.0, 1.0, 0.0) == Catch::Approx(std::exp(-2.0) / 4.0).epsilon(1e-15));
  CHECK(green_kernel_1d(2.0, -1.0, 2.0) == green_kernel_1d(2.0, 2.0, -1.0));
  CHECK_THROWS_AS(green_kernel_1d(0.0, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(green_kernel_1d(-1.0, 0.0, 1.0), DomainError);
}

TEST_CASE("kernel matrix structure") {
  const Potential V = Potential::square_well(4.0, 1.5);
  const KernelMatrix K = build_bs_matrix(V, 2.0, 64);
  CHECK(K.n == 64);
  CHECK(K.weight == Catch::Approx(2.0 * 1.5 / 64.0).epsilon(1e-15));
  CHECK(K.nodes.front() == Catch::Approx(-1.5 + 0.5 * K.weight).epsilon(1e-12));
  CHECK(K.nodes.back() == Catch::Approx(1.5 - 0.5 * K.weight).epsilon(1e-12));
  for (std::size_t i = 0; i < K.n; i += 7)
    for (std::size_t j = 0; j < K.n; j += 5) CHECK(K.at(i, j) == K.at(j, i));
  // entry formula at one spot-checked pair
  const double expect = std::sqrt(4.0 * K.weight) * green_kernel_1d(2.0, K.nodes[3], K.nodes[10]) *
                        std::sqrt(4.0 * K.weight);
  CHECK(K.at(3, 10) == Catch::Approx(expect).epsilon(1e-13));

  CHECK_THROWS_AS(build_bs_matrix(V, 0.0, 64), DomainError);
  CHECK_THROWS_AS(build_bs_matrix(V, 2.0, 8), DomainError);
  CHECK_THROWS_AS(build_bs_matrix(Potential::square_well(1.0, 1.0, 3), 2.0, 64), DomainError);
}

TEST_CASE("nonnegative potential gives the zero kernel") {
  const KernelMatrix K = build_bs_matrix(scale(-1.0, Potential::square_well(1.0, 1.0)), 1.0, 32);
  for (double v : K.entries) CHECK(v == 0.0);
  CHECK(counting_via_bs(scale(-1.0, Potential::square_well(1.0, 1.0)), 1.0, 32) == 0);
}

TEST_CASE("jacobi eigenvalues on closed-form matrices") {
  CHECK(jacobi_eigenvalues({5.0}, 1) == std::vector<double>{5.0});
  const std::vector<double> two = jacobi_eigenvalues({2.0, 1.0, 1.0, 2.0}, 2);
  CHECK(two[0] == Catch::Approx(3.0).epsilon(1e-14));
  CHECK(two[1] == Catch::Approx(1.0).epsilon(1e-14));
  // already diagonal: exact, descending
  const std::vector<double> diag =
      jacobi_eigenvalues({-1.0, 0.0, 0.0, 0.0, 7.0, 0.0, 0.0, 0.0, 3.0}, 3);
  CHECK(diag == std::vector<double>{7.0, 3.0, -1.0});
  CHECK_THROWS_AS(jacobi_eigenvalues({1.0, 2.0}, 2), DomainError);
}

TEST_CASE("jacobi preserves trace and Frobenius norm") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const std::size_t n = 24;
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a[i * n + j] = a[j * n + i] = u(rng);
  double trace = 0.0, frob2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) trace += a[i * n + i];
  for (double v : a) frob2 += v * v;
  const std::vector<double> ev = jacobi_eigenvalues(a, n);
  REQUIRE(ev.size() == n);
  double sum = 0.0, sq = 0.0;
  for (double e : ev) sum += e, sq += e * e;
  CHECK(sum == Catch::Approx(trace).margin(1e-10));
  CHECK(sq == Catch::Approx(frob2).epsilon(1e-12));
  for (std::size_t k = 0; k + 1 < n; ++k) CHECK(ev[k] >= ev[k + 1]);
}

TEST_CASE("jacobi sweep budget exhaustion") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const std::size_t n = 16;
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a[i * n + j] = a[j * n + i] = u(rng);
  JacobiOptions opt;
  opt.max_sweeps = 1;
  CHECK_THROWS_AS(jacobi_eigenvalues(a, n, opt), ConvergenceError);
}

TEST_CASE("kernel is positive semidefinite to rounding") {
  const KernelMatrix K = build_bs_matrix(Potential::poschl_teller(2.0), 1.7, 300);
  double norm = 0.0;
  for (double v : K.entries) norm += v * v;
  norm = std::sqrt(norm);
  const std::vector<double> mu = bs_eigenvalues(K);
  CHECK(mu.back() >= -1e-10 * norm);
}

TEST_CASE("eigenvalue-one correspondence at the spectrum") {
  SpectrumOptions so;
  so.grid_points = 2000;
  for (const Potential& V : {Potential::poschl_teller(2.0), Potential::square_well(4.0, 1.5)}) {
    const SpectralResult s = negative_spectrum(V, so);
    REQUIRE(s.eigenvalues.size() == 2);
    for (const auto& e : s.eigenvalues) {
      const std::vector<double> mu = bs_eigenvalues(build_bs_matrix(V, std::fabs(e.value), 400));
      double best = 1e9;
      for (double m : mu) best = std::min(best, std::fabs(m - 1.0));
      CHECK(best < 6e-3);
    }
  }
}

TEST_CASE("near-delta well: the kernel crosses one exactly at the ground state") {
  const Potential V = Potential::square_well(100.0, 0.01, 1, 10.0);
  const std::vector<double> mu = bs_eigenvalues(build_bs_matrix(V, -oracles::kDeltaWellE1, 400));
  CHECK(mu[0] == Catch::Approx(1.0).margin(1e-6));
  // far above the spectrum the delta model gives mu ~ alpha / (2 sqrt E) = 1/2
  const std::vector<double> far = bs_eigenvalues(build_bs_matrix(V, 4.0, 400));
  CHECK(far[0] == Catch::Approx(0.5).epsilon(0.02));
  CHECK(counting_via_bs(V, 4.0, 400) == 0);
}

TEST_CASE("counting agreement along geometric ladders") {
  SpectrumOptions so;
  so.grid_points = 2000;
  for (const Potential& V : {Potential::poschl_teller(1.0), Potential::square_well(4.0, 1.5)}) {
    const SpectralResult s = negative_spectrum(V, so);
    const double e1 = std::fabs(s.eigenvalues.front().value);
    for (double E : geometric_ladder(e1 / 10.0, 10.0 * e1, 16))
      CHECK(counting_via_bs(V, E, 200) == counting_function(V, E, so).count);
  }
}

TEST_CASE("kernel eigenvalues are non-increasing in E") {
  const Potential V = Potential::poschl_teller(2.0);
  std::vector<double> prev;
  for (double E : geometric_ladder(0.4, 40.0, 16)) {
    const std::vector<double> mu = bs_eigenvalues(build_bs_matrix(V, E, 200));
    if (!prev.empty())
      for (std::size_t k = 0; k < 6; ++k) CHECK(mu[k] <= prev[k] + 1e-12);
    prev = mu;
  }
}

TEST_CASE("grid refinement tightens the correspondence") {
  const Potential V = Potential::poschl_teller(2.0);
  double worst[2] = {0.0, 0.0};
  const int grids[2] = {200, 400};
  for (int i = 0; i < 2; ++i) {
    for (double e : {4.0, 1.0}) {
      const std::vector<double> mu = bs_eigenvalues(build_bs_matrix(V, e, grids[i]));
      double best = 1e9;
      for (double m : mu) best = std::min(best, std::fabs(m - 1.0));
      worst[i] = std::max(worst[i], best);
    }
  }
  CHECK(worst[1] < worst[0]);
  CHECK(worst[1] < 6e-3);
}

TEST_CASE("geometric ladder construction") {
  const std::vector<double> E = geometric_ladder(0.1, 10.0, 16);
  REQUIRE(E.size() == 16);
  CHECK(E.front() == Catch::Approx(0.1).epsilon(1e-14));
  CHECK(E.back() == Catch::Approx(10.0).epsilon(1e-14));
  for (std::size_t i = 0; i + 1 < E.size(); ++i)
    CHECK(E[i + 1] / E[i] == Catch::Approx(E[1] / E[0]).epsilon(1e-12));
  CHECK_THROWS_AS(geometric_ladder(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(geometric_ladder(2.0, 1.0), DomainError);
  CHECK_THROWS_AS(geometric_ladder(0.1, 10.0, 1), DomainError);
}
