#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "ltlab/spectrum.hpp"
#include "oracles.hpp"

using namespace ltlab;

TEST_CASE("discretization rejects bad input") {
  const Potential V = Potential::square_well(1.0, 1.0);
  CHECK_THROWS_AS(discretize_1d(V, 8), DomainError);
  CHECK_THROWS_AS(discretize_1d(Potential::square_well(1.0, 1.0, 3), 100), DomainError);
  CHECK_THROWS_AS(radial_channel(V, 0, 100), DomainError);
  CHECK_THROWS_AS(radial_channel(Potential::square_well(1.0, 1.0, 3), -1, 100), DomainError);
  CHECK_THROWS_AS(negative_eigenvalues_tridiagonal(discretize_1d(V, 64), 0.0), DomainError);
}

TEST_CASE("free operator has no negative spectrum") {
  const Potential zero = scale(0.0, Potential::square_well(1.0, 1.0));
  const Tridiagonal T = discretize_1d(zero, 200);
  CHECK(sturm_count_below(T, 0.0) == 0);
  CHECK(negative_eigenvalues_tridiagonal(T).empty());
  // smallest Laplacian eigenvalue is (pi / 2R)^2 up to O(h^2)
  const double first = M_PI * M_PI / (4.0 * T.box_radius * T.box_radius);
  CHECK(sturm_count_below(T, 1.01 * first) == 1);
  CHECK(sturm_count_below(T, 0.99 * first) == 0);
}

TEST_CASE("nonnegative potentials yield empty spectra") {
  const Potential up = scale(-1.0, Potential::poschl_teller(1.0));
  const SpectralResult s = negative_spectrum(up);
  CHECK(s.eigenvalues.empty());
  CHECK(s.total_multiplicity() == 0);
}

TEST_CASE("Poschl-Teller spectra match the closed form") {
  // second-order differences at h ~ 1e-2: observed errors stay below 1.4e-4
  for (double lam : {1.0, 2.0, 3.0}) {
    const Potential V = Potential::poschl_teller(lam);
    const SpectralResult s = negative_spectrum(V);
    const std::vector<double> exact = oracles::poschl_teller_levels(lam);
    REQUIRE(s.eigenvalues.size() == exact.size());
    for (std::size_t k = 0; k < exact.size(); ++k) {
      CHECK(s.eigenvalues[k].multiplicity == 1);
      CHECK(s.eigenvalues[k].value == Catch::Approx(exact[k]).margin(3e-4));
    }
  }
}

TEST_CASE("square well spectra match the transcendental oracle") {
  {
    const Potential V = Potential::square_well(1.0, 1.0);
    const SpectralResult s = negative_spectrum(V);
    const std::vector<double> exact = oracles::square_well_levels_1d(1.0, 1.0);
    REQUIRE(s.eigenvalues.size() == 1);
    REQUIRE(exact.size() == 1);
    CHECK(s.eigenvalues[0].value == Catch::Approx(exact[0]).margin(5e-4));
  }
  {
    const Potential V = Potential::square_well(4.0, 1.5);
    const SpectralResult s = negative_spectrum(V);
    REQUIRE(s.eigenvalues.size() == 2);
    CHECK(s.eigenvalues[0].value == Catch::Approx(oracles::kSW4_15_E1).margin(1e-3));
    CHECK(s.eigenvalues[1].value == Catch::Approx(oracles::kSW4_15_E2).margin(2e-3));
  }
}

TEST_CASE("grid refinement converges at second order") {
  double err[3];
  const int grids[3] = {500, 1000, 2000};
  for (int i = 0; i < 3; ++i) {
    SpectrumOptions opt;
    opt.grid_points = grids[i];
    const SpectralResult s = negative_spectrum(Potential::poschl_teller(1.0), opt);
    REQUIRE(s.eigenvalues.size() == 1);
    err[i] = std::fabs(s.eigenvalues[0].value + 1.0);
  }
  CHECK(std::log2(err[0] / err[1]) > 1.8);
  CHECK(std::log2(err[1] / err[2]) > 1.8);
}

TEST_CASE("ground state deepens monotonically with coupling") {
  double prev = 0.0;
  for (double lam : {1.0, 1.5, 2.0, 3.0}) {
    const SpectralResult s =
        negative_spectrum(scale(lam, Potential::poschl_teller(1.0)));
    REQUIRE_FALSE(s.eigenvalues.empty());
    CHECK(s.eigenvalues[0].value < prev);
    prev = s.eigenvalues[0].value;
  }
}

TEST_CASE("Sturm counts are consistent with the extracted eigenvalues") {
  const Potential V = Potential::square_well(4.0, 1.5);
  const Tridiagonal T = discretize_1d(V, 4000);
  const std::vector<double> ev = negative_eigenvalues_tridiagonal(T);
  REQUIRE(ev.size() == 2);
  CHECK(sturm_count_below(T, 0.0) == 2);
  CHECK(sturm_count_below(T, 0.5 * (ev[0] + ev[1])) == 1);
  CHECK(sturm_count_below(T, ev[0] - 0.1) == 0);
  CHECK(sturm_count_below(T, ev[1] + 1e-6) == 2);
}

TEST_CASE("3d radial channels: thresholds, degeneracies, s-wave oracle") {
  // shallow well binds nothing in 3d
  CHECK(negative_spectrum(Potential::square_well(1.0, 1.0, 3)).total_multiplicity() == 0);

  const Potential V = Potential::square_well(3.0, 2.0, 3);
  const SpectralResult s = negative_spectrum(V);
  CHECK(s.channels_used == 2);  // ell = 0 and ell = 1 bind
  CHECK_FALSE(s.channel_cutoff);
  CHECK(s.total_multiplicity() == 4);  // 1 + 3
  REQUIRE_FALSE(s.eigenvalues.empty());
  CHECK(s.eigenvalues[0].multiplicity == 1);
  CHECK(s.eigenvalues[0].value == Catch::Approx(oracles::kSW3_2_SwaveE1).margin(1e-4));

  const Tridiagonal ch1 = radial_channel(V, 1, 512);
  CHECK(ch1.degeneracy == 3);
  const Tridiagonal ch2 = radial_channel(V, 2, 512);
  CHECK(ch2.degeneracy == 5);
}

TEST_CASE("2d radial channels: degeneracies and the slow m = 0 mode") {
  const Potential V = Potential::square_well(100.0, 1.0, 2);
  CHECK(radial_channel(V, 0, 512).degeneracy == 1);
  CHECK(radial_channel(V, 1, 512).degeneracy == 2);
  const SpectralResult s = negative_spectrum(V);
  REQUIRE_FALSE(s.eigenvalues.empty());
  // the -1/(4 r^2) term converges slowly on the midpoint grid: percent-level
  CHECK(std::fabs(s.eigenvalues[0].value / oracles::k2dDeepWellE1 - 1.0) < 1e-2);
}

TEST_CASE("deep 3d well reproduces the frozen bound-state count") {
  const Potential V = Potential::square_well(100.0, 1.0, 3, 10.0);
  SpectrumOptions opt;
  opt.grid_points = 2000;
  const SpectralResult s = negative_spectrum(V, opt);
  CHECK(s.total_multiplicity() == oracles::kDeepWell3dCount);
  CHECK_FALSE(s.channel_cutoff);
}

TEST_CASE("channel cap sets the cutoff flag") {
  const Potential V = Potential::square_well(100.0, 1.0, 3, 10.0);
  SpectrumOptions opt;
  opt.grid_points = 400;
  opt.max_channels = 3;
  const SpectralResult s = negative_spectrum(V, opt);
  CHECK(s.channel_cutoff);
  CHECK(s.channels_used == 3);
  CHECK(s.total_multiplicity() < oracles::kDeepWell3dCount);
}

TEST_CASE("riesz_mean on constructed spectra") {
  SpectralResult s;
  s.dim = 1;
  s.eigenvalues = {{-4.0, 1}, {-1.0, 1}};
  CHECK(riesz_mean(s, 1.5) == Catch::Approx(9.0).epsilon(1e-14));
  CHECK(riesz_mean(s, 1.0) == Catch::Approx(5.0).epsilon(1e-14));

  SpectralResult t;
  t.dim = 3;
  t.eigenvalues = {{-1.0, 1}};
  CHECK(riesz_mean(t, 0.0) == 1.0);

  CHECK_THROWS_AS(riesz_mean(s, 0.0), InvalidGammaError);
  CHECK_THROWS_AS(riesz_mean(s, 0.3), InvalidGammaError);
  SpectralResult u;
  u.dim = 2;
  u.eigenvalues = {{-1.0, 2}};
  CHECK_THROWS_AS(riesz_mean(u, 0.0), InvalidGammaError);
  CHECK(riesz_mean(u, 0.5) == Catch::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("counting function levels and domain") {
  const Potential V = Potential::poschl_teller(2.0);  // levels -4, -1
  CHECK(counting_function(V, 0.5).count == 2);
  CHECK(counting_function(V, 2.0).count == 1);
  CHECK(counting_function(V, 5.0).count == 0);
  CHECK_THROWS_AS(counting_function(V, 0.0), DomainError);
  CHECK_THROWS_AS(counting_function(V, -1.0), DomainError);

  const Potential W = Potential::square_well(3.0, 2.0, 3);
  CHECK(counting_function(W, 0.0).count == 4);  // E = 0 is allowed in 3d
}

TEST_CASE("counting function is non-increasing in E") {
  const Potential V = Potential::square_well(4.0, 1.5);
  int prev = 1 << 20;
  for (double E : {0.05, 0.2, 1.0, 1.6919, 2.5, 3.39, 4.0}) {
    const int c = counting_function(V, E).count;
    CHECK(c <= prev);
    prev = c;
  }
}

TEST_CASE("riesz_via_counting agrees with the direct mean") {
  SpectrumOptions opt;
  opt.grid_points = 2000;
  {
    const Potential V = Potential::poschl_teller(2.0);
    const double direct = riesz_mean(negative_spectrum(V, opt), 1.0);
    const double via = riesz_via_counting(V, 1.0, opt);
    CHECK(via == Catch::Approx(direct).epsilon(1e-6));
  }
  {
    const Potential V = Potential::square_well(4.0, 1.5);
    const double direct = riesz_mean(negative_spectrum(V, opt), 0.5);
    const double via = riesz_via_counting(V, 0.5, opt);
    CHECK(via == Catch::Approx(direct).epsilon(1e-6));
  }
  CHECK_THROWS_AS(riesz_via_counting(Potential::poschl_teller(1.0), 0.0, opt), DomainError);
  CHECK(riesz_via_counting(scale(-1.0, Potential::poschl_teller(1.0)), 1.0, opt) == 0.0);
}
