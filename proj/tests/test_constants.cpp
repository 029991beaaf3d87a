#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "ltlab/constants.hpp"

using namespace ltlab;

TEST_CASE("gamma function against classical identities and the standard library") {
  CHECK(gamma_function(1.0) == Catch::Approx(1.0).epsilon(1e-13));
  CHECK(gamma_function(0.5) == Catch::Approx(std::sqrt(M_PI)).epsilon(1e-13));
  CHECK(gamma_function(2.5) == Catch::Approx(1.3293403881791370).epsilon(1e-12));  // 3 sqrt(pi)/4
  CHECK(gamma_function(6.0) == Catch::Approx(120.0).epsilon(1e-13));
  for (double x : {0.1, 0.37, 1.0, 2.25, 4.5, 9.0, 17.5, 40.0, 101.5})
    CHECK(gamma_function(x) == Catch::Approx(std::tgamma(x)).epsilon(5e-13));
  CHECK_THROWS_AS(gamma_function(0.0), DomainError);
  CHECK_THROWS_AS(gamma_function(-1.5), DomainError);
}

TEST_CASE("recurrence Gamma(x+1) = x Gamma(x)") {
  for (double x : {0.3, 0.7, 1.9, 5.5})
    CHECK(gamma_function(x + 1.0) == Catch::Approx(x * gamma_function(x)).epsilon(1e-12));
}

TEST_CASE("semiclassical constants hit their closed forms") {
  CHECK(semiclassical_constant(1.5, 1).value == Catch::Approx(3.0 / 16.0).epsilon(1e-12));
  CHECK(semiclassical_constant(0.5, 1).value == Catch::Approx(0.25).epsilon(1e-12));
  CHECK(semiclassical_constant(1.0, 1).value == Catch::Approx(2.0 / (3.0 * M_PI)).epsilon(1e-12));
  CHECK(semiclassical_constant(0.0, 3).value ==
        Catch::Approx(1.0 / (6.0 * M_PI * M_PI)).epsilon(1e-12));
  CHECK(semiclassical_constant(1.0, 3).value ==
        Catch::Approx(1.0 / (15.0 * M_PI * M_PI)).epsilon(1e-12));
}

TEST_CASE("semiclassical recurrence in gamma") {
  // L^c_{gamma+1,n} / L^c_{gamma,n} = (gamma+1) / (gamma+1+n/2)
  for (int n : {1, 2, 3}) {
    for (double g : {0.0, 0.5, 1.0, 2.5}) {
      const double lhs = semiclassical_constant(g + 1.0, n).value /
                         semiclassical_constant(g, n).value;
      const double rhs = (g + 1.0) / (g + 1.0 + 0.5 * n);
      CHECK(lhs == Catch::Approx(rhs).epsilon(1e-12));
    }
  }
}

TEST_CASE("conjectured one-dimensional constant: interior value and endpoints") {
  // closed form at gamma = 1: 4 / (3 sqrt(3) pi)
  CHECK(conjectured_constant_1d(1.0).value ==
        Catch::Approx(4.0 / (3.0 * std::sqrt(3.0) * M_PI)).epsilon(1e-12));
  // continuity with the sharp table at both ends of the open interval
  CHECK(std::fabs(conjectured_constant_1d(1.5 - 1e-8).value - 3.0 / 16.0) < 1e-6);
  CHECK(std::fabs(conjectured_constant_1d(0.5 + 1e-8).value - 0.5) < 1e-4);
  CHECK_THROWS_AS(conjectured_constant_1d(0.5), DomainError);
  CHECK_THROWS_AS(conjectured_constant_1d(1.5), DomainError);
  CHECK_THROWS_AS(conjectured_constant_1d(2.0), DomainError);
}

TEST_CASE("conjectured constant decreases from 1/2 to 3/16 across the interval") {
  double prev = conjectured_constant_1d(0.5 + 1e-8).value;
  for (double g = 0.6; g < 1.5; g += 0.1) {
    const double cur = conjectured_constant_1d(g).value;
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("sharp-constant table") {
  const auto a = known_sharp_constant(1.5, 1);
  REQUIRE(a.has_value());
  CHECK(a->value == Catch::Approx(3.0 / 16.0).epsilon(1e-12));
  CHECK(a->source == ConstantSource::SharpKnown);

  const auto b = known_sharp_constant(0.5, 1);
  REQUIRE(b.has_value());
  CHECK(b->value == 0.5);

  CHECK_FALSE(known_sharp_constant(1.0, 1).has_value());  // only conjectured
  CHECK_FALSE(known_sharp_constant(0.5, 2).has_value());
  CHECK_FALSE(known_sharp_constant(0.0, 3).has_value());

  const auto c = known_sharp_constant(2.0, 3);
  REQUIRE(c.has_value());
  CHECK(c->value == Catch::Approx(semiclassical_constant(2.0, 3).value).epsilon(1e-14));
}

TEST_CASE("kinetic constant from L_{1,n}") {
  // n = 1 with the semiclassical 2/(3 pi): K_1 = pi^2/3
  const double K1 = kinetic_constant(1, semiclassical_constant(1.0, 1));
  CHECK(K1 == Catch::Approx(M_PI * M_PI / 3.0).epsilon(1e-12));

  // n = 3 with 1/(15 pi^2): two independent algebraic routes agree
  const double K3 = kinetic_constant(3, semiclassical_constant(1.0, 3));
  CHECK(K3 == Catch::Approx(3.0 * std::pow(30.0 * M_PI * M_PI, 2.0 / 3.0) /
                            std::pow(5.0, 5.0 / 3.0)).epsilon(1e-12));
  CHECK(K3 == Catch::Approx(0.6 * std::pow(6.0 * M_PI * M_PI, 2.0 / 3.0)).epsilon(1e-12));

  // homogeneity: doubling L divides K by 2^{2/n}
  for (int n : {1, 2, 3}) {
    ConstantValue L = semiclassical_constant(1.0, n);
    const double K = kinetic_constant(n, L);
    L.value *= 2.0;
    CHECK(kinetic_constant(n, L) ==
          Catch::Approx(K / std::pow(2.0, 2.0 / n)).epsilon(1e-12));
  }

  ConstantValue wrong = semiclassical_constant(1.5, 1);
  CHECK_THROWS_AS(kinetic_constant(1, wrong), DomainError);
}

TEST_CASE("single-bound-state constant from the Sobolev constant") {
  CHECK(single_state_constant_from_sobolev(1.0, 3) == 1.0);
  CHECK(single_state_constant_from_sobolev(2.0, 3) == Catch::Approx(0.125).epsilon(1e-15));
  CHECK(single_state_constant_from_sobolev(2.0, 4) == Catch::Approx(0.0625).epsilon(1e-15));
  CHECK_THROWS_AS(single_state_constant_from_sobolev(1.0, 2), DomainError);
}

TEST_CASE("constant resolution by source") {
  CHECK(resolve_constant(1.0, 1, ConstantSource::Semiclassical).has_value());
  CHECK_FALSE(resolve_constant(1.0, 1, ConstantSource::SharpKnown).has_value());
  CHECK_THROWS_AS(resolve_constant_strict(1.0, 1, ConstantSource::SharpKnown),
                  MissingConstantError);
  const auto user = resolve_constant(1.0, 1, ConstantSource::UserSupplied, 0.3);
  REQUIRE(user.has_value());
  CHECK(user->value == 0.3);
  CHECK(user->source == ConstantSource::UserSupplied);
  CHECK_THROWS_AS(resolve_constant(1.0, 1, ConstantSource::UserSupplied), DomainError);
  CHECK_THROWS_AS(resolve_constant(1.0, 3, ConstantSource::Conjectured), DomainError);
}

TEST_CASE("validity range of the inequality") {
  CHECK(riesz_gamma_valid(0.5, 1));
  CHECK_FALSE(riesz_gamma_valid(0.49, 1));
  CHECK_FALSE(riesz_gamma_valid(0.0, 1));
  CHECK(riesz_gamma_valid(1e-9, 2));
  CHECK_FALSE(riesz_gamma_valid(0.0, 2));
  CHECK(riesz_gamma_valid(0.0, 3));
  CHECK_THROWS_AS(require_valid_gamma(0.0, 1), InvalidGammaError);
}
