#include "doctest.h"

#include <cmath>
#include <numbers>

#include "circlepat/special.hpp"
#include "oracles.hpp"

using circlepat::clausen2;
using circlepat::lobachevsky;
using std::numbers::pi;

TEST_CASE("lobachevsky matches quadrature of its integral on a 1000-point grid") {
  double worst = 0.0;
  for (int k = 0; k <= 999; ++k) {
    const double x = pi * k / 999.0;
    worst = std::max(worst, std::abs(lobachevsky(x) - oracle::lobachevsky_quadrature(x)));
  }
  CHECK(worst < 1e-11);
}

TEST_CASE("lobachevsky reference values") {
  CHECK(lobachevsky(0.0) == 0.0);
  CHECK(std::abs(lobachevsky(pi / 2)) < 1e-15);
  CHECK(lobachevsky(pi / 6) == doctest::Approx(0.5074708).epsilon(1e-7));
  // Cl2(pi/2) is Catalan's constant.
  CHECK(std::abs(clausen2(pi / 2) - 0.915965594177219015054603514932) < 1e-14);
  // Maximum of Lambda at pi/6.
  CHECK(lobachevsky(pi / 6) > lobachevsky(pi / 6 - 1e-3));
  CHECK(lobachevsky(pi / 6) > lobachevsky(pi / 6 + 1e-3));
}

TEST_CASE("lobachevsky is odd and pi-periodic") {
  auto g = oracle::rng(11);
  double worst_odd = 0.0;
  double worst_period = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const double x = oracle::uniform(g, -10.0, 10.0);
    worst_odd = std::max(worst_odd, std::abs(lobachevsky(-x) + lobachevsky(x)));
    worst_period = std::max(worst_period, std::abs(lobachevsky(x + pi) - lobachevsky(x)));
  }
  CHECK(worst_odd < 1e-12);
  CHECK(worst_period < 1e-12);
}

TEST_CASE("lobachevsky derivative is -ln|2 sin x|") {
  auto g = oracle::rng(12);
  for (int i = 0; i < 200; ++i) {
    const double x = oracle::uniform(g, 0.05, pi - 0.05);
    const double d = oracle::central_difference(lobachevsky, x, 1e-5);
    CHECK(d == doctest::Approx(-std::log(2.0 * std::sin(x))).epsilon(1e-7));
  }
}

TEST_CASE("clausen duplication formula") {
  // Cl2(2t) = 2 Cl2(t) - 2 Cl2(pi - t)
  auto g = oracle::rng(13);
  for (int i = 0; i < 200; ++i) {
    const double t = oracle::uniform(g, 0.0, pi);
    CHECK(std::abs(clausen2(2 * t) - 2 * clausen2(t) + 2 * clausen2(pi - t)) < 1e-13);
  }
}
