#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "phlab/eqho.hpp"
#include "phlab/errors.hpp"
#include "phlab/landau.hpp"
#include "phlab/quadrature.hpp"
#include "support.hpp"

using namespace phlab;

TEST_CASE("plain gaussian integral") {
  const auto r = integrate_1d([](double x) { return std::exp(-x * x); }, 1.0,
                              1e-11);
  CHECK(std::abs(r.value - std::sqrt(std::numbers::pi)) < 1e-10);
  CHECK(r.err <= 1e-11);
}

TEST_CASE("odd integrand vanishes") {
  const auto r = integrate_1d(
      [](double x) { return x * std::exp(-x * x); }, 1.0, 1e-13);
  CHECK(std::abs(r.value) < 1e-12);
}

TEST_CASE("biorthonormal pair through the oracle") {
  const EqhoModel model{EqhoParams{2.0}};
  const auto phi1 = model.eigenstate(Family::phi, 1);
  const auto psi1 = model.eigenstate(Family::psi, 1);
  const auto r = integrate_1d(
      [&](double x) { return std::conj(phi1(x)) * psi1(x); }, 1.0, 1e-10);
  CHECK(std::abs(r.value - cplx{1.0}) < 1e-8);
}

TEST_CASE("2d fixtures") {
  const auto disc = integrate_2d(
      [](double x, double y) { return std::exp(-x * x - y * y); }, 1.0, 1.0,
      1e-10);
  CHECK(std::abs(disc.value - std::numbers::pi) < 1e-9);

  const auto moments = integrate_2d(
      [](double x, double y) {
        return x * x * y * y * std::exp(-x * x - y * y);
      },
      1.0, 1.0, 1e-10);
  CHECK(std::abs(moments.value - std::numbers::pi / 4.0) < 1e-9);

  const LandauModel model{LandauParams{0.1, -0.15}};
  const auto phi00 = model.eigenstate(Family::phi, {0, 0});
  const auto psi00 = model.eigenstate(Family::psi, {0, 0});
  const auto pair = integrate_2d(
      [&](double x, double y) { return std::conj(phi00(x, y)) * psi00(x, y); },
      0.25, 0.25, 1e-9);
  CHECK(std::abs(pair.value - cplx{1.0}) < 1e-8);
}

TEST_CASE("halving tol never loosens the error estimate") {
  const auto probe = [](double x) {
    return std::exp(-0.7 * x * x) * (1.0 + x * x);
  };
  double prev = 1e300;
  for (double tol : {1e-6, 5e-7, 2.5e-7, 1.25e-7, 1e-9, 1e-11}) {
    const auto r = integrate_1d(probe, 0.7, tol);
    CHECK(r.err <= prev * (1.0 + 1e-12));
    prev = r.err;
  }
}

TEST_CASE("error paths") {
  CHECK_THROWS_AS(
      integrate_1d([](double) { return cplx{1.0}; }, 0.0, 1e-8),
      InvalidDecay);
  CHECK_THROWS_AS(
      integrate_1d([](double) { return cplx{1.0}; }, -1.0, 1e-8),
      InvalidDecay);
  CHECK_THROWS_AS(
      integrate_1d([](double x) { return std::exp(-x * x); }, 1.0, 1e-30,
                   /*max_doublings=*/3),
      ToleranceNotMet);
  CHECK_THROWS_AS(
      integrate_2d([](double, double) { return cplx{1.0}; }, 1.0, 0.0, 1e-8),
      InvalidDecay);
}

TEST_CASE("oracle matches closed-form inner products") {
  phlab::testing::Rng rng;
  for (int i = 0; i < 12; ++i) {
    const auto f = rng.state(3);
    const auto g = rng.state(3);
    const cplx closed = inner(f, g);
    const double decay = (std::conj(f.a()) + g.a()).real();
    const auto quad = integrate_1d(
        [&](double x) { return std::conj(f(x)) * g(x); }, decay, 1e-10);
    CHECK(std::abs(closed - quad.value) <=
          std::max(1e-8, 10.0 * quad.err) * std::max(1.0, std::abs(closed)));
  }
}
