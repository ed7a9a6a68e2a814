#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "phlab/errors.hpp"
#include "phlab/landau.hpp"
#include "support.hpp"

using namespace phlab;
using Ld = LandauModel::Ladder;

namespace {
double rel_residual(const PolyGauss2D& got, const PolyGauss2D& want) {
  return residual(got, want) / std::max(coeff_scale(want), 1e-300);
}
}  // namespace

TEST_CASE("parameter range") {
  CHECK_THROWS_AS(LandauParams(0.5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(LandauParams(0.0, -0.5), std::invalid_argument);
  CHECK(LandauParams(0.2, -0.2).in_quarter());
  CHECK_FALSE(LandauParams(0.3, 0.0).in_quarter());
}

TEST_CASE("vacua carry the printed exponents and normalization") {
  const LandauModel m{LandauParams{0.1, -0.15}};
  const auto phi00 = m.vacuum(Family::phi);
  CHECK(phi00.ax() == cplx{(1.0 + 2.0 * -0.15) / 4.0});
  CHECK(phi00.ay() == cplx{(1.0 - 2.0 * 0.1) / 4.0});
  const auto psi00 = m.vacuum(Family::psi);
  CHECK(psi00.ax() == cplx{(1.0 - 2.0 * -0.15) / 4.0});
  CHECK(psi00.ay() == cplx{(1.0 + 2.0 * 0.1) / 4.0});
  CHECK(std::abs(phi00.coeffs().at({0, 0}) -
                 1.0 / std::sqrt(2.0 * std::numbers::pi)) < 1e-16);
  CHECK(std::abs(inner(phi00, psi00) - cplx{1.0}) < 1e-14);
}

TEST_CASE("vacua are annihilated by the right operators") {
  const LandauModel m{LandauParams{-0.2, 0.05}};
  const auto phi00 = m.vacuum(Family::phi);
  const auto psi00 = m.vacuum(Family::psi);
  const double scale = coeff_scale(phi00);
  CHECK(residual(m.ladder(phi00, Ld::A1), PolyGauss2D::zero()) < 1e-15 * scale);
  CHECK(residual(m.ladder(phi00, Ld::A2), PolyGauss2D::zero()) < 1e-15 * scale);
  CHECK(residual(m.ladder(psi00, Ld::B1dag), PolyGauss2D::zero()) <
        1e-15 * scale);
  CHECK(residual(m.ladder(psi00, Ld::B2dag), PolyGauss2D::zero()) <
        1e-15 * scale);
}

TEST_CASE("pseudo-bosonic commutators on test states") {
  const LandauModel m{LandauParams{0.1, -0.15}};
  const auto states = {m.eigenstate(Family::phi, {0, 0}),
                       m.eigenstate(Family::phi, {1, 0}),
                       m.eigenstate(Family::phi, {1, 1})};
  const auto comm = [&](Ld a, Ld b, const PolyGauss2D& f) {
    return m.ladder(m.ladder(f, b), a)
        .plus(m.ladder(m.ladder(f, a), b).scaled(-1.0));
  };
  for (const auto& f : states) {
    const double scale = coeff_scale(f);
    CHECK(residual(comm(Ld::A1, Ld::B1, f), f) < 1e-12 * scale);
    CHECK(residual(comm(Ld::A2, Ld::B2, f), f) < 1e-12 * scale);
    CHECK(residual(comm(Ld::A1, Ld::B2, f), PolyGauss2D::zero()) <
          1e-12 * scale);
    CHECK(residual(comm(Ld::A2, Ld::B1, f), PolyGauss2D::zero()) <
          1e-12 * scale);
  }
}

TEST_CASE("biorthonormality over index boxes") {
  for (auto [k1, k2] : {std::pair{0.1, -0.15}, std::pair{0.3, 0.0}}) {
    const LandauModel m{LandauParams{k1, k2}};
    double worst = 0.0;
    for (int n = 0; n <= 6; ++n)
      for (int l = 0; l <= 6; ++l) {
        const auto phi = m.eigenstate(Family::phi, {n, l});
        for (int p = 0; p <= 6; ++p)
          for (int q = 0; q <= 6; ++q) {
            const cplx v = inner(phi, m.eigenstate(Family::psi, {p, q}));
            const double want = (n == p && l == q) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(v - want));
          }
      }
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("number operators and their commutativity") {
  const LandauModel m{LandauParams{0.1, -0.15}};
  for (int n = 0; n <= 4; ++n)
    for (int l = 0; l <= 4; ++l) {
      const auto st = m.eigenstate(Family::phi, {n, l});
      CHECK(rel_residual(m.apply_h1(st), st.scaled(n - 0.5)) < 1e-12);
      CHECK(rel_residual(m.apply_h2(st), st.scaled(l - 0.5)) < 1e-12);
      CHECK(m.eigenvalue({n, l}) == doctest::Approx(double(n)));
    }
  for (int n = 0; n <= 3; ++n)
    for (int l = 0; l <= 3; ++l) {
      const auto st = m.eigenstate(Family::phi, {n, l});
      const auto h12 = m.apply_h2(m.apply_h1(st));
      const auto h21 = m.apply_h1(m.apply_h2(st));
      CHECK(residual(h12.plus(h21.scaled(-1.0)), PolyGauss2D::zero()) <
            1e-12 * coeff_scale(h12));
    }
}

TEST_CASE("ladders move indices with the right factors") {
  const LandauModel m{LandauParams{-0.12, 0.2}};
  for (int n = 0; n <= 5; ++n)
    for (int l : {0, 1, 5}) {
      const auto st = m.eigenstate(Family::phi, {n, l});
      CHECK(rel_residual(m.ladder(st, Ld::B1),
                         m.eigenstate(Family::phi, {n + 1, l})
                             .scaled(std::sqrt(n + 1.0))) < 1e-11);
      if (n > 0)
        CHECK(rel_residual(m.ladder(st, Ld::A1),
                           m.eigenstate(Family::phi, {n - 1, l})
                               .scaled(std::sqrt(double(n)))) < 1e-11);
      CHECK(rel_residual(m.ladder(st, Ld::B2),
                         m.eigenstate(Family::phi, {n, l + 1})
                             .scaled(std::sqrt(l + 1.0))) < 1e-11);
      if (l > 0)
        CHECK(rel_residual(m.ladder(st, Ld::A2),
                           m.eigenstate(Family::phi, {n, l - 1})
                               .scaled(std::sqrt(double(l)))) < 1e-11);
    }
}

TEST_CASE("multiplication metric") {
  const LandauModel m{LandauParams{0.1, -0.15}};
  for (int n = 0; n <= 4; ++n)
    for (int l = 0; l <= 4; ++l) {
      const auto phi = m.eigenstate(Family::phi, {n, l});
      CHECK(rel_residual(m.apply_metric(phi, MetricDir::to_psi),
                         m.eigenstate(Family::psi, {n, l})) < 1e-12);
      CHECK(rel_residual(m.apply_metric(m.apply_metric(phi, MetricDir::to_psi),
                                        MetricDir::to_phi),
                         phi) < 1e-12);
    }
}

TEST_CASE("phi-metric integrability boundary at |k| = 1/4") {
  // <phi_00, S_phi phi_00> decays in y at the rate (1 - 4 k1)/2
  const LandauModel inside{LandauParams{0.24, 0.0}};
  const auto phi_in = inside.vacuum(Family::phi);
  CHECK_NOTHROW(inner(phi_in, inside.apply_metric(phi_in, MetricDir::to_phi)));

  const LandauModel outside{LandauParams{0.26, 0.0}};
  const auto phi_out = outside.vacuum(Family::phi);
  CHECK_THROWS_AS(
      inner(phi_out, outside.apply_metric(phi_out, MetricDir::to_phi)),
      DivergentIntegral);

  // psi-metric pairings of the same states stay integrable
  CHECK_NOTHROW(
      inner(phi_out, outside.apply_metric(phi_out, MetricDir::to_psi)));
}

TEST_CASE("k = 0 collapses both families to the ordinary levels") {
  const LandauModel m{LandauParams{0.0, 0.0}};
  for (int n = 0; n <= 2; ++n)
    for (int l = 0; l <= 2; ++l)
      CHECK(residual(m.eigenstate(Family::phi, {n, l}),
                     m.eigenstate(Family::psi, {n, l})) < 1e-14);
  // and the metric becomes the identity
  const auto st = m.eigenstate(Family::phi, {1, 0});
  CHECK(residual(m.apply_metric(st, MetricDir::to_psi), st) == 0.0);
}
