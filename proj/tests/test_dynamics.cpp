#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "phlab/dynamics.hpp"
#include "phlab/eqho.hpp"
#include "phlab/landau.hpp"
#include "phlab/quadrature.hpp"
#include "phlab/swanson.hpp"
#include "support.hpp"

using namespace phlab;

namespace {

constexpr double kPi = std::numbers::pi;

using EExp = StateExpansion<EqhoModel>;
using SExp = StateExpansion<SwansonModel>;
using LExp = StateExpansion<LandauModel>;

EExp ephi(std::initializer_list<int> idx) {
  std::vector<EExp::Term> t;
  for (int i : idx) t.push_back({1.0, i, Family::phi});
  return EExp::make(std::move(t));
}
EExp epsi(std::initializer_list<int> idx) {
  std::vector<EExp::Term> t;
  for (int i : idx) t.push_back({1.0, i, Family::psi});
  return EExp::make(std::move(t));
}

}  // namespace

TEST_CASE("expansion validation") {
  CHECK_THROWS_AS(EExp::make({}), std::invalid_argument);
  CHECK_THROWS_AS(EExp::make({{0.0, 0, Family::phi}, {0.0, 1, Family::phi}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(EExp::make({{1.0, 0, Family::phi}, {2.0, 0, Family::phi}}),
                  std::invalid_argument);
  // same index in different families is fine
  CHECK_NOTHROW(EExp::make({{1.0, 0, Family::phi}, {1.0, 0, Family::psi}}));
}

TEST_CASE("to_polygauss materializes linear combinations") {
  const EqhoModel m{EqhoParams{1.0}};
  const auto single = to_polygauss(m, ephi({0}));
  CHECK(residual(single, m.eigenstate(Family::phi, 0)) == 0.0);

  const auto pair = to_polygauss(m, ephi({0, 1}));
  CHECK(pair.degree() == 1);

  // pointwise agreement with the term-by-term sum
  const auto phi0 = m.eigenstate(Family::phi, 0);
  const auto phi1 = m.eigenstate(Family::phi, 1);
  for (double x : {-2.0, -0.3, 0.0, 1.7})
    CHECK(std::abs(pair(x) - (phi0(x) + phi1(x))) < 1e-14);

  // phi and psi live on different exponents here, the sum is not a
  // single PolyGauss
  CHECK_THROWS_AS(
      to_polygauss(m, EExp::make({{1.0, 0, Family::phi}, {1.0, 0, Family::psi}})),
      std::invalid_argument);

  // 2d materialization: pointwise sum of terms, and its self-overlap
  // checks out against the quadrature oracle
  const LandauModel lm{LandauParams{0.1, -0.15}};
  const auto lexp = LExp::make({{1.0, {0, 0}, Family::phi},
                                {1.0, {1, 0}, Family::phi},
                                {1.0, {0, 1}, Family::phi}});
  const auto mat = to_polygauss(lm, lexp);
  const auto t00 = lm.eigenstate(Family::phi, {0, 0});
  const auto t10 = lm.eigenstate(Family::phi, {1, 0});
  const auto t01 = lm.eigenstate(Family::phi, {0, 1});
  for (double x : {-1.2, 0.4})
    for (double y : {-0.6, 1.8})
      CHECK(std::abs(mat(x, y) - (t00(x, y) + t10(x, y) + t01(x, y))) < 1e-14);
  const cplx closed = inner(mat, mat);
  const auto quad = integrate_2d(
      [&](double x, double y) { return std::conj(mat(x, y)) * mat(x, y); },
      2.0 * mat.ax().real(), 2.0 * mat.ay().real(), 1e-9);
  CHECK(std::abs(closed - quad.value) < 1e-8);
}

TEST_CASE("evolution") {
  const EqhoModel m{EqhoParams{1.0}};
  const auto f = ephi({0, 1});
  const auto same = evolve(m, f, 0.0);
  CHECK(same.terms[0].coeff == cplx{1.0});
  CHECK(same.terms[1].coeff == cplx{1.0});

  // relative phase advances by e^{-i nu t}
  const auto ft = evolve(m, f, 0.8);
  const cplx ratio = ft.terms[1].coeff / ft.terms[0].coeff;
  CHECK(std::abs(ratio - std::exp(cplx{0.0, -1.0 * 0.8})) < 1e-15);

  CHECK_THROWS_AS(evolve(m, epsi({0}), 0.5), WrongFamily);
}

TEST_CASE("standard metric recovers biorthonormality") {
  const EqhoModel m{EqhoParams{2.0}};
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j) {
      const cplx v = inner_metric(m, ephi({i}), epsi({j}), Metric::standard);
      CHECK(std::abs(v - (i == j ? 1.0 : 0.0)) < 1e-12);
    }
}

TEST_CASE("single eigenstate probabilities are one and time independent") {
  const EqhoModel m{EqhoParams{1.4}};
  const auto f = ephi({2});
  for (double t : {0.0, 0.9, 4.4})
    for (Metric metric : {Metric::standard, Metric::psi, Metric::phi})
      CHECK(transition_probability(m, f, f, t, metric) ==
            doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("oscillator pair: the three probabilities coincide") {
  // both states are plain gaussians, so every gaussian-weight metric
  // produces the same normalized overlap e^{-4/nu^2}
  for (double nu : {1.0, 2.0, 5.0}) {
    const EqhoModel m{EqhoParams{nu}};
    const auto f0 = ephi({0});
    const auto ff = epsi({0});
    const double want = std::exp(-4.0 / (nu * nu));
    for (Metric metric : {Metric::standard, Metric::psi, Metric::phi}) {
      const double p = transition_probability(m, f0, ff, 0.6, metric);
      CHECK(phlab::testing::rel(p, want) < 1e-12);
      const double po = transition_probability(m, f0, ff, 0.6, metric,
                                               Method::oracle(1e-11));
      CHECK(std::abs(p - po) < 1e-9);
    }
  }
}

TEST_CASE("oscillator superposition curves") {
  const double nu = 1.0;
  const EqhoModel m{EqhoParams{nu}};
  const auto f0 = ephi({0, 1});
  const auto ff = epsi({0});
  const double n2 = nu * nu;
  for (double t : {0.0, 0.7, 2.9, 5.5}) {
    const double ct = std::cos(nu * t);
    const double damp = std::exp(-4.0 / n2);
    const double bracket = (1.0 - 2.0 / nu) * (1.0 - 2.0 / nu);
    const double want_std = damp * n2 / (2.0 * (2.0 + n2 + 2.0 * nu * ct));
    const double want_psi = 0.5 * damp * (bracket + (4.0 / nu) * (1.0 - ct));
    const double want_phi = (n2 / 2.0) * damp *
                            (bracket + (4.0 / nu) * (1.0 + ct)) /
                            (8.0 + n2 + 4.0 * nu * ct);
    CHECK(phlab::testing::rel(
              transition_probability(m, f0, ff, t, Metric::standard),
              want_std) < 1e-12);
    CHECK(phlab::testing::rel(
              transition_probability(m, f0, ff, t, Metric::psi), want_psi) <
          1e-12);
    CHECK(phlab::testing::rel(
              transition_probability(m, f0, ff, t, Metric::phi), want_phi) <
          1e-12);
  }
}

TEST_CASE("three evaluation methods agree on convergent fixtures") {
  const EqhoModel m{EqhoParams{1.0}};
  const auto f = ephi({0});
  const cplx closed = inner_metric(m, f, f, Metric::psi);
  const cplx spectral = inner_metric(m, f, f, Metric::psi, Method::spectral(64));
  const cplx oracle = inner_metric(m, f, f, Metric::psi, Method::oracle(1e-11));
  CHECK(std::abs(closed - spectral) < 1e-8);
  CHECK(std::abs(closed - oracle) < 1e-8);

  const SwansonModel sw{SwansonParams{kPi / 16.0}};
  const auto sf = SExp::make({{1.0, 0, Family::psi}, {cplx{0.0, 0.5}, 1, Family::psi}});
  for (Metric metric : {Metric::standard, Metric::psi, Metric::phi}) {
    const cplx c = inner_metric(sw, sf, sf, metric);
    const cplx s = inner_metric(sw, sf, sf, metric, Method::spectral(64));
    const cplx o = inner_metric(sw, sf, sf, metric, Method::oracle(1e-11));
    CHECK(std::abs(c - s) < 1e-7);
    CHECK(std::abs(c - o) < 1e-7);
  }
}

TEST_CASE("swanson constants from the pipeline") {
  const double theta = kPi / 16.0;
  const SwansonModel m{SwansonParams{theta}};
  const auto f0 = SExp::make({{1.0, 0, Family::phi}, {1.0, 1, Family::phi}});
  const auto ff = SExp::make({{1.0, 0, Family::psi}});
  const double c2 = std::cos(2.0 * theta), c4 = std::cos(4.0 * theta);
  CHECK(phlab::testing::rel(
            transition_probability(m, f0, ff, 0.3, Metric::standard),
            c2 * c2 / (1.0 + c2)) < 1e-12);
  CHECK(phlab::testing::rel(
            transition_probability(m, f0, ff, 0.3, Metric::psi),
            std::sqrt(c4) / (2.0 * c2)) < 1e-12);
  CHECK(phlab::testing::rel(
            transition_probability(m, f0, ff, 0.3, Metric::phi),
            std::pow(c4, 1.5) / (c2 * (c4 + 1.0))) < 1e-12);
}

TEST_CASE("swanson metric norms diverge outside the restricted range") {
  const SwansonModel m{SwansonParams{kPi / 6.0}};
  const auto f0 = SExp::make({{1.0, 0, Family::phi}, {1.0, 1, Family::phi}});
  const auto ff = SExp::make({{1.0, 0, Family::psi}});
  for (Metric metric : {Metric::psi, Metric::phi}) {
    CHECK_THROWS_AS(transition_probability(m, f0, ff, 0.3, metric),
                    DivergentIntegral);
    CHECK_THROWS_AS(
        transition_probability(m, f0, ff, 0.3, metric, Method::spectral(64)),
        DivergentSpectralTail);
  }
  // the standard product survives on all of I
  CHECK_NOTHROW(transition_probability(m, f0, ff, 0.3, Metric::standard));
}

TEST_CASE("landau pipeline against derived closed forms") {
  const LandauModel m{LandauParams{0.1, -0.15}};
  const auto f0 = LExp::make({{1.0, {0, 0}, Family::phi},
                              {1.0, {1, 0}, Family::phi},
                              {1.0, {0, 1}, Family::phi}});
  const auto ff = LExp::make(
      {{1.0, {0, 0}, Family::psi}, {1.0, {1, 0}, Family::psi}});

  // moment bookkeeping for the standard metric, including the cross term
  // between phi_10 and phi_01 that shows up as a sin t modulation
  const double k1 = 0.1, k2 = -0.15;
  const double a = 1.0 / (1.0 + 2.0 * k2), b = 1.0 / (1.0 - 2.0 * k1);
  const double ap = 1.0 / (1.0 - 2.0 * k2), bp = 1.0 / (1.0 + 2.0 * k1);
  for (double t : {0.0, 0.9, 2.2, 4.8}) {
    const double num = 2.0 * (1.0 + std::cos(t));
    const double nf = std::sqrt(ap * bp) * (2.0 + ap + bp) / 2.0;
    const double nt =
        std::sqrt(a * b) * (1.0 + a + b - (a - b) * std::sin(t));
    const double want = num / (nf * nt);
    const double got = transition_probability(m, f0, ff, t, Metric::standard);
    CHECK(phlab::testing::rel(got, want) < 1e-12);
  }
  // and the k = 0 limit reproduces the ordinary Landau answer
  const LandauModel m0{LandauParams{0.0, 0.0}};
  for (double t : {0.0, 1.1, 3.9}) {
    const double want = (1.0 + std::cos(t)) / 3.0;
    CHECK(std::abs(transition_probability(m0, f0, ff, t, Metric::standard) -
                   want) < 1e-12);
    CHECK(std::abs(transition_probability(m0, f0, ff, t, Metric::psi) -
                   want) < 1e-12);
  }
}

TEST_CASE("psi-metric norm is conserved under evolution") {
  const EqhoModel m{EqhoParams{1.0}};
  const auto f = ephi({0, 1});
  const double base = norm_metric(m, f, Metric::psi);
  CHECK(base == doctest::Approx(std::numbers::sqrt2).epsilon(1e-12));
  for (double t : {0.3, 1.9, 7.7, 12.1}) {
    const double nt = norm_metric(m, evolve(m, f, t), Metric::psi);
    CHECK(phlab::testing::rel(nt, base) < 1e-9);
  }
}

TEST_CASE("standard norm oscillates with the derived max/min ratio") {
  // |Phi(t)|^2 tracks 6 + 4 cos(nu t) at nu = 1, extremal at t = 0 and pi
  const EqhoModel m{EqhoParams{1.0}};
  const auto f = ephi({0, 1});
  const double hi = norm_metric(m, evolve(m, f, 0.0), Metric::standard);
  const double lo = norm_metric(m, evolve(m, f, kPi), Metric::standard);
  CHECK(hi / lo == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
  // and the grid never exceeds those bounds
  for (int i = 0; i < 50; ++i) {
    const double n = norm_metric(m, evolve(m, f, 4.0 * kPi * i / 49.0),
                                 Metric::standard);
    CHECK(n >= lo * (1.0 - 1e-12));
    CHECK(n <= hi * (1.0 + 1e-12));
  }
}

TEST_CASE("cauchy-schwarz under every convergent metric") {
  const SwansonModel m{SwansonParams{kPi / 16.0}};
  phlab::testing::Rng rng;
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = SExp::make({{rng.complex_in(-1.0, 1.0), 0, Family::phi},
                               {rng.complex_in(-1.0, 1.0), 2, Family::phi},
                               {cplx{1.0}, 3, Family::phi}});
    const auto g = SExp::make({{rng.complex_in(-1.0, 1.0), 1, Family::phi},
                               {cplx{1.0}, 2, Family::phi}});
    for (Metric metric : {Metric::standard, Metric::psi, Metric::phi}) {
      const double lhs = std::abs(inner_metric(m, f, g, metric));
      const double rhs =
          norm_metric(m, f, metric) * norm_metric(m, g, metric);
      CHECK(lhs <= rhs * (1.0 + 1e-10));
    }
  }
}

TEST_CASE("probability curves mark divergences as data") {
  const SwansonModel m{SwansonParams{kPi / 6.0}};
  const auto f0 = SExp::make({{1.0, 0, Family::phi}, {1.0, 1, Family::phi}});
  const auto ff = SExp::make({{1.0, 0, Family::psi}});
  const auto curve = compute_curve(m, f0, ff, Metric::psi,
                                   {0.0, 0.5, 1.0, 1.5});
  for (const auto& v : curve.values) CHECK_FALSE(v.has_value());
  const auto fine = compute_curve(m, f0, ff, Metric::standard,
                                  {0.0, 0.5, 1.0, 1.5});
  for (const auto& v : fine.values) {
    REQUIRE(v.has_value());
    CHECK(*v >= 0.0);
    CHECK(*v <= 1.0 + 1e-12);
  }
}

TEST_CASE("spectral coefficients recover the biorthogonal structure") {
  const EqhoModel m{EqhoParams{1.0}};
  const auto f = ephi({3});
  const auto rep = spectral_coefficients(m, f, Family::psi, 8);
  for (const auto& row : rep.rows) {
    const double want = row.ordinal == 3 ? 1.0 : 0.0;
    CHECK(std::abs(row.coeff - want) < 1e-12);
  }
  CHECK_FALSE(rep.tail_growth);
  CHECK(rep.reconstruction_residual < 1e-10);
}

TEST_CASE("spectral tails witness the restricted parameter range") {
  const SwansonModel inside{SwansonParams{kPi / 16.0}};
  const auto psi0 = SExp::make({{1.0, 0, Family::psi}});
  const auto ok = spectral_coefficients(inside, psi0, Family::psi, 64);
  CHECK_FALSE(ok.tail_growth);
  // the squared-coefficient tail reproduces the metric norm
  const double tail = ok.rows.back().partial_tail;
  CHECK(std::abs(tail - 1.0 / std::sqrt(std::cos(4.0 * kPi / 16.0))) < 1e-9);

  const SwansonModel outside{SwansonParams{kPi / 6.0}};
  const auto bad = spectral_coefficients(outside, psi0, Family::psi, 64);
  CHECK(bad.tail_growth);
}

TEST_CASE("periodicity of every curve") {
  const EqhoModel m{EqhoParams{1.0}};
  const auto f0 = ephi({0, 1});
  const auto ff = epsi({0});
  const double period = 2.0 * kPi / m.level_spacing();
  for (double t : {0.1, 0.9, 2.3})
    for (Metric metric : {Metric::standard, Metric::psi, Metric::phi})
      CHECK(std::abs(transition_probability(m, f0, ff, t, metric) -
                     transition_probability(m, f0, ff, t + period, metric)) <
            1e-10);
}
