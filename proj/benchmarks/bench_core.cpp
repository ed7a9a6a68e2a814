#include <benchmark/benchmark.h>

#include <numbers>

#include "phlab/dynamics.hpp"
#include "phlab/eqho.hpp"
#include "phlab/landau.hpp"
#include "phlab/quadrature.hpp"
#include "phlab/swanson.hpp"

using namespace phlab;

static void BM_GaussianMoment(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const cplx alpha{1.3, -0.4}, beta{0.7, 0.2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(gaussian_moment(n, alpha, beta));
  }
}
BENCHMARK(BM_GaussianMoment)->Arg(4)->Arg(20)->Arg(64);

static void BM_Inner1D(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const EqhoModel model{EqhoParams{1.0}};
  const auto f = model.eigenstate(Family::phi, n);
  const auto g = model.eigenstate(Family::psi, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(inner(f, g));
  }
}
BENCHMARK(BM_Inner1D)->Arg(2)->Arg(8)->Arg(20);

static void BM_EigenstateEqho(benchmark::State& state) {
  const EqhoModel model{EqhoParams{1.0}};
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(model.eigenstate(Family::phi, n));
  }
}
BENCHMARK(BM_EigenstateEqho)->Arg(4)->Arg(16)->Arg(64);

static void BM_EigenstateLandau(benchmark::State& state) {
  const LandauModel model{LandauParams{0.1, -0.15}};
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(model.eigenstate(Family::phi, {n, n}));
  }
}
BENCHMARK(BM_EigenstateLandau)->Arg(2)->Arg(6)->Arg(12);

static void BM_TransitionProbability(benchmark::State& state) {
  const SwansonModel model{SwansonParams{std::numbers::pi / 16.0}};
  using Exp = StateExpansion<SwansonModel>;
  const auto phi0 =
      Exp::make({{1.0, 0, Family::phi}, {1.0, 1, Family::phi}});
  const auto phif =
      Exp::make({{1.0, 0, Family::psi}, {1.0, 1, Family::psi}});
  double t = 0.0;
  for (auto _ : state) {
    t += 0.01;
    benchmark::DoNotOptimize(
        transition_probability(model, phi0, phif, t, Metric::psi));
  }
}
BENCHMARK(BM_TransitionProbability);

static void BM_SpectralNorm(benchmark::State& state) {
  const SwansonModel model{SwansonParams{std::numbers::pi / 16.0}};
  using Exp = StateExpansion<SwansonModel>;
  const auto psi0 = Exp::make({{1.0, 0, Family::psi}});
  const int nmax = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        inner_metric(model, psi0, psi0, Metric::psi, Method::spectral(nmax)));
  }
}
BENCHMARK(BM_SpectralNorm)->Arg(16)->Arg(64);

static void BM_QuadratureOracle(benchmark::State& state) {
  const EqhoModel model{EqhoParams{1.0}};
  const auto f = model.eigenstate(Family::phi, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate_1d(
        [&](double x) { return std::conj(f(x)) * f(x); }, 1.0, 1e-10));
  }
}
BENCHMARK(BM_QuadratureOracle);

BENCHMARK_MAIN();
