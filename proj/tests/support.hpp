#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "phlab/polygauss.hpp"

namespace phlab::testing {

/// small deterministic generator for property-style checks
struct Rng {
  std::uint64_t seed = 0x243f6a8885a308d3ull;

  double uniform(double lo, double hi) {
    seed = seed * 6364136223846793005ull + 1442695040888963407ull;
    const double u =
        static_cast<double>(seed >> 11) / 9007199254740992.0;  // 2^53
    return lo + (hi - lo) * u;
  }
  cplx complex_in(double lo, double hi) {
    const double re = uniform(lo, hi);
    return {re, uniform(lo, hi)};
  }
  /// random self-integrable state of small degree
  PolyGauss1D state(int max_degree = 4) {
    const int deg = static_cast<int>(uniform(0.0, max_degree + 0.999));
    std::vector<cplx> poly(deg + 1);
    for (auto& p : poly) p = complex_in(-2.0, 2.0);
    if (poly.back() == cplx{0.0}) poly.back() = 1.0;
    const cplx a{uniform(0.2, 2.5), uniform(-1.0, 1.0)};
    return PolyGauss1D(poly, a, complex_in(-1.0, 1.0), complex_in(-0.4, 0.4));
  }
};

inline double rel(double got, double want) {
  return std::abs(got - want) /
         std::max({std::abs(got), std::abs(want), 1e-300});
}

}  // namespace phlab::testing
