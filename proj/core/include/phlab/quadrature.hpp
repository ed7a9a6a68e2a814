#pragma once

#include <complex>
#include <functional>

namespace phlab {

using cplx = std::complex<double>;

struct QuadResult {
  cplx value;
  double err;  // absolute error estimate
};

/// Adaptive composite Simpson rule over a truncated interval [-L, L], with
/// L chosen from the caller-supplied Gaussian decay rate so the discarded
/// tail is below tol/10, and Richardson error estimation between successive
/// panel doublings. Independent of the closed-form moment path by design:
/// it sees the integrand only through point evaluation.
///
/// Throws InvalidDecay when decay_rate <= 0, ToleranceNotMet when the
/// refinement budget (max_doublings) runs out.
QuadResult integrate_1d(const std::function<cplx(double)>& f,
                        double decay_rate, double tol,
                        int max_doublings = 24);

/// Tensor-product application of integrate_1d semantics.
QuadResult integrate_2d(const std::function<cplx(double, double)>& f,
                        double decay_x, double decay_y, double tol,
                        int max_doublings = 24);

}  // namespace phlab
