#include "phlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "phlab/errors.hpp"

namespace phlab {

namespace {

// composite Simpson on [-L, L] with n panels (n even)
cplx simpson(const std::function<cplx(double)>& f, double L, long n) {
  const double h = 2.0 * L / static_cast<double>(n);
  cplx s = f(-L) + f(L);
  for (long i = 1; i < n; ++i) {
    const double x = -L + h * static_cast<double>(i);
    s += f(x) * ((i % 2 == 1) ? 4.0 : 2.0);
  }
  return s * (h / 3.0);
}

double truncation_radius(const std::function<cplx(double)>& f,
                         double decay_rate, double tol) {
  // the radius is chosen for a floored tolerance so that loosening or
  // tightening tol reuses the same nested grids; this keeps the returned
  // error estimate monotone under tolerance halving
  const double tail_tol = std::min(tol, 1e-13);
  const double scale = std::max(std::abs(f(0.0)), 1.0);
  double L = std::sqrt(std::log(10.0 * scale / tail_tol) / decay_rate);
  L = std::max(L, 1.0);
  // the Gaussian bound ignores polynomial growth in the prefactor, so
  // extend until the boundary values themselves are negligible
  const double Lmax = 64.0 * L;
  while (L < Lmax) {
    const double edge =
        std::max(std::abs(f(L)), std::abs(f(-L))) * std::max(2.0 * L, 1.0);
    if (edge <= tail_tol / 10.0) break;
    L *= 1.25;
  }
  return L;
}

}  // namespace

QuadResult integrate_1d(const std::function<cplx(double)>& f,
                        double decay_rate, double tol, int max_doublings) {
  if (decay_rate <= 0.0)
    throw InvalidDecay("integrate_1d: decay_rate must be > 0");
  if (tol <= 0.0) throw std::invalid_argument("integrate_1d: tol must be > 0");

  const double L = truncation_radius(f, decay_rate, tol);

  long n = 16;
  cplx prev = simpson(f, L, n);
  const long node_cap = 1L << 21;  // runtime guard
  for (int d = 0; d < max_doublings && n <= node_cap; ++d) {
    n *= 2;
    const cplx cur = simpson(f, L, n);
    // Simpson halves the step with fourth-order convergence; tol acts
    // relative to the integral scale once that scale exceeds one
    const double err = std::abs(cur - prev) / 15.0;
    if (err <= tol * std::max(1.0, std::abs(cur))) return {cur, err};
    prev = cur;
  }
  throw ToleranceNotMet("integrate_1d: refinement stalled before reaching tol");
}

QuadResult integrate_2d(const std::function<cplx(double, double)>& f,
                        double decay_x, double decay_y, double tol,
                        int max_doublings) {
  if (decay_x <= 0.0 || decay_y <= 0.0)
    throw InvalidDecay("integrate_2d: decay rates must be > 0");
  if (tol <= 0.0) throw std::invalid_argument("integrate_2d: tol must be > 0");

  const auto center = [&](double x) { return f(x, 0.0); };
  const double Lx = truncation_radius(center, decay_x, tol);
  const double inner_tol = tol / (16.0 * Lx);

  double worst_inner = 0.0;
  const auto outer = [&](double x) {
    const QuadResult r = integrate_1d(
        [&](double y) { return f(x, y); }, decay_y, inner_tol, max_doublings);
    worst_inner = std::max(worst_inner, r.err);
    return r.value;
  };
  // the outer integrand is as smooth as f itself; reuse the 1d driver
  const QuadResult out =
      integrate_1d(outer, decay_x, tol / 2.0, max_doublings);
  return {out.value, out.err + 2.0 * Lx * worst_inner};
}

}  // namespace phlab
