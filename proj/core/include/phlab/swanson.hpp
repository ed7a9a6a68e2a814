#pragma once

#include <vector>

#include "phlab/polygauss.hpp"
#include "phlab/types.hpp"

namespace phlab {

struct SwansonParams {
  double theta;  // radians, in (-pi/4, pi/4) \ {0}
  explicit SwansonParams(double theta_);
  /// the tighter range on which the psi- and phi-metric norms stay finite
  bool in_I1() const;
};

/// Swanson oscillator. H = omega (B A + 1/2) with omega = 1/cos(2 theta);
/// the eigenfamilies are Hermite polynomials of the rotated argument
/// exp(+-i theta) x over complex Gaussian cores. The metric S_psi acts by
/// dilation, f(x) -> exp(-i theta) f(exp(-2 i theta) x); applying it to
/// psi states pushes the Gaussian core outside integrability once
/// |theta| >= pi/8, which is where the metric norms blow up.
class SwansonModel {
 public:
  using State = PolyGauss1D;
  using Index = int;
  static constexpr bool two_dimensional = false;

  enum class Ladder { A, B, Adag, Bdag };

  explicit SwansonModel(SwansonParams p) : p_(p) {}
  const SwansonParams& params() const { return p_; }

  double omega() const;
  double eigenvalue(int n) const;
  double level_spacing() const { return omega(); }

  State eigenstate(Family fam, int n) const;
  State apply_metric(const State& f, MetricDir dir) const;
  State ladder(const State& f, Ladder which) const;
  State apply_h(const State& f) const;

  std::vector<Index> spectral_order(int nmax) const;

 private:
  SwansonParams p_;
};

/// Coefficients of the n-th (physicists') Hermite polynomial via the
/// three-term recurrence H_{n+1}(u) = 2 u H_n(u) - 2 n H_{n-1}(u).
std::vector<double> hermite_coefficients(int n);

}  // namespace phlab
