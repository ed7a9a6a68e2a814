#pragma once

#include <vector>

#include "phlab/polygauss.hpp"
#include "phlab/types.hpp"

namespace phlab {

struct EqhoParams {
  double nu;
  explicit EqhoParams(double nu_);
};

/// Multiplication weight exp(-da x^2 + db x + dc).
struct GaussWeight1D {
  cplx da, db, dc;
};

/// Extended quantum harmonic oscillator. H = nu (B A + gamma) with
/// A = a - 1/nu, B = a* + 1/nu built from the usual bosonic pair; both
/// eigenfamilies are shifted Gaussians times polynomials, generated here
/// by exact operator recursion. The metric mapping phi_n to psi_n is the
/// multiplication operator exp(2/nu^2) exp(-2 sqrt(2) x / nu).
///
/// Normalization fixes <phi_n, psi_n> = 1 while keeping the metric map
/// exact, which pins the two family prefactors to 1 and exp(2/nu^2).
class EqhoModel {
 public:
  using State = PolyGauss1D;
  using Index = int;
  static constexpr bool two_dimensional = false;

  explicit EqhoModel(EqhoParams p) : p_(p) {}
  const EqhoParams& params() const { return p_; }

  double eigenvalue(int n) const;
  /// E_{n+1} - E_n, the period of every probability curve is 2 pi / this
  double level_spacing() const { return p_.nu; }

  State eigenstate(Family fam, int n) const;
  State apply_metric(const State& f, MetricDir dir) const;
  GaussWeight1D metric_weight(MetricDir dir) const;

  State raise(const State& f) const;  // B_nu
  State lower(const State& f) const;  // A_nu
  State apply_h(const State& f) const;

  std::vector<Index> spectral_order(int nmax) const;

 private:
  EqhoParams p_;
};

}  // namespace phlab
