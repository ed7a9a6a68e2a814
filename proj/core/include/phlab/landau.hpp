#pragma once

#include <utility>
#include <vector>

#include "phlab/polygauss.hpp"
#include "phlab/types.hpp"

namespace phlab {

struct LandauParams {
  double k1, k2;  // each in (-1/2, 1/2)
  LandauParams(double k1_, double k2_);
  /// the tighter range on which the phi-metric norms stay finite
  bool in_quarter() const;
};

/// Deformed Landau levels on the plane. Two pseudo-bosonic pairs
/// (A_1,B_1), (A_2,B_2) generate the biorthogonal families from separable
/// Gaussian vacua; the system evolves under H = B_1 A_1, whose eigenvalue
/// on phi_{n,l} is n, independent of l. The metric is the multiplication
/// operator S_psi = exp(k2 x^2 - k1 y^2).
class LandauModel {
 public:
  using State = PolyGauss2D;
  using Index = std::pair<int, int>;
  static constexpr bool two_dimensional = true;

  enum class Ladder { A1, B1, A2, B2, A1dag, B1dag, A2dag, B2dag };

  explicit LandauModel(LandauParams p) : p_(p) {}
  const LandauParams& params() const { return p_; }

  double eigenvalue(Index idx) const { return idx.first; }
  double level_spacing() const { return 1.0; }

  State vacuum(Family fam) const;
  State eigenstate(Family fam, Index idx) const;
  State apply_metric(const State& f, MetricDir dir) const;
  State ladder(const State& f, Ladder which) const;
  State apply_h(const State& f) const;   // B1 A1
  State apply_h1(const State& f) const;  // B1 A1 - 1/2
  State apply_h2(const State& f) const;  // B2 A2 - 1/2

  /// index pairs ordered by total degree then first index; at least nmax
  /// of them, whole diagonals kept intact
  std::vector<Index> spectral_order(int nmax) const;

 private:
  LandauParams p_;
};

}  // namespace phlab
