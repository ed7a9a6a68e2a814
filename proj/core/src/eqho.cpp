#include "phlab/eqho.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace phlab {

namespace {
const double kPiQuarterRoot = std::pow(std::numbers::pi, -0.25);
}

EqhoParams::EqhoParams(double nu_) : nu(nu_) {
  if (!(nu > 0.0))
    throw std::invalid_argument("EqhoParams: nu must be strictly positive");
}

double EqhoModel::eigenvalue(int n) const {
  const double nu = p_.nu;
  const double gamma = (2.0 + nu * nu) / (2.0 * nu * nu);
  return nu * (static_cast<double>(n) + gamma);
}

EqhoModel::State EqhoModel::eigenstate(Family fam, int n) const {
  if (n < 0) throw std::invalid_argument("eigenstate: n must be >= 0");
  const double s = std::numbers::sqrt2 / p_.nu;
  const double shift = fam == Family::phi ? s : -s;
  // seed exp(-(x - shift)^2 / 2) expanded into exponent form
  PolyGauss1D state({1.0}, 0.5, shift, -0.5 * shift * shift);
  // n-fold raising (x - d/dx +- s), then the family prefactor over
  // pi^(1/4) sqrt(2^n n!)
  double norm = 1.0;
  for (int k = 0; k < n; ++k) {
    state = state.times_poly({shift, 1.0}).plus(state.derivative().scaled(-1.0));
    norm *= 2.0 * (k + 1);
  }
  double pref = kPiQuarterRoot / std::sqrt(norm);
  if (fam == Family::psi) pref *= std::exp(s * s);
  return state.scaled(pref);
}

GaussWeight1D EqhoModel::metric_weight(MetricDir dir) const {
  const double nu = p_.nu;
  GaussWeight1D w{0.0, -2.0 * std::numbers::sqrt2 / nu, 2.0 / (nu * nu)};
  if (dir == MetricDir::to_phi) {
    w.db = -w.db;
    w.dc = -w.dc;
  }
  return w;
}

EqhoModel::State EqhoModel::apply_metric(const State& f, MetricDir dir) const {
  const GaussWeight1D w = metric_weight(dir);
  return f.times_gauss(w.da, w.db, w.dc);
}

EqhoModel::State EqhoModel::lower(const State& f) const {
  // A = (x + d/dx)/sqrt(2) - 1/nu
  const double r = 1.0 / std::numbers::sqrt2;
  return f.times_poly({-1.0 / p_.nu, r}).plus(f.derivative().scaled(r));
}

EqhoModel::State EqhoModel::raise(const State& f) const {
  // B = (x - d/dx)/sqrt(2) + 1/nu
  const double r = 1.0 / std::numbers::sqrt2;
  return f.times_poly({1.0 / p_.nu, r}).plus(f.derivative().scaled(-r));
}

EqhoModel::State EqhoModel::apply_h(const State& f) const {
  const double nu = p_.nu;
  const double gamma = (2.0 + nu * nu) / (2.0 * nu * nu);
  return raise(lower(f)).scaled(nu).plus(f.scaled(nu * gamma));
}

std::vector<int> EqhoModel::spectral_order(int nmax) const {
  std::vector<int> out(nmax);
  for (int i = 0; i < nmax; ++i) out[i] = i;
  return out;
}

}  // namespace phlab
