#include "phlab/swanson.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace phlab {

namespace {
const double kPiQuarterRoot = std::pow(std::numbers::pi, -0.25);
constexpr cplx kI{0.0, 1.0};
}  // namespace

SwansonParams::SwansonParams(double theta_) : theta(theta_) {
  if (!(std::abs(theta) < std::numbers::pi / 4.0) || theta == 0.0)
    throw std::invalid_argument(
        "SwansonParams: theta must lie in (-pi/4, pi/4) excluding 0");
}

bool SwansonParams::in_I1() const {
  return std::abs(theta) < std::numbers::pi / 8.0;
}

std::vector<double> hermite_coefficients(int n) {
  std::vector<double> prev{1.0};               // H_0
  if (n == 0) return prev;
  std::vector<double> cur{0.0, 2.0};           // H_1
  for (int k = 1; k < n; ++k) {
    std::vector<double> next(k + 2, 0.0);
    for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] += 2.0 * cur[j];
    for (std::size_t j = 0; j < prev.size(); ++j)
      next[j] -= 2.0 * static_cast<double>(k) * prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

double SwansonModel::omega() const { return 1.0 / std::cos(2.0 * p_.theta); }

double SwansonModel::eigenvalue(int n) const {
  return omega() * (static_cast<double>(n) + 0.5);
}

SwansonModel::State SwansonModel::eigenstate(Family fam, int n) const {
  if (n < 0) throw std::invalid_argument("eigenstate: n must be >= 0");
  const double sign = fam == Family::phi ? 1.0 : -1.0;
  const cplx rot = std::exp(kI * (sign * p_.theta));
  // H_n(rot x): coefficient k picks up rot^k
  const std::vector<double> h = hermite_coefficients(n);
  std::vector<cplx> poly(h.size());
  cplx pw = 1.0;
  double norm = 1.0;
  for (int k = 0; k < static_cast<int>(h.size()); ++k) {
    poly[k] = h[k] * pw;
    pw *= rot;
  }
  for (int k = 1; k <= n; ++k) norm *= 2.0 * k;
  const cplx pref =
      std::exp(kI * (sign * p_.theta / 2.0)) * kPiQuarterRoot / std::sqrt(norm);
  const cplx a = 0.5 * rot * rot;
  PolyGauss1D state(std::move(poly), a, 0.0, 0.0);
  return state.scaled(pref);
}

SwansonModel::State SwansonModel::apply_metric(const State& f,
                                               MetricDir dir) const {
  // S_psi f = exp(-i theta) f(exp(-2 i theta) x); S_phi is the inverse.
  const double sign = dir == MetricDir::to_psi ? -1.0 : 1.0;
  const cplx lambda = std::exp(kI * (sign * 2.0 * p_.theta));
  const cplx pref = std::exp(kI * (sign * p_.theta));
  return f.scaled_arg(lambda, pref);
}

SwansonModel::State SwansonModel::ladder(const State& f, Ladder which) const {
  const cplx e = std::exp(kI * p_.theta);
  const cplx ec = std::conj(e);
  const double r = 1.0 / std::numbers::sqrt2;
  cplx mul, dif;
  switch (which) {
    case Ladder::A: mul = e; dif = ec; break;         // (e x + e* d/dx)/sqrt2
    case Ladder::B: mul = e; dif = -ec; break;
    case Ladder::Adag: mul = ec; dif = -e; break;
    case Ladder::Bdag: mul = ec; dif = e; break;
  }
  return f.times_poly({0.0, r * mul}).plus(f.derivative().scaled(r * dif));
}

SwansonModel::State SwansonModel::apply_h(const State& f) const {
  const State baf = ladder(ladder(f, Ladder::A), Ladder::B);
  return baf.plus(f.scaled(0.5)).scaled(omega());
}

std::vector<int> SwansonModel::spectral_order(int nmax) const {
  std::vector<int> out(nmax);
  for (int i = 0; i < nmax; ++i) out[i] = i;
  return out;
}

}  // namespace phlab
