#include "phlab/landau.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace phlab {

namespace {
constexpr cplx kI{0.0, 1.0};
}

LandauParams::LandauParams(double k1_, double k2_) : k1(k1_), k2(k2_) {
  if (!(std::abs(k1) < 0.5) || !(std::abs(k2) < 0.5))
    throw std::invalid_argument(
        "LandauParams: k1 and k2 must lie in (-1/2, 1/2)");
}

bool LandauParams::in_quarter() const {
  return std::max(std::abs(k1), std::abs(k2)) < 0.25;
}

LandauModel::State LandauModel::vacuum(Family fam) const {
  const double sign = fam == Family::phi ? 1.0 : -1.0;
  const double ax = (1.0 + sign * 2.0 * p_.k2) / 4.0;
  const double ay = (1.0 - sign * 2.0 * p_.k1) / 4.0;
  const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  return PolyGauss2D({{{0, 0}, norm}}, ax, ay, 0.0, 0.0, 0.0);
}

LandauModel::State LandauModel::ladder(const State& f, Ladder which) const {
  const double k1 = p_.k1, k2 = p_.k2;
  const double up = (1.0 + 2.0 * k2) / 2.0;   // x coefficient scale, +k2
  const double um = (1.0 - 2.0 * k2) / 2.0;
  const double vp = (1.0 + 2.0 * k1) / 2.0;   // y coefficient scale, +k1
  const double vm = (1.0 - 2.0 * k1) / 2.0;
  cplx dx, dy, mx, my;
  switch (which) {
    case Ladder::A1:    dx = 1.0;  dy = -kI; mx = up;       my = -kI * vm; break;
    case Ladder::B1:    dx = -1.0; dy = -kI; mx = um;       my = kI * vp;  break;
    case Ladder::A2:    dx = -kI;  dy = 1.0; mx = -kI * up; my = vm;       break;
    case Ladder::B2:    dx = -kI;  dy = -1.0; mx = kI * um; my = vp;       break;
    case Ladder::A1dag: dx = -1.0; dy = -kI; mx = up;       my = kI * vm;  break;
    case Ladder::B1dag: dx = 1.0;  dy = -kI; mx = um;       my = -kI * vp; break;
    case Ladder::A2dag: dx = -kI;  dy = -1.0; mx = kI * up; my = vm;       break;
    case Ladder::B2dag: dx = -kI;  dy = 1.0; mx = -kI * um; my = vp;       break;
  }
  const double r = 1.0 / std::numbers::sqrt2;
  State out = f.derivative(State::Axis::x).scaled(r * dx);
  out = out.plus(f.derivative(State::Axis::y).scaled(r * dy));
  out = out.plus(f.times_linear(r * mx, r * my, 0.0));
  return out;
}

LandauModel::State LandauModel::eigenstate(Family fam, Index idx) const {
  const auto [n, l] = idx;
  if (n < 0 || l < 0)
    throw std::invalid_argument("eigenstate: indices must be >= 0");
  State state = vacuum(fam);
  const Ladder raise1 = fam == Family::phi ? Ladder::B1 : Ladder::A1dag;
  const Ladder raise2 = fam == Family::phi ? Ladder::B2 : Ladder::A2dag;
  double norm = 1.0;
  for (int k = 0; k < n; ++k) {
    state = ladder(state, raise1);
    norm *= k + 1;
  }
  for (int k = 0; k < l; ++k) {
    state = ladder(state, raise2);
    norm *= k + 1;
  }
  return state.scaled(1.0 / std::sqrt(norm));
}

LandauModel::State LandauModel::apply_metric(const State& f,
                                             MetricDir dir) const {
  // S_psi = exp(k2 x^2 - k1 y^2), S_phi its inverse
  const double sign = dir == MetricDir::to_psi ? 1.0 : -1.0;
  return f.times_gauss(-sign * p_.k2, sign * p_.k1, 0.0, 0.0, 0.0);
}

LandauModel::State LandauModel::apply_h(const State& f) const {
  return ladder(ladder(f, Ladder::A1), Ladder::B1);
}

LandauModel::State LandauModel::apply_h1(const State& f) const {
  return apply_h(f).plus(f.scaled(-0.5));
}

LandauModel::State LandauModel::apply_h2(const State& f) const {
  return ladder(ladder(f, Ladder::A2), Ladder::B2).plus(f.scaled(-0.5));
}

std::vector<LandauModel::Index> LandauModel::spectral_order(int nmax) const {
  std::vector<Index> out;
  for (int total = 0; static_cast<int>(out.size()) < nmax; ++total)
    for (int n = total; n >= 0; --n) out.emplace_back(n, total - n);
  return out;
}

}  // namespace phlab
