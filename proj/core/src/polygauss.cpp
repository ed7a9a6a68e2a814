#include "phlab/polygauss.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "phlab/errors.hpp"

namespace phlab {

namespace {

bool exact_zero(cplx z) { return z.real() == 0.0 && z.imag() == 0.0; }

}  // namespace

PolyGauss1D::PolyGauss1D(std::vector<cplx> poly, cplx a, cplx b, cplx c)
    : poly_(std::move(poly)), a_(a), b_(b), c_(c) {
  trim();
}

PolyGauss1D PolyGauss1D::zero() { return PolyGauss1D({}, 0.0, 0.0, 0.0); }

void PolyGauss1D::trim() {
  while (!poly_.empty() && exact_zero(poly_.back())) poly_.pop_back();
}

cplx PolyGauss1D::operator()(double x) const {
  if (is_zero()) return 0.0;
  cplx p = 0.0;
  for (auto it = poly_.rbegin(); it != poly_.rend(); ++it) p = p * x + *it;
  return p * std::exp(-a_ * x * x + b_ * x + c_);
}

PolyGauss1D PolyGauss1D::derivative() const {
  if (is_zero()) return zero();
  // (P e^E)' = (P' + P E') e^E with E' = -2a x + b
  std::vector<cplx> out(poly_.size() + 1, 0.0);
  for (std::size_t k = 1; k < poly_.size(); ++k)
    out[k - 1] += static_cast<double>(k) * poly_[k];
  for (std::size_t k = 0; k < poly_.size(); ++k) {
    out[k + 1] += -2.0 * a_ * poly_[k];
    out[k] += b_ * poly_[k];
  }
  return PolyGauss1D(std::move(out), a_, b_, c_);
}

PolyGauss1D PolyGauss1D::times_poly(const std::vector<cplx>& q) const {
  if (is_zero()) return zero();
  std::vector<cplx> qq = q;
  while (!qq.empty() && exact_zero(qq.back())) qq.pop_back();
  if (qq.empty()) return zero();
  std::vector<cplx> out(poly_.size() + qq.size() - 1, 0.0);
  for (std::size_t i = 0; i < poly_.size(); ++i)
    for (std::size_t j = 0; j < qq.size(); ++j) out[i + j] += poly_[i] * qq[j];
  return PolyGauss1D(std::move(out), a_, b_, c_);
}

PolyGauss1D PolyGauss1D::times_gauss(cplx da, cplx db, cplx dc) const {
  if (is_zero()) return zero();
  return PolyGauss1D(poly_, a_ + da, b_ + db, c_ + dc);
}

PolyGauss1D PolyGauss1D::scaled_arg(cplx lambda, cplx prefactor) const {
  if (exact_zero(lambda)) throw ZeroScale();
  if (is_zero()) return zero();
  std::vector<cplx> out(poly_.size());
  cplx pw = 1.0;
  for (std::size_t k = 0; k < poly_.size(); ++k) {
    out[k] = prefactor * poly_[k] * pw;
    pw *= lambda;
  }
  return PolyGauss1D(std::move(out), a_ * lambda * lambda, b_ * lambda, c_);
}

PolyGauss1D PolyGauss1D::conjugated() const {
  std::vector<cplx> out(poly_.size());
  for (std::size_t k = 0; k < poly_.size(); ++k) out[k] = std::conj(poly_[k]);
  return PolyGauss1D(std::move(out), std::conj(a_), std::conj(b_),
                     std::conj(c_));
}

PolyGauss1D PolyGauss1D::scaled(cplx factor) const {
  if (is_zero() || exact_zero(factor)) return zero();
  std::vector<cplx> out(poly_.size());
  for (std::size_t k = 0; k < poly_.size(); ++k) out[k] = factor * poly_[k];
  return PolyGauss1D(std::move(out), a_, b_, c_);
}

PolyGauss1D PolyGauss1D::plus(const PolyGauss1D& other) const {
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  if (a_ != other.a_ || b_ != other.b_)
    throw std::invalid_argument(
        "PolyGauss1D::plus: exponents differ, sum is not a PolyGauss");
  // fold the c difference into the other polynomial
  cplx rel = std::exp(other.c_ - c_);
  std::vector<cplx> out(std::max(poly_.size(), other.poly_.size()), 0.0);
  for (std::size_t k = 0; k < poly_.size(); ++k) out[k] += poly_[k];
  for (std::size_t k = 0; k < other.poly_.size(); ++k)
    out[k] += rel * other.poly_[k];
  return PolyGauss1D(std::move(out), a_, b_, c_);
}

cplx gaussian_moment(int n, cplx alpha, cplx beta) {
  if (n < 0) throw std::invalid_argument("gaussian_moment: n must be >= 0");
  if (alpha.real() <= 0.0)
    throw DivergentIntegral("gaussian_moment: Re(alpha) <= 0");
  const cplx m0 =
      std::sqrt(std::numbers::pi / alpha) * std::exp(beta * beta / (4.0 * alpha));
  if (n == 0) return m0;
  const cplx m1 = beta / (2.0 * alpha) * m0;
  if (n == 1) return m1;
  cplx prev2 = m0, prev1 = m1, cur = 0.0;
  for (int k = 2; k <= n; ++k) {
    cur = (beta * prev1 + static_cast<double>(k - 1) * prev2) / (2.0 * alpha);
    prev2 = prev1;
    prev1 = cur;
  }
  return cur;
}

cplx inner(const PolyGauss1D& f, const PolyGauss1D& g) {
  if (f.is_zero() || g.is_zero()) return 0.0;
  const cplx alpha = std::conj(f.a()) + g.a();
  if (alpha.real() <= 0.0)
    throw DivergentIntegral("inner: combined exponent does not decay");
  const cplx beta = std::conj(f.b()) + g.b();
  const cplx pref = std::exp(std::conj(f.c()) + g.c());
  const auto& p = f.coeffs();
  const auto& q = g.coeffs();
  std::vector<cplx> conv(p.size() + q.size() - 1, 0.0);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j)
      conv[i + j] += std::conj(p[i]) * q[j];
  cplx sum = 0.0;
  for (std::size_t k = 0; k < conv.size(); ++k)
    sum += conv[k] * gaussian_moment(static_cast<int>(k), alpha, beta);
  return pref * sum;
}

double coeff_scale(const PolyGauss1D& f) {
  double s = 0.0;
  const double ec = std::abs(std::exp(f.c()));
  for (cplx p : f.coeffs()) s = std::max(s, std::abs(p) * ec);
  return s;
}

double residual(const PolyGauss1D& f, const PolyGauss1D& g) {
  if (f.is_zero() && g.is_zero()) return 0.0;
  if (f.is_zero()) return coeff_scale(g);
  if (g.is_zero()) return coeff_scale(f);
  double r = std::max(std::abs(f.a() - g.a()), std::abs(f.b() - g.b()));
  const cplx ef = std::exp(f.c());
  const cplx eg = std::exp(g.c());
  const std::size_t n = std::max(f.coeffs().size(), g.coeffs().size());
  for (std::size_t k = 0; k < n; ++k) {
    const cplx pf = k < f.coeffs().size() ? f.coeffs()[k] : cplx{0.0};
    const cplx pg = k < g.coeffs().size() ? g.coeffs()[k] : cplx{0.0};
    r = std::max(r, std::abs(ef * pf - eg * pg));
  }
  return r;
}

// ---------------------------------------------------------------- 2D

PolyGauss2D::PolyGauss2D(PolyMap poly, cplx ax, cplx ay, cplx bx, cplx by,
                         cplx c)
    : poly_(std::move(poly)), ax_(ax), ay_(ay), bx_(bx), by_(by), c_(c) {
  prune();
}

PolyGauss2D PolyGauss2D::zero() {
  return PolyGauss2D({}, 0.0, 0.0, 0.0, 0.0, 0.0);
}

void PolyGauss2D::prune() {
  double top = 0.0;
  for (const auto& [k, v] : poly_) top = std::max(top, std::abs(v));
  // ladder applications interleave x and y terms with exact cancellations;
  // entries far below the dominant coefficient are cancellation residue
  const double floor = 1e-15 * top;
  for (auto it = poly_.begin(); it != poly_.end();)
    it = (std::abs(it->second) <= floor) ? poly_.erase(it) : std::next(it);
}

cplx PolyGauss2D::operator()(double x, double y) const {
  if (is_zero()) return 0.0;
  cplx p = 0.0;
  for (const auto& [key, v] : poly_)
    p += v * std::pow(x, key.first) * std::pow(y, key.second);
  return p * std::exp(-ax_ * x * x - ay_ * y * y + bx_ * x + by_ * y + c_);
}

PolyGauss2D PolyGauss2D::derivative(Axis axis) const {
  if (is_zero()) return zero();
  PolyMap out;
  for (const auto& [key, v] : poly_) {
    const auto [i, j] = key;
    if (axis == Axis::x) {
      if (i > 0) out[{i - 1, j}] += static_cast<double>(i) * v;
      out[{i + 1, j}] += -2.0 * ax_ * v;
      out[{i, j}] += bx_ * v;
    } else {
      if (j > 0) out[{i, j - 1}] += static_cast<double>(j) * v;
      out[{i, j + 1}] += -2.0 * ay_ * v;
      out[{i, j}] += by_ * v;
    }
  }
  return PolyGauss2D(std::move(out), ax_, ay_, bx_, by_, c_);
}

PolyGauss2D PolyGauss2D::times_poly(const PolyMap& q) const {
  if (is_zero() || q.empty()) return zero();
  PolyMap out;
  for (const auto& [kp, vp] : poly_)
    for (const auto& [kq, vq] : q)
      out[{kp.first + kq.first, kp.second + kq.second}] += vp * vq;
  return PolyGauss2D(std::move(out), ax_, ay_, bx_, by_, c_);
}

PolyGauss2D PolyGauss2D::times_linear(cplx cx, cplx cy, cplx c0) const {
  PolyMap q;
  if (!exact_zero(cx)) q[{1, 0}] = cx;
  if (!exact_zero(cy)) q[{0, 1}] = cy;
  if (!exact_zero(c0)) q[{0, 0}] = c0;
  return times_poly(q);
}

PolyGauss2D PolyGauss2D::times_gauss(cplx dax, cplx day, cplx dbx, cplx dby,
                                     cplx dc) const {
  if (is_zero()) return zero();
  return PolyGauss2D(poly_, ax_ + dax, ay_ + day, bx_ + dbx, by_ + dby,
                     c_ + dc);
}

PolyGauss2D PolyGauss2D::conjugated() const {
  PolyMap out;
  for (const auto& [k, v] : poly_) out[k] = std::conj(v);
  return PolyGauss2D(std::move(out), std::conj(ax_), std::conj(ay_),
                     std::conj(bx_), std::conj(by_), std::conj(c_));
}

PolyGauss2D PolyGauss2D::scaled(cplx factor) const {
  if (is_zero() || exact_zero(factor)) return zero();
  PolyMap out;
  for (const auto& [k, v] : poly_) out[k] = factor * v;
  return PolyGauss2D(std::move(out), ax_, ay_, bx_, by_, c_);
}

PolyGauss2D PolyGauss2D::plus(const PolyGauss2D& other) const {
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  if (ax_ != other.ax_ || ay_ != other.ay_ || bx_ != other.bx_ ||
      by_ != other.by_)
    throw std::invalid_argument(
        "PolyGauss2D::plus: exponents differ, sum is not a PolyGauss");
  const cplx rel = std::exp(other.c_ - c_);
  PolyMap out = poly_;
  for (const auto& [k, v] : other.poly_) out[k] += rel * v;
  return PolyGauss2D(std::move(out), ax_, ay_, bx_, by_, c_);
}

cplx inner(const PolyGauss2D& f, const PolyGauss2D& g) {
  if (f.is_zero() || g.is_zero()) return 0.0;
  const cplx alx = std::conj(f.ax()) + g.ax();
  const cplx aly = std::conj(f.ay()) + g.ay();
  if (alx.real() <= 0.0 || aly.real() <= 0.0)
    throw DivergentIntegral("inner(2d): combined exponent does not decay");
  const cplx btx = std::conj(f.bx()) + g.bx();
  const cplx bty = std::conj(f.by()) + g.by();
  const cplx pref = std::exp(std::conj(f.c()) + g.c());

  PolyGauss2D::PolyMap conv;
  int degx = 0, degy = 0;
  for (const auto& [kf, vf] : f.coeffs())
    for (const auto& [kg, vg] : g.coeffs()) {
      const int i = kf.first + kg.first;
      const int j = kf.second + kg.second;
      conv[{i, j}] += std::conj(vf) * vg;
      degx = std::max(degx, i);
      degy = std::max(degy, j);
    }
  std::vector<cplx> mx(degx + 1), my(degy + 1);
  for (int i = 0; i <= degx; ++i) mx[i] = gaussian_moment(i, alx, btx);
  for (int j = 0; j <= degy; ++j) my[j] = gaussian_moment(j, aly, bty);
  cplx sum = 0.0;
  for (const auto& [k, v] : conv) sum += v * mx[k.first] * my[k.second];
  return pref * sum;
}

double coeff_scale(const PolyGauss2D& f) {
  double s = 0.0;
  const double ec = std::abs(std::exp(f.c()));
  for (const auto& [k, v] : f.coeffs()) s = std::max(s, std::abs(v) * ec);
  return s;
}

double residual(const PolyGauss2D& f, const PolyGauss2D& g) {
  if (f.is_zero() && g.is_zero()) return 0.0;
  if (f.is_zero()) return coeff_scale(g);
  if (g.is_zero()) return coeff_scale(f);
  double r = std::max(
      {std::abs(f.ax() - g.ax()), std::abs(f.ay() - g.ay()),
       std::abs(f.bx() - g.bx()), std::abs(f.by() - g.by())});
  const cplx ef = std::exp(f.c());
  const cplx eg = std::exp(g.c());
  auto it = f.coeffs().begin();
  auto jt = g.coeffs().begin();
  while (it != f.coeffs().end() || jt != g.coeffs().end()) {
    if (jt == g.coeffs().end() ||
        (it != f.coeffs().end() && it->first < jt->first)) {
      r = std::max(r, std::abs(ef * it->second));
      ++it;
    } else if (it == f.coeffs().end() || jt->first < it->first) {
      r = std::max(r, std::abs(eg * jt->second));
      ++jt;
    } else {
      r = std::max(r, std::abs(ef * it->second - eg * jt->second));
      ++it;
      ++jt;
    }
  }
  return r;
}

}  // namespace phlab
