#pragma once

#include <complex>
#include <map>
#include <utility>
#include <vector>

namespace phlab {

using cplx = std::complex<double>;

/// Exact representation of P(x) * exp(-a x^2 + b x + c) with complex
/// polynomial coefficients and complex exponent parameters. The zero
/// state is the empty polynomial. All operations are pure; values are
/// immutable after construction.
class PolyGauss1D {
 public:
  PolyGauss1D(std::vector<cplx> poly, cplx a, cplx b = 0.0, cplx c = 0.0);

  static PolyGauss1D zero();

  const std::vector<cplx>& coeffs() const { return poly_; }
  cplx a() const { return a_; }
  cplx b() const { return b_; }
  cplx c() const { return c_; }
  int degree() const { return static_cast<int>(poly_.size()) - 1; }
  bool is_zero() const { return poly_.empty(); }

  /// integral of |f|^2 over the line exists iff Re(a) > 0
  bool self_integrable() const { return a_.real() > 0.0; }

  cplx operator()(double x) const;

  PolyGauss1D derivative() const;
  PolyGauss1D times_poly(const std::vector<cplx>& q) const;
  /// multiply by exp(-da x^2 + db x + dc); exponent parameters add
  PolyGauss1D times_gauss(cplx da, cplx db, cplx dc) const;
  /// prefactor * f(lambda x); throws ZeroScale when lambda == 0
  PolyGauss1D scaled_arg(cplx lambda, cplx prefactor) const;
  PolyGauss1D conjugated() const;
  PolyGauss1D scaled(cplx factor) const;
  /// sum of two states sharing the same exponent (a, b, c may differ in the
  /// c slot; it is folded into the coefficients)
  PolyGauss1D plus(const PolyGauss1D& other) const;

 private:
  std::vector<cplx> poly_;
  cplx a_{0.0}, b_{0.0}, c_{0.0};

  void trim();
};

/// M_n = integral x^n exp(-alpha x^2 + beta x) dx over the real line.
/// Requires Re(alpha) > 0, else DivergentIntegral.
cplx gaussian_moment(int n, cplx alpha, cplx beta);

/// <f,g> = integral conj(f) g, conjugate-linear in the first slot.
/// Throws DivergentIntegral when the combined exponent does not decay.
cplx inner(const PolyGauss1D& f, const PolyGauss1D& g);

/// Value-space distance between two states: exponent mismatch plus the
/// worst coefficient mismatch after folding e^c into the coefficients.
double residual(const PolyGauss1D& f, const PolyGauss1D& g);

/// max |e^c p_k|, the natural scale for relative residuals
double coeff_scale(const PolyGauss1D& f);

/// Separable 2D analogue: P(x,y) * exp(-ax x^2 - ay y^2 + bx x + by y + c)
/// with a degree-pair coefficient map. No x*y cross term in the exponent.
class PolyGauss2D {
 public:
  using Key = std::pair<int, int>;
  using PolyMap = std::map<Key, cplx>;

  PolyGauss2D(PolyMap poly, cplx ax, cplx ay, cplx bx = 0.0, cplx by = 0.0,
              cplx c = 0.0);

  static PolyGauss2D zero();

  const PolyMap& coeffs() const { return poly_; }
  cplx ax() const { return ax_; }
  cplx ay() const { return ay_; }
  cplx bx() const { return bx_; }
  cplx by() const { return by_; }
  cplx c() const { return c_; }
  bool is_zero() const { return poly_.empty(); }
  bool self_integrable() const {
    return ax_.real() > 0.0 && ay_.real() > 0.0;
  }

  cplx operator()(double x, double y) const;

  enum class Axis { x, y };
  PolyGauss2D derivative(Axis axis) const;
  PolyGauss2D times_poly(const PolyMap& q) const;
  /// multiply by (cx * x + cy * y + c0)
  PolyGauss2D times_linear(cplx cx, cplx cy, cplx c0) const;
  /// multiply by exp(-dax x^2 - day y^2 + dbx x + dby y + dc)
  PolyGauss2D times_gauss(cplx dax, cplx day, cplx dbx, cplx dby,
                          cplx dc) const;
  PolyGauss2D conjugated() const;
  PolyGauss2D scaled(cplx factor) const;
  PolyGauss2D plus(const PolyGauss2D& other) const;

 private:
  PolyMap poly_;
  cplx ax_{0.0}, ay_{0.0}, bx_{0.0}, by_{0.0}, c_{0.0};

  void prune();
};

cplx inner(const PolyGauss2D& f, const PolyGauss2D& g);
double residual(const PolyGauss2D& f, const PolyGauss2D& g);
double coeff_scale(const PolyGauss2D& f);

}  // namespace phlab
