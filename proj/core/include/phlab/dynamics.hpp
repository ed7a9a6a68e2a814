#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <set>
#include <string>
#include <type_traits>
#include <vector>

#include "phlab/errors.hpp"
#include "phlab/polygauss.hpp"
#include "phlab/quadrature.hpp"
#include "phlab/types.hpp"

namespace phlab {

/// How an inner product is evaluated. closed_form applies the model's
/// metric operator exactly and sums Gaussian moments; spectral expands
/// against an eigenfamily and watches the tail, serving as an independent
/// divergence witness; oracle hands the integrand to adaptive quadrature.
struct Method {
  enum class Kind { closed_form, spectral, oracle };
  Kind kind = Kind::closed_form;
  int nmax = 64;
  double tol = 1e-10;

  static Method closed_form() { return {}; }
  static Method spectral(int nmax = 64) {
    return {Kind::spectral, nmax, 1e-10};
  }
  static Method oracle(double tol = 1e-10) {
    return {Kind::oracle, 64, tol};
  }
};

/// Finite linear combination of model eigenfunctions, tagged by family.
template <class Model>
struct StateExpansion {
  struct Term {
    cplx coeff;
    typename Model::Index index;
    Family family;
  };
  std::vector<Term> terms;

  static StateExpansion make(std::vector<Term> terms_in) {
    if (terms_in.empty())
      throw std::invalid_argument("StateExpansion: at least one term");
    bool any_nonzero = false;
    std::set<std::pair<int, typename Model::Index>> seen;
    for (const auto& t : terms_in) {
      if (t.coeff != cplx{0.0}) any_nonzero = true;
      if (!seen.insert({t.family == Family::phi ? 0 : 1, t.index}).second)
        throw std::invalid_argument(
            "StateExpansion: duplicate index within a family");
    }
    if (!any_nonzero)
      throw std::invalid_argument("StateExpansion: all coefficients zero");
    return StateExpansion{std::move(terms_in)};
  }
};

/// Materialize the linear combination as a single PolyGauss. Terms of one
/// family always share an exponent; mixing families with incompatible
/// exponents cannot be represented by one PolyGauss and raises.
template <class Model>
typename Model::State to_polygauss(const Model& model,
                                   const StateExpansion<Model>& s) {
  auto acc = Model::State::zero();
  for (const auto& t : s.terms)
    acc = acc.plus(model.eigenstate(t.family, t.index).scaled(t.coeff));
  return acc;
}

/// Schroedinger evolution of an H-eigenstate expansion: every coefficient
/// picks up exp(-i E t). Terms must all lie in the phi family.
template <class Model>
StateExpansion<Model> evolve(const Model& model,
                             const StateExpansion<Model>& s, double t) {
  StateExpansion<Model> out = s;
  for (auto& term : out.terms) {
    if (term.family != Family::phi)
      throw WrongFamily("evolve: expansion contains a psi-family term");
    const double e = model.eigenvalue(term.index);
    term.coeff *= std::exp(cplx{0.0, -e * t});
  }
  return out;
}

namespace detail {

template <class Model>
std::vector<typename Model::State> term_states(
    const Model& model, const StateExpansion<Model>& s) {
  std::vector<typename Model::State> out;
  out.reserve(s.terms.size());
  for (const auto& t : s.terms)
    out.push_back(model.eigenstate(t.family, t.index));
  return out;
}

template <class State>
cplx oracle_pair(const State& f, const State& g, double tol) {
  if (f.is_zero() || g.is_zero()) return 0.0;
  if constexpr (std::is_same_v<State, PolyGauss1D>) {
    const double decay = (std::conj(f.a()) + g.a()).real();
    if (decay <= 0.0)
      throw DivergentIntegral("oracle: combined exponent does not decay");
    return integrate_1d(
               [&](double x) { return std::conj(f(x)) * g(x); }, decay, tol)
        .value;
  } else {
    const double dx = (std::conj(f.ax()) + g.ax()).real();
    const double dy = (std::conj(f.ay()) + g.ay()).real();
    if (dx <= 0.0 || dy <= 0.0)
      throw DivergentIntegral("oracle: combined exponent does not decay");
    return integrate_2d(
               [&](double x, double y) { return std::conj(f(x, y)) * g(x, y); },
               dx, dy, tol)
        .value;
  }
}

/// Tail growth rule. Raw increments oscillate with parity in 1D and
/// within total-degree diagonals in 2D, so the sequence is smoothed into
/// eight equal index windows first. Divergence is declared when the last
/// four significant window sums are nondecreasing and the accumulated sum
/// exceeds a million times the first significant increment.
inline bool tail_diverges(const std::vector<double>& increments) {
  double top = 0.0, sum = 0.0, first_sig = 0.0;
  for (double h : increments) {
    top = std::max(top, h);
    sum += h;
  }
  if (top == 0.0) return false;
  for (double h : increments)
    if (h > 1e-12 * top) {
      first_sig = h;
      break;
    }

  const std::size_t n = increments.size();
  std::vector<double> window(8, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    window[std::min<std::size_t>(i * 8 / n, 7)] += increments[i];
  double wtop = 0.0;
  for (double w : window) wtop = std::max(wtop, w);
  std::vector<double> sig;
  for (double w : window)
    if (w > 1e-12 * wtop) sig.push_back(w);
  if (sig.size() < 4) return false;
  for (std::size_t i = sig.size() - 4; i + 1 < sig.size(); ++i)
    if (sig[i + 1] < sig[i] * (1.0 - 1e-9)) return false;
  return sum > 1e6 * first_sig;
}

}  // namespace detail

/// Metric-dependent inner product <f, g>_m. Conjugate-linear in f.
template <class Model>
cplx inner_metric(const Model& model, const StateExpansion<Model>& f,
                  const StateExpansion<Model>& g, Metric metric,
                  Method method = Method::closed_form()) {
  const auto fs = detail::term_states(model, f);
  const auto gs = detail::term_states(model, g);

  if (method.kind == Method::Kind::spectral) {
    // <f,g>_psi = sum_n conj(<psi_n,f>) <psi_n,g>; phi metric uses the phi
    // family on both slots; the standard product uses the quasi-base
    // resolution sum_n <f,psi_n><phi_n,g>.
    const Family left = metric == Metric::phi ? Family::phi : Family::psi;
    const Family right = metric == Metric::psi ? Family::psi : Family::phi;
    const auto order = model.spectral_order(method.nmax);
    std::vector<cplx> w(order.size()), v(order.size());
    for (std::size_t n = 0; n < order.size(); ++n) {
      const auto ln = model.eigenstate(left, order[n]);
      const auto rn = model.eigenstate(right, order[n]);
      cplx wn = 0.0, vn = 0.0;
      for (std::size_t i = 0; i < fs.size(); ++i)
        wn += f.terms[i].coeff * inner(ln, fs[i]);
      for (std::size_t j = 0; j < gs.size(); ++j)
        vn += g.terms[j].coeff * inner(rn, gs[j]);
      w[n] = wn;
      v[n] = vn;
    }
    std::vector<double> increments(order.size());
    cplx sum = 0.0;
    for (std::size_t n = 0; n < order.size(); ++n) {
      sum += std::conj(w[n]) * v[n];
      increments[n] = std::abs(std::conj(w[n]) * v[n]);
    }
    if (detail::tail_diverges(increments))
      throw DivergentSpectralTail(
          "inner_metric: spectral partial sums grow without settling");
    return sum;
  }

  // closed_form and oracle share the metric application and bilinear sweep
  const auto metricized = [&](const typename Model::State& st) {
    if (metric == Metric::standard) return st;
    return model.apply_metric(
        st, metric == Metric::psi ? MetricDir::to_psi : MetricDir::to_phi);
  };
  cplx total = 0.0;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (f.terms[i].coeff == cplx{0.0}) continue;
    for (std::size_t j = 0; j < gs.size(); ++j) {
      if (g.terms[j].coeff == cplx{0.0}) continue;
      const auto sg = metricized(gs[j]);
      const cplx pair =
          method.kind == Method::Kind::oracle
              ? detail::oracle_pair(fs[i], sg, method.tol)
              : inner(fs[i], sg);
      total += std::conj(f.terms[i].coeff) * g.terms[j].coeff * pair;
    }
  }
  return total;
}

/// sqrt(<f,f>_m); the squared norm must come out real and nonnegative.
template <class Model>
double norm_metric(const Model& model, const StateExpansion<Model>& f,
                   Metric metric, Method method = Method::closed_form()) {
  const cplx v = inner_metric(model, f, f, metric, method);
  const double mag = std::max(std::abs(v), 1e-300);
  if (std::abs(v.imag()) > 1e-10 * mag)
    throw NumericalInconsistency("norm_metric: imaginary residue too large");
  if (v.real() < -1e-10 * mag)
    throw NumericalInconsistency("norm_metric: negative squared norm");
  return std::sqrt(std::max(v.real(), 0.0));
}

/// |<Phi_f, Phi(t)>_m|^2 / (|Phi_f|_m^2 |Phi(t)|_m^2). Divergence errors
/// from the metric propagate to the caller.
template <class Model>
double transition_probability(const Model& model,
                              const StateExpansion<Model>& phi0,
                              const StateExpansion<Model>& phif, double t,
                              Metric metric,
                              Method method = Method::closed_form()) {
  const auto phit = evolve(model, phi0, t);
  const double nf = norm_metric(model, phif, metric, method);
  const double nt = norm_metric(model, phit, metric, method);
  const cplx num = inner_metric(model, phif, phit, metric, method);
  return std::norm(num) / (nf * nf * nt * nt);
}

/// A sampled probability curve; divergence is data, not an error.
struct ProbabilityCurve {
  Metric metric;
  std::vector<double> times;
  std::vector<std::optional<double>> values;  // nullopt marks divergence
};

template <class Model>
ProbabilityCurve compute_curve(const Model& model,
                               const StateExpansion<Model>& phi0,
                               const StateExpansion<Model>& phif,
                               Metric metric, const std::vector<double>& times,
                               Method method = Method::closed_form()) {
  ProbabilityCurve curve{metric, times, {}};
  curve.values.reserve(times.size());
  for (double t : times) {
    try {
      curve.values.push_back(
          transition_probability(model, phi0, phif, t, metric, method));
    } catch (const DivergentIntegral&) {
      curve.values.push_back(std::nullopt);
    } catch (const DivergentSpectralTail&) {
      curve.values.push_back(std::nullopt);
    }
  }
  return curve;
}

struct SpectralRow {
  long ordinal;        // position in the model's spectral order
  cplx coeff;          // <family_n, f>
  double partial_tail; // running sum of |coeff|^2
};

struct SpectralReport {
  std::vector<SpectralRow> rows;
  bool tail_growth = false;
  /// max-abs mismatch between f and its truncated dual-family expansion
  /// on a fixed evaluation grid
  double reconstruction_residual = 0.0;
};

/// First nmax expansion coefficients of f against the chosen family,
/// with tail diagnostics: f = sum <psi_n, f> phi_n when family == psi,
/// and the mirrored expansion when family == phi.
template <class Model>
SpectralReport spectral_coefficients(const Model& model,
                                     const StateExpansion<Model>& f,
                                     Family family, int nmax) {
  const auto fs = detail::term_states(model, f);
  const auto order = model.spectral_order(nmax);
  const Family dual = family == Family::psi ? Family::phi : Family::psi;

  SpectralReport report;
  report.rows.reserve(order.size());
  std::vector<double> increments;
  double tail = 0.0;
  std::vector<typename Model::State> duals;
  for (std::size_t n = 0; n < order.size(); ++n) {
    const auto probe = model.eigenstate(family, order[n]);
    cplx c = 0.0;
    for (std::size_t i = 0; i < fs.size(); ++i)
      c += f.terms[i].coeff * inner(probe, fs[i]);
    tail += std::norm(c);
    increments.push_back(std::norm(c));
    report.rows.push_back({static_cast<long>(n), c, tail});
    duals.push_back(model.eigenstate(dual, order[n]).scaled(c));
  }
  report.tail_growth = detail::tail_diverges(increments);

  // pointwise residual of the reconstruction on a fixed grid
  const auto eval_f = [&](double x, double y) {
    cplx s = 0.0;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if constexpr (Model::two_dimensional)
        s += f.terms[i].coeff * fs[i](x, y);
      else
        s += f.terms[i].coeff * fs[i](x);
    }
    return s;
  };
  const auto eval_recon = [&](double x, double y) {
    cplx s = 0.0;
    for (const auto& d : duals) {
      if constexpr (Model::two_dimensional)
        s += d(x, y);
      else
        s += d(x);
    }
    return s;
  };
  double res = 0.0;
  if constexpr (Model::two_dimensional) {
    for (int i = 0; i <= 32; ++i)
      for (int j = 0; j <= 32; ++j) {
        const double x = -5.0 + 10.0 * i / 32.0;
        const double y = -5.0 + 10.0 * j / 32.0;
        res = std::max(res, std::abs(eval_f(x, y) - eval_recon(x, y)));
      }
  } else {
    for (int i = 0; i <= 120; ++i) {
      const double x = -6.0 + 12.0 * i / 120.0;
      res = std::max(res, std::abs(eval_f(x, 0.0) - eval_recon(x, 0.0)));
    }
  }
  report.reconstruction_residual = res;
  return report;
}

}  // namespace phlab
