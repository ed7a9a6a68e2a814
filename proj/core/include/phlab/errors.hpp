#pragma once

#include <stdexcept>
#include <string>

namespace phlab {

/// Base class for all phlab computation errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A Gaussian integral whose quadratic exponent has nonpositive real part.
/// This is not an internal failure: it marks a state pair outside the
/// admissible domain of the requested inner product.
class DivergentIntegral : public Error {
 public:
  explicit DivergentIntegral(const std::string& what) : Error(what) {}
};

/// Spectral partial sums grew without settling, the series-side witness of
/// the same phenomenon DivergentIntegral detects on the closed-form side.
class DivergentSpectralTail : public Error {
 public:
  explicit DivergentSpectralTail(const std::string& what) : Error(what) {}
};

/// Argument scaling with lambda = 0 would collapse the state.
class ZeroScale : public Error {
 public:
  ZeroScale() : Error("scale_arg: lambda must be nonzero") {}
};

/// Adaptive quadrature ran out of refinement budget.
class ToleranceNotMet : public Error {
 public:
  explicit ToleranceNotMet(const std::string& what) : Error(what) {}
};

/// Quadrature caller claimed a nonpositive Gaussian decay rate.
class InvalidDecay : public Error {
 public:
  explicit InvalidDecay(const std::string& what) : Error(what) {}
};

/// Time evolution requested on terms that are not Hamiltonian eigenstates.
class WrongFamily : public Error {
 public:
  explicit WrongFamily(const std::string& what) : Error(what) {}
};

/// A quantity that must be real (a squared norm) came out with a
/// significant imaginary part or a negative real part.
class NumericalInconsistency : public Error {
 public:
  explicit NumericalInconsistency(const std::string& what) : Error(what) {}
};

}  // namespace phlab
