#pragma once

namespace phlab {

/// The two eigenfamilies: phi diagonalizes H, psi diagonalizes its adjoint.
enum class Family { phi, psi };

/// Which of the three inner products a computation runs under.
enum class Metric { standard, psi, phi };

/// Direction of a metric operator application: S_psi maps phi_n to psi_n,
/// S_phi is its inverse.
enum class MetricDir { to_psi, to_phi };

inline const char* to_string(Family f) {
  return f == Family::phi ? "phi" : "psi";
}

inline const char* to_string(Metric m) {
  switch (m) {
    case Metric::standard: return "standard";
    case Metric::psi: return "psi";
    default: return "phi";
  }
}

}  // namespace phlab
