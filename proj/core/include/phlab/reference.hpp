#pragma once

#include <array>
#include <optional>

namespace phlab {

/// Closed-form transition-probability tables used as ground truth by the
/// verification suite. Values outside a formula's validity range come back
/// as std::nullopt so they compare structurally against pipeline
/// divergences. The functions evaluate the published expressions verbatim;
/// where the verification suite finds stable disagreement with the
/// first-principles pipeline, that is reported by the suite rather than
/// patched here.
namespace reference {

/// (P, P_psi, P_phi) for the oscillator pair phi_0 -> psi_0; constant in t.
std::array<double, 3> eqho_constants(double nu);

/// (P(t), P_psi(t), P_phi(t)) for phi_0 + phi_1 -> psi_0.
std::array<double, 3> eqho_curves(double nu, double t);

/// (P, P_psi, P_phi) for the Swanson pair phi_0 + phi_1 -> psi_0; the two
/// metric entries exist only on the restricted range |theta| < pi/8.
std::array<std::optional<double>, 3> swanson_constants(double theta);

/// (P(t), shared P_psi(t) = P_phi(t)) for phi_0 + phi_1 -> psi_0 + psi_1.
/// The time argument enters through cos(omega_theta t).
std::array<std::optional<double>, 2> swanson_curves(double theta, double t);

/// (P(t), P_psi(t)) for the Landau pair
/// phi_00 + phi_10 + phi_01 -> psi_00 + psi_10. No phi-metric closed form
/// is asserted for this model.
std::array<double, 2> landau_curves(double k1, double k2, double t);

/// the parameter-only factors of the Landau formulas
double landau_p_factor(double k1, double k2);
double landau_g_factor(double k1, double k2);

}  // namespace reference
}  // namespace phlab
