#include "phlab/reference.hpp"

#include <cmath>
#include <numbers>

namespace phlab {
namespace reference {

std::array<double, 3> eqho_constants(double nu) {
  const double n2 = nu * nu;
  return {1.0, std::exp(-6.0 / n2), std::exp(-2.0 / n2)};
}

std::array<double, 3> eqho_curves(double nu, double t) {
  const double n2 = nu * nu;
  const double ct = std::cos(nu * t);
  const double p = n2 / (2.0 * (2.0 + n2 + 2.0 * nu * ct));
  const double bracket_minus = (1.0 - 2.0 / nu) * (1.0 - 2.0 / nu);
  const double ppsi =
      0.5 * std::exp(-6.0 / n2) * (bracket_minus + (4.0 / nu) * (1.0 - ct));
  const double pphi = (n2 / 2.0) * std::exp(-6.0 / n2) *
                      (bracket_minus + (4.0 / nu) * (1.0 + ct)) /
                      (8.0 + n2 + 4.0 * nu * ct);
  return {p, ppsi, pphi};
}

namespace {
bool in_I1(double theta) { return std::abs(theta) < std::numbers::pi / 8.0; }
}

std::array<std::optional<double>, 3> swanson_constants(double theta) {
  const double c2 = std::cos(2.0 * theta);
  const double c4 = std::cos(4.0 * theta);
  std::array<std::optional<double>, 3> out;
  out[0] = c2 * c2 / (1.0 + c2 * c2);
  if (in_I1(theta)) {
    out[1] = std::sqrt(c4) / (2.0 * c2);
    out[2] = std::pow(c4, 1.5) / (c2 * (c4 + 1.0));
  }
  return out;
}

std::array<std::optional<double>, 2> swanson_curves(double theta, double t) {
  const double c2 = std::cos(2.0 * theta);
  const double c4 = std::cos(4.0 * theta);
  const double omega = 1.0 / c2;
  const double cot = std::cos(omega * t);
  std::array<std::optional<double>, 2> out;
  out[0] = 2.0 * c2 * c2 * c2 * (1.0 + cot) / ((1.0 + c2) * (1.0 + c2));
  if (in_I1(theta))
    out[1] = std::pow(c4, 1.5) * (1.0 + c2 * c2 + 2.0 * c2 * cot) /
             (2.0 * (1.0 + c4) * c2 * c2 * c2);
  return out;
}

double landau_p_factor(double k1, double k2) {
  const double u = 1.0 - 4.0 * k1 * k1;
  const double v = 1.0 - 4.0 * k2 * k2;
  return std::sqrt(u * u * u * v * v * v) /
         ((2.0 + 3.0 * k1 - 3.0 * k2 - 4.0 * k1 * k2) *
          (3.0 + 4.0 * k1 - 4.0 * k2 - 4.0 * k1 * k2));
}

double landau_g_factor(double k1, double k2) {
  return (1.0 + 4.0 * k1) * (1.0 - 4.0 * k2) /
         (6.0 * (1.0 + 2.0 * k1) * (1.0 - 2.0 * k2) *
          (1.0 + 3.0 * k1 - 3.0 * k2 - 8.0 * k1 * k2));
}

std::array<double, 2> landau_curves(double k1, double k2, double t) {
  const double ct = std::cos(t);
  const double p = 2.0 * (1.0 + ct) * landau_p_factor(k1, k2);
  const double r = (1.0 + k1 - k2) / ((1.0 + 2.0 * k1) * (1.0 - 2.0 * k2));
  const double ppsi =
      (1.0 + r * r + 2.0 * r * ct) * landau_g_factor(k1, k2);
  return {p, ppsi};
}

}  // namespace reference
}  // namespace phlab
