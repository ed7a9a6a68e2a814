#pragma once

#include <string>
#include <vector>

#include "phlab/dynamics.hpp"
#include "phlab/types.hpp"

namespace phlab {

/// One parsed term of a state expression such as "phi:0+2i*psi:1" or
/// "phi:1,0-0.5*phi:0,1". Grammar: term (("+"|"-") term)*, where a term is
/// an optional complex coefficient (a, a+bi, or bi) followed by "*", then
/// phi:<n> / psi:<n> or phi:<n>,<l> / psi:<n>,<l>.
struct ParsedTerm {
  cplx coeff;
  Family family;
  int n = 0;
  int l = 0;
  bool two_d = false;
};

/// Throws std::invalid_argument with a one-line diagnostic on bad input.
std::vector<ParsedTerm> parse_state_expr(const std::string& text);

/// Prints an expression that reparses to the same expansion.
std::string format_state_expr(const std::vector<ParsedTerm>& terms);

std::string format_complex(cplx z);

/// full-precision decimal rendering used for all CSV output
std::string fmt_double(double v);

template <class Model>
StateExpansion<Model> to_expansion(const std::vector<ParsedTerm>& terms) {
  using Exp = StateExpansion<Model>;
  std::vector<typename Exp::Term> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    if (t.two_d != Model::two_dimensional)
      throw std::invalid_argument(
          "state expression dimensionality does not match the model");
    if constexpr (Model::two_dimensional)
      out.push_back({t.coeff, {t.n, t.l}, t.family});
    else
      out.push_back({t.coeff, t.n, t.family});
  }
  return Exp::make(std::move(out));
}

}  // namespace phlab
