#include "phlab/stateexpr.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace phlab {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool consume(const char* word) {
    skip_ws();
    const std::size_t n = std::string(word).size();
    if (s.compare(pos, n, word) == 0) {
      pos += n;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("state expression: " + why + " at position " +
                                std::to_string(pos) + " in '" + s + "'");
  }
};

double parse_number(Cursor& cur) {
  cur.skip_ws();
  const char* begin = cur.s.c_str() + cur.pos;
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin) cur.fail("expected a number");
  cur.pos += static_cast<std::size_t>(end - begin);
  return v;
}

// a | bi | a+bi | a-bi, with a bare "i" accepted as 1i
cplx parse_coefficient(Cursor& cur) {
  cur.skip_ws();
  double sign = 1.0;
  if (cur.peek() == '+' || cur.peek() == '-') {
    sign = cur.peek() == '-' ? -1.0 : 1.0;
    ++cur.pos;
  }
  if (cur.peek() == 'i') {
    ++cur.pos;
    return cplx{0.0, sign};
  }
  const double first = sign * parse_number(cur);
  if (cur.pos < cur.s.size() && cur.s[cur.pos] == 'i') {
    ++cur.pos;
    return cplx{0.0, first};
  }
  cur.skip_ws();
  if (cur.peek() == '+' || cur.peek() == '-') {
    const std::size_t mark = cur.pos;
    const double isign = cur.peek() == '-' ? -1.0 : 1.0;
    ++cur.pos;
    double imag;
    if (cur.peek() == 'i') {
      imag = 1.0;
    } else {
      const char* begin = cur.s.c_str() + cur.pos;
      char* end = nullptr;
      imag = std::strtod(begin, &end);
      if (end == begin) {
        cur.pos = mark;  // the sign belonged to the next term
        return cplx{first, 0.0};
      }
      cur.pos += static_cast<std::size_t>(end - begin);
    }
    if (cur.pos < cur.s.size() && cur.s[cur.pos] == 'i') {
      ++cur.pos;
      return cplx{first, isign * imag};
    }
    cur.pos = mark;  // not a complex tail after all
    return cplx{first, 0.0};
  }
  return cplx{first, 0.0};
}

int parse_index(Cursor& cur) {
  cur.skip_ws();
  std::size_t start = cur.pos;
  while (cur.pos < cur.s.size() &&
         std::isdigit(static_cast<unsigned char>(cur.s[cur.pos])))
    ++cur.pos;
  if (cur.pos == start) cur.fail("expected a nonnegative integer index");
  return std::stoi(cur.s.substr(start, cur.pos - start));
}

ParsedTerm parse_term(Cursor& cur, double outer_sign) {
  ParsedTerm term;
  term.coeff = outer_sign;
  cur.skip_ws();
  // a coefficient is present iff the term does not begin with phi/psi
  if (!(cur.s.compare(cur.pos, 4, "phi:") == 0 ||
        cur.s.compare(cur.pos, 4, "psi:") == 0)) {
    term.coeff = outer_sign * parse_coefficient(cur);
    if (!cur.consume("*")) cur.fail("expected '*' after coefficient");
  }
  if (cur.consume("phi:"))
    term.family = Family::phi;
  else if (cur.consume("psi:"))
    term.family = Family::psi;
  else
    cur.fail("expected 'phi:<n>' or 'psi:<n>'");
  term.n = parse_index(cur);
  if (cur.pos < cur.s.size() && cur.s[cur.pos] == ',') {
    ++cur.pos;
    term.l = parse_index(cur);
    term.two_d = true;
  }
  return term;
}

}  // namespace

std::vector<ParsedTerm> parse_state_expr(const std::string& text) {
  Cursor cur{text};
  std::vector<ParsedTerm> out;
  if (cur.done()) cur.fail("empty expression");
  out.push_back(parse_term(cur, 1.0));
  while (!cur.done()) {
    double sign;
    if (cur.consume("+"))
      sign = 1.0;
    else if (cur.consume("-"))
      sign = -1.0;
    else
      cur.fail("expected '+' or '-' between terms");
    out.push_back(parse_term(cur, sign));
  }
  for (const auto& t : out)
    if (t.two_d != out.front().two_d)
      throw std::invalid_argument(
          "state expression mixes 1d and 2d indices: '" + text + "'");
  return out;
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_complex(cplx z) {
  if (z.imag() == 0.0) return fmt_double(z.real());
  if (z.real() == 0.0) return fmt_double(z.imag()) + "i";
  const std::string im = fmt_double(std::abs(z.imag())) + "i";
  return fmt_double(z.real()) + (z.imag() < 0.0 ? "-" : "+") + im;
}

std::string format_state_expr(const std::vector<ParsedTerm>& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    ParsedTerm t = terms[i];
    std::string join;
    if (i > 0) {
      // prefer "a - b" over "a + -1*b" when the coefficient is a pure sign
      if ((t.coeff.imag() == 0.0 && t.coeff.real() < 0.0) ||
          (t.coeff.real() == 0.0 && t.coeff.imag() < 0.0)) {
        join = "-";
        t.coeff = -t.coeff;
      } else {
        join = "+";
      }
    }
    out += join;
    if (t.coeff != cplx{1.0, 0.0}) out += format_complex(t.coeff) + "*";
    out += to_string(t.family);
    out += ":" + std::to_string(t.n);
    if (t.two_d) out += "," + std::to_string(t.l);
  }
  return out;
}

}  // namespace phlab
