#include "forge/poly_text.hpp"

#include <cctype>
#include <optional>

namespace forge {

namespace {

struct Parser {
  const std::string& src;
  size_t pos = 0;
  int arity;

  explicit Parser(const std::string& s, int n) : src(s), arity(n) {}

  [[noreturn]] void fail(const std::string& msg) const {
    raise(Errc::bad_input, "parse error at offset " + std::to_string(pos) + ": " + msg +
                               " in \"" + src + "\"");
  }

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }

  Int parse_digits() {
    skip_ws();
    size_t start = pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
    if (pos == start) fail("expected digits");
    return Int(src.substr(start, pos - start));
  }

  Rat parse_rational() {
    Int num = parse_digits();
    if (eat('/')) {
      Int den = parse_digits();
      if (sgn(den) == 0) fail("zero denominator");
      return make_rat(num, den);
    }
    return Rat(num);
  }

  std::int64_t parse_signed_int() {
    bool neg = eat('-');
    Int mag = parse_digits();
    if (!mag.fits_slong_p()) fail("exponent out of range");
    std::int64_t v = mag.get_si();
    return neg ? -v : v;
  }

  std::string parse_ident() {
    skip_ws();
    size_t start = pos;
    if (pos >= src.size() || !std::isalpha(static_cast<unsigned char>(src[pos])))
      fail("expected identifier");
    ++pos;
    while (pos < src.size() && std::isalnum(static_cast<unsigned char>(src[pos]))) ++pos;
    return src.substr(start, pos - start);
  }

  // x1..xn plus the x/y/z aliases; anything else is a parameter name
  std::optional<int> variable_index(const std::string& name) const {
    if (name.size() >= 2 && name[0] == 'x') {
      bool digits = true;
      for (size_t i = 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) digits = false;
      if (digits) {
        int k = std::stoi(name.substr(1));
        if (k >= 1 && k <= arity) return k - 1;
        return std::nullopt;
      }
    }
    if (name == "x" && arity >= 1) return 0;
    if (name == "y" && arity >= 2) return 1;
    if (name == "z" && arity >= 3) return 2;
    return std::nullopt;
  }

  // One term: product of factors with an accumulated scalar and exponent.
  LaurentPoly parse_term() {
    Scalar coeff{Rat(1)};
    ExponentVec expo(static_cast<size_t>(arity), 0);
    bool expect_factor = true;
    while (expect_factor) {
      char c = peek();
      if (c == '(') {
        eat('(');
        LaurentPoly inner = parse_poly_body();
        if (!eat(')')) fail("expected )");
        Scalar s;
        for (const auto& [e, sc] : inner.terms()) {
          if (adams_degree(e) != 0 || e != ExponentVec(static_cast<size_t>(arity), 0))
            fail("parenthesized coefficients must be constant linear forms");
          s += sc;
        }
        coeff = coeff * s;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff = coeff.scaled(parse_rational());
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::string name = parse_ident();
        std::int64_t e = 1;
        if (eat('^')) e = parse_signed_int();
        if (auto vi = variable_index(name)) {
          expo[static_cast<size_t>(*vi)] += e;
        } else {
          if (e == 0) {
            // q^0 = 1
          } else if (e == 1) {
            coeff = coeff * Scalar::parameter(name);
          } else {
            raise(Errc::parameter_product, "parameter " + name + " with exponent " +
                                               std::to_string(e) + " is outside the linear-form domain");
          }
        }
      } else {
        fail("expected a factor");
      }
      expect_factor = eat('*');
    }
    return LaurentPoly::monomial(expo, coeff);
  }

  LaurentPoly parse_poly_body() {
    LaurentPoly out(arity);
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    while (true) {
      LaurentPoly t = parse_term();
      out += neg ? -t : t;
      skip_ws();
      if (eat('+'))
        neg = false;
      else if (eat('-'))
        neg = true;
      else
        break;
    }
    return out;
  }

  LaurentPoly parse_full() {
    LaurentPoly p = parse_poly_body();
    skip_ws();
    if (pos != src.size()) fail("trailing input");
    return p;
  }
};

}  // namespace

LaurentPoly parse_poly(const std::string& text, int arity) {
  if (arity < 0 || arity > kMaxArity) raise(Errc::guard_exceeded, "arity out of range");
  Parser p(text, arity);
  return p.parse_full();
}

Scalar parse_scalar(const std::string& text) {
  Parser p(text, 0);
  LaurentPoly poly = p.parse_full();
  Scalar s;
  for (const auto& [e, c] : poly.terms()) s += c;
  return s;
}

}  // namespace forge
