#pragma once

// Sparse exact Laurent polynomials over the Scalar domain. Terms are kept in
// descending graded-reverse-lexicographic order with x1 > x2 > ... so that
// iteration and rendering are deterministic.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "forge/errors.hpp"
#include "forge/numeric.hpp"
#include "forge/scalar.hpp"

namespace forge {

inline constexpr int kMaxArity = 16;

// a > b in grevlex with the identity variable precedence.
bool grevlex_greater(const ExponentVec& a, const ExponentVec& b);

struct MonomialOrder {
  enum class Kind { grevlex, grlex, lex };
  Kind kind = Kind::grevlex;
  std::vector<int> precedence;  // precedence[0] = most significant variable; empty = identity

  bool greater(const ExponentVec& a, const ExponentVec& b) const;
  static MonomialOrder make(Kind k) { return MonomialOrder{k, {}}; }
};

MonomialOrder order_from_name(const std::string& name);
std::string order_name(const MonomialOrder& o);

struct TermsDescCmp {
  bool operator()(const ExponentVec& a, const ExponentVec& b) const {
    return grevlex_greater(a, b);
  }
};

class LaurentPoly {
 public:
  using TermMap = std::map<ExponentVec, Scalar, TermsDescCmp>;

  LaurentPoly() = default;
  explicit LaurentPoly(int arity);
  static LaurentPoly constant(int arity, const Scalar& c);
  static LaurentPoly monomial(const ExponentVec& e, const Scalar& c);
  static LaurentPoly variable(int arity, int var);  // x_{var+1}

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  void add_term(const ExponentVec& e, const Scalar& c);
  Scalar coeff(const ExponentVec& e) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly scaled(const Scalar& c) const;
  LaurentPoly pow(std::int64_t k) const;

  bool has_negative_exponent() const;
  bool is_single_term() const { return terms_.size() == 1; }
  bool coefficients_rational() const;

 private:
  int arity_ = 0;
  TermMap terms_;
};

LaurentPoly poly_add(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly poly_mul(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly poly_scale(const LaurentPoly& f, const Scalar& s);

LaurentPoly partial_derivative(const LaurentPoly& f, int var);  // var 0-based
LaurentPoly substitute(const LaurentPoly& f, const std::vector<LaurentPoly>& images);
std::map<std::int64_t, LaurentPoly> adams_components(const LaurentPoly& f);

bool is_adams_homogeneous(const LaurentPoly& f);
std::optional<std::int64_t> homogeneous_adams_degree(const LaurentPoly& f);
std::int64_t top_adams_degree(const LaurentPoly& f);  // requires nonzero
LaurentPoly top_adams_form(const LaurentPoly& f);

// Canonical text rendering: descending terms, `x1^3*x2^-2` monomials,
// rational coefficients `p/q`, parenthesized linear forms.
std::string to_string(const LaurentPoly& f);
std::string monomial_to_string(const ExponentVec& e);

}  // namespace forge
