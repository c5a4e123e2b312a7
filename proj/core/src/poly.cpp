#include "forge/poly.hpp"

#include <algorithm>

namespace forge {

bool grevlex_greater(const ExponentVec& a, const ExponentVec& b) {
  std::int64_t da = adams_degree(a), db = adams_degree(b);
  if (da != db) return da > db;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

bool MonomialOrder::greater(const ExponentVec& a, const ExponentVec& b) const {
  auto var = [&](size_t k) -> size_t {
    return precedence.empty() ? k : static_cast<size_t>(precedence[k]);
  };
  const size_t n = a.size();
  switch (kind) {
    case Kind::lex:
      for (size_t k = 0; k < n; ++k) {
        size_t v = var(k);
        if (a[v] != b[v]) return a[v] > b[v];
      }
      return false;
    case Kind::grlex: {
      std::int64_t da = adams_degree(a), db = adams_degree(b);
      if (da != db) return da > db;
      for (size_t k = 0; k < n; ++k) {
        size_t v = var(k);
        if (a[v] != b[v]) return a[v] > b[v];
      }
      return false;
    }
    case Kind::grevlex:
    default: {
      std::int64_t da = adams_degree(a), db = adams_degree(b);
      if (da != db) return da > db;
      for (size_t k = n; k-- > 0;) {
        size_t v = var(k);
        if (a[v] != b[v]) return a[v] < b[v];
      }
      return false;
    }
  }
}

MonomialOrder order_from_name(const std::string& name) {
  if (name == "grevlex") return MonomialOrder::make(MonomialOrder::Kind::grevlex);
  if (name == "grlex") return MonomialOrder::make(MonomialOrder::Kind::grlex);
  if (name == "lex") return MonomialOrder::make(MonomialOrder::Kind::lex);
  raise(Errc::bad_input, "unknown monomial order: " + name);
}

std::string order_name(const MonomialOrder& o) {
  switch (o.kind) {
    case MonomialOrder::Kind::lex:
      return "lex";
    case MonomialOrder::Kind::grlex:
      return "grlex";
    default:
      return "grevlex";
  }
}

LaurentPoly::LaurentPoly(int arity) : arity_(arity) {
  if (arity < 0 || arity > kMaxArity) raise(Errc::guard_exceeded, "arity out of range");
}

LaurentPoly LaurentPoly::constant(int arity, const Scalar& c) {
  LaurentPoly p(arity);
  p.add_term(ExponentVec(static_cast<size_t>(arity), 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const ExponentVec& e, const Scalar& c) {
  LaurentPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(int arity, int var) {
  if (var < 0 || var >= arity) raise(Errc::bad_input, "variable index out of range");
  ExponentVec e(static_cast<size_t>(arity), 0);
  e[static_cast<size_t>(var)] = 1;
  return monomial(e, Scalar(Rat(1)));
}

void LaurentPoly::add_term(const ExponentVec& e, const Scalar& c) {
  if (static_cast<int>(e.size()) != arity_) raise(Errc::arity_mismatch, "term arity mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar LaurentPoly::coeff(const ExponentVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar() : it->second;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(arity_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (arity_ != o.arity_) raise(Errc::arity_mismatch, "polynomial arity mismatch in +");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (arity_ != o.arity_) raise(Errc::arity_mismatch, "polynomial arity mismatch in -");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.arity_ != b.arity_) raise(Errc::arity_mismatch, "polynomial arity mismatch in *");
  LaurentPoly r(a.arity_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(exp_add(ea, eb), ca * cb);
  return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  return a.arity_ == b.arity_ && a.terms_ == b.terms_;
}

LaurentPoly LaurentPoly::scaled(const Scalar& c) const {
  LaurentPoly r(arity_);
  for (const auto& [e, t] : terms_) r.add_term(e, t * c);
  return r;
}

LaurentPoly LaurentPoly::pow(std::int64_t k) const {
  if (k < 0) {
    if (terms_.size() != 1) raise(Errc::negative_power_of_non_unit, "negative power of a non-unit");
    const auto& [e, c] = *terms_.begin();
    if (!c.is_rational() || sgn(c.rational()) == 0)
      raise(Errc::negative_power_of_non_unit, "negative power needs an invertible coefficient");
    ExponentVec ke(e.size());
    for (size_t i = 0; i < e.size(); ++i) ke[i] = e[i] * k;
    return monomial(ke, Scalar(rat_pow(c.rational(), k)));
  }
  LaurentPoly acc = LaurentPoly::constant(arity_, Scalar(Rat(1)));
  LaurentPoly base = *this;
  std::int64_t n = k;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return acc;
}

bool LaurentPoly::has_negative_exponent() const {
  for (const auto& [e, c] : terms_)
    for (auto v : e)
      if (v < 0) return true;
  return false;
}

bool LaurentPoly::coefficients_rational() const {
  for (const auto& [e, c] : terms_)
    if (!c.is_rational()) return false;
  return true;
}

LaurentPoly poly_add(const LaurentPoly& f, const LaurentPoly& g) { return f + g; }
LaurentPoly poly_mul(const LaurentPoly& f, const LaurentPoly& g) { return f * g; }
LaurentPoly poly_scale(const LaurentPoly& f, const Scalar& s) { return f.scaled(s); }

LaurentPoly partial_derivative(const LaurentPoly& f, int var) {
  if (var < 0 || var >= f.arity()) raise(Errc::bad_input, "derivative variable out of range");
  LaurentPoly r(f.arity());
  for (const auto& [e, c] : f.terms()) {
    std::int64_t k = e[static_cast<size_t>(var)];
    if (k == 0) continue;
    ExponentVec de = e;
    de[static_cast<size_t>(var)] -= 1;
    r.add_term(de, c.scaled(Rat(static_cast<long>(k))));
  }
  return r;
}

LaurentPoly substitute(const LaurentPoly& f, const std::vector<LaurentPoly>& images) {
  if (static_cast<int>(images.size()) != f.arity())
    raise(Errc::arity_mismatch, "substitute needs one image per variable");
  int target_arity = images.empty() ? 0 : images[0].arity();
  for (const auto& im : images)
    if (im.arity() != target_arity) raise(Errc::arity_mismatch, "images have mixed arities");
  LaurentPoly r(target_arity);
  for (const auto& [e, c] : f.terms()) {
    LaurentPoly term = LaurentPoly::constant(target_arity, c);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      term = term * images[i].pow(e[i]);
    }
    r += term;
  }
  return r;
}

std::map<std::int64_t, LaurentPoly> adams_components(const LaurentPoly& f) {
  std::map<std::int64_t, LaurentPoly> comps;
  for (const auto& [e, c] : f.terms()) {
    auto [it, inserted] = comps.try_emplace(adams_degree(e), LaurentPoly(f.arity()));
    it->second.add_term(e, c);
  }
  return comps;
}

bool is_adams_homogeneous(const LaurentPoly& f) {
  return homogeneous_adams_degree(f).has_value() || f.is_zero();
}

std::optional<std::int64_t> homogeneous_adams_degree(const LaurentPoly& f) {
  if (f.is_zero()) return std::nullopt;
  std::int64_t d = adams_degree(f.terms().begin()->first);
  for (const auto& [e, c] : f.terms())
    if (adams_degree(e) != d) return std::nullopt;
  return d;
}

std::int64_t top_adams_degree(const LaurentPoly& f) {
  if (f.is_zero()) raise(Errc::bad_input, "top degree of zero polynomial");
  // terms are kept degree-descending, so the first term carries the top degree
  return adams_degree(f.terms().begin()->first);
}

LaurentPoly top_adams_form(const LaurentPoly& f) {
  LaurentPoly r(f.arity());
  if (f.is_zero()) return r;
  std::int64_t d = top_adams_degree(f);
  for (const auto& [e, c] : f.terms()) {
    if (adams_degree(e) != d) break;
    r.add_term(e, c);
  }
  return r;
}

std::string monomial_to_string(const ExponentVec& e) {
  std::string out;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

namespace {

bool scalar_is_sum(const Scalar& s) {
  size_t printed = s.parameter_parts().size() + (sgn(s.constant_part()) != 0 ? 1 : 0);
  return printed > 1;
}

std::string scalar_body(const Scalar& s) {
  std::string body = to_string(s);
  return scalar_is_sum(s) ? "(" + body + ")" : body;
}

}  // namespace

std::string to_string(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    bool neg = scalar_prints_negative(c);
    Scalar body = neg ? -c : c;
    std::string mono = monomial_to_string(e);
    std::string chunk;
    if (mono.empty()) {
      chunk = scalar_body(body);
    } else if (body.is_rational() && body.rational() == 1) {
      chunk = mono;
    } else {
      chunk = scalar_body(body) + "*" + mono;
    }
    if (first) {
      out += (neg ? "-" : "") + chunk;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + chunk;
    }
  }
  return out;
}

}  // namespace forge
