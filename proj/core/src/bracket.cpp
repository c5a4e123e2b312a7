#include "forge/bracket.hpp"

#include <algorithm>

namespace forge {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

SkewParamMatrix SkewParamMatrix::from_entries(const std::vector<std::vector<Scalar>>& rows) {
  int n = static_cast<int>(rows.size());
  SkewParamMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) raise(Errc::bad_input, "lambda matrix not square");
    for (int j = 0; j < n; ++j) m.entries_[static_cast<size_t>(i) * n + j] = rows[i][j];
  }
  for (int i = 0; i < n; ++i) {
    if (!m.at(i, i).is_zero()) raise(Errc::not_skew, "lambda has nonzero diagonal");
    for (int j = 0; j < i; ++j)
      if (m.at(i, j) != -m.at(j, i))
        raise(Errc::not_skew, "lambda[" + std::to_string(i) + "][" + std::to_string(j) +
                                  "] != -lambda[" + std::to_string(j) + "][" + std::to_string(i) + "]");
  }
  return m;
}

SkewParamMatrix SkewParamMatrix::uniparameter(const Scalar& lambda, const IntMatrix& m) {
  if (!m.is_skew_symmetric()) raise(Errc::not_skew, "integer matrix is not skew-symmetric");
  SkewParamMatrix out(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (!m.at(i, j).fits_slong_p()) raise(Errc::guard_exceeded, "matrix entry exceeds long");
      out.entries_[static_cast<size_t>(i) * m.rows() + j] =
          lambda.scaled(Rat(m.at(i, j).get_si()));
    }
  return out;
}

void SkewParamMatrix::set(int i, int j, const Scalar& v) {
  if (i == j && !v.is_zero()) raise(Errc::not_skew, "diagonal entries must vanish");
  entries_[static_cast<size_t>(i) * n_ + j] = v;
  entries_[static_cast<size_t>(j) * n_ + i] = -v;
}

Scalar SkewParamMatrix::pair(const ExponentVec& u, const ExponentVec& v) const {
  Scalar acc;
  for (int i = 0; i < n_; ++i) {
    if (u[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j < n_; ++j) {
      if (v[static_cast<size_t>(j)] == 0) continue;
      const Scalar& l = at(i, j);
      if (l.is_zero()) continue;
      acc += l.scaled(Rat(static_cast<long>(u[static_cast<size_t>(i)])) *
                      Rat(static_cast<long>(v[static_cast<size_t>(j)])));
    }
  }
  return acc;
}

std::vector<std::string> SkewParamMatrix::parameter_names() const {
  std::vector<std::string> names;
  for (const auto& e : entries_)
    for (const auto& [name, c] : e.parameter_parts())
      if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
  std::sort(names.begin(), names.end());
  return names;
}

std::optional<std::pair<Scalar, IntMatrix>> SkewParamMatrix::uniparameter_decomposition() const {
  auto names = parameter_names();
  if (names.size() > 1) return std::nullopt;
  bool parametric = names.size() == 1;
  std::vector<Rat> coeffs(entries_.size(), Rat(0));
  for (size_t k = 0; k < entries_.size(); ++k) {
    const Scalar& e = entries_[k];
    if (parametric) {
      if (sgn(e.constant_part()) != 0) return std::nullopt;  // mixed rational + parameter
      coeffs[k] = e.parameter_parts().empty() ? Rat(0) : e.parameter_parts()[0].second;
    } else {
      coeffs[k] = e.constant_part();
    }
  }
  // content extraction: coeffs = content * integers with overall gcd 1
  Int den_lcm(1), num_gcd(0);
  for (const auto& c : coeffs) den_lcm = lcm(den_lcm, c.get_den());
  for (const auto& c : coeffs) num_gcd = gcd(num_gcd, Int(c.get_num() * (den_lcm / c.get_den())));
  IntMatrix m(n_, n_);
  Rat content = sgn(num_gcd) == 0 ? Rat(1) : make_rat(num_gcd, den_lcm);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      Rat q = coeffs[static_cast<size_t>(i) * n_ + j] / content;
      m.at(i, j) = q.get_num();
    }
  Scalar lambda = parametric ? Scalar::parameter(names[0], content) : Scalar(content);
  return std::make_pair(lambda, m);
}

TensorStructure::TensorStructure() = default;
TensorStructure::TensorStructure(const TensorStructure&) = default;
TensorStructure::TensorStructure(TensorStructure&&) noexcept = default;
TensorStructure& TensorStructure::operator=(const TensorStructure&) = default;
TensorStructure& TensorStructure::operator=(TensorStructure&&) noexcept = default;
TensorStructure::~TensorStructure() = default;

PoissonStructure::PoissonStructure(Variant v)
    : v_(std::make_shared<const Variant>(std::move(v))) {}

PoissonStructure PoissonStructure::torus(SkewParamMatrix lambda) {
  return PoissonStructure(Variant(TorusStructure{std::move(lambda)}));
}

PoissonStructure PoissonStructure::skew_poly(SkewParamMatrix lambda) {
  return PoissonStructure(Variant(SkewPolyStructure{std::move(lambda)}));
}

namespace {

void validate_potential(const LaurentPoly& omega) {
  if (omega.arity() != 3) raise(Errc::bad_input, "potential must live in three variables");
  if (omega.has_negative_exponent())
    raise(Errc::bad_input, "potential must have nonnegative exponents");
  if (!omega.coefficients_rational())
    raise(Errc::bad_input, "potential coefficients must be rational");
  auto d = homogeneous_adams_degree(omega);
  if (!d) raise(Errc::not_homogeneous, "potential must be homogeneous and nonzero");
  if (*d < 2) raise(Errc::degree_violation, "potential degree must be at least 2");
}

}  // namespace

PoissonStructure PoissonStructure::potential_affine(LaurentPoly omega) {
  validate_potential(omega);
  return PoissonStructure(Variant(PotentialAffineStructure{std::move(omega)}));
}

PoissonStructure PoissonStructure::potential_quotient(LaurentPoly omega, Rat xi,
                                                      MonomialOrder order) {
  validate_potential(omega);
  return PoissonStructure(Variant(PotentialQuotientStructure{std::move(omega), std::move(xi),
                                                             std::move(order)}));
}

PoissonStructure PoissonStructure::weyl(int pairs, bool laurent_x) {
  if (pairs < 1 || 2 * pairs > kMaxArity) raise(Errc::guard_exceeded, "weyl pair count out of range");
  return PoissonStructure(Variant(WeylStructure{pairs, laurent_x}));
}

PoissonStructure PoissonStructure::tensor(std::vector<PoissonStructure> factors) {
  if (factors.empty()) raise(Errc::bad_input, "tensor needs at least one factor");
  int total = 0;
  for (const auto& f : factors) total += f.arity();
  if (total > kMaxArity) raise(Errc::guard_exceeded, "tensor arity exceeds limit");
  TensorStructure t;
  t.factors = std::move(factors);
  return PoissonStructure(Variant(std::move(t)));
}

int PoissonStructure::arity() const {
  return std::visit(
      overloaded{[](const TorusStructure& s) { return s.lambda.size(); },
                 [](const SkewPolyStructure& s) { return s.lambda.size(); },
                 [](const PotentialAffineStructure&) { return 3; },
                 [](const PotentialQuotientStructure&) { return 3; },
                 [](const WeylStructure& s) { return 2 * s.pairs; },
                 [](const TensorStructure& s) {
                   int total = 0;
                   for (const auto& f : s.factors) total += f.arity();
                   return total;
                 }},
      *v_);
}

std::vector<bool> PoissonStructure::laurent_mask() const {
  return std::visit(
      overloaded{[&](const TorusStructure& s) {
                   return std::vector<bool>(static_cast<size_t>(s.lambda.size()), true);
                 },
                 [&](const SkewPolyStructure& s) {
                   return std::vector<bool>(static_cast<size_t>(s.lambda.size()), false);
                 },
                 [&](const PotentialAffineStructure&) { return std::vector<bool>(3, false); },
                 [&](const PotentialQuotientStructure&) { return std::vector<bool>(3, false); },
                 [&](const WeylStructure& s) {
                   std::vector<bool> m(static_cast<size_t>(2 * s.pairs), false);
                   if (s.laurent_x)
                     for (int i = 0; i < s.pairs; ++i) m[static_cast<size_t>(2 * i)] = true;
                   return m;
                 },
                 [&](const TensorStructure& s) {
                   std::vector<bool> m;
                   for (const auto& f : s.factors) {
                     auto fm = f.laurent_mask();
                     m.insert(m.end(), fm.begin(), fm.end());
                   }
                   return m;
                 }},
      *v_);
}

bool PoissonStructure::polynomial_type() const {
  auto m = laurent_mask();
  return std::none_of(m.begin(), m.end(), [](bool b) { return b; });
}

std::string PoissonStructure::kind_name() const {
  return std::visit(overloaded{[](const TorusStructure&) { return std::string("torus"); },
                               [](const SkewPolyStructure&) { return std::string("skewpoly"); },
                               [](const PotentialAffineStructure&) { return std::string("potential"); },
                               [](const PotentialQuotientStructure&) {
                                 return std::string("potential-quotient");
                               },
                               [](const WeylStructure&) { return std::string("weyl"); },
                               [](const TensorStructure&) { return std::string("tensor"); }},
                    *v_);
}

namespace {

// --- reduction by a single principal generator -----------------------------

bool divisible_by(const ExponentVec& e, const ExponentVec& lm) {
  for (size_t i = 0; i < e.size(); ++i)
    if (lm[i] > 0 && e[i] < lm[i]) return false;
  return true;
}

ExponentVec leading_exponent(const LaurentPoly& f, const MonomialOrder& order) {
  auto it = f.terms().begin();
  ExponentVec best = it->first;
  for (++it; it != f.terms().end(); ++it)
    if (order.greater(it->first, best)) best = it->first;
  return best;
}

// Remainder of f modulo the principal ideal (g), with lm = leading exponent
// of g (zeros outside its block when embedded) and lc its coefficient.
LaurentPoly reduce_principal(const LaurentPoly& f, const LaurentPoly& g, const ExponentVec& lm,
                             const Rat& lc) {
  LaurentPoly work = f;
  while (true) {
    const ExponentVec* hit = nullptr;
    const Scalar* hit_c = nullptr;
    for (const auto& [e, c] : work.terms()) {
      if (divisible_by(e, lm)) {
        hit = &e;
        hit_c = &c;
        break;  // terms iterate descending, so this is the largest reducible term
      }
    }
    if (!hit) break;
    LaurentPoly factor =
        LaurentPoly::monomial(exp_sub(*hit, lm), hit_c->scaled(Rat(1) / lc));
    work -= factor * g;
  }
  return work;
}

LaurentPoly embed_block(const LaurentPoly& f, int total_arity, int offset) {
  LaurentPoly out(total_arity);
  for (const auto& [e, c] : f.terms()) {
    ExponentVec full(static_cast<size_t>(total_arity), 0);
    std::copy(e.begin(), e.end(), full.begin() + offset);
    out.add_term(full, c);
  }
  return out;
}

LaurentPoly omega_minus_xi(const PotentialQuotientStructure& s) {
  LaurentPoly g = s.omega;
  g -= LaurentPoly::constant(3, Scalar(s.xi));
  return g;
}

// --- the individual brackets ------------------------------------------------

LaurentPoly pairing_bracket(const SkewParamMatrix& lambda, const LaurentPoly& f,
                            const LaurentPoly& g) {
  LaurentPoly out(f.arity());
  for (const auto& [u, cu] : f.terms())
    for (const auto& [v, cv] : g.terms()) {
      Scalar s = lambda.pair(u, v);
      if (s.is_zero()) continue;
      out.add_term(exp_add(u, v), s * (cu * cv));
    }
  return out;
}

LaurentPoly jacobian_bracket(const LaurentPoly& omega, const LaurentPoly& f,
                             const LaurentPoly& g) {
  LaurentPoly fx = partial_derivative(f, 0), fy = partial_derivative(f, 1),
              fz = partial_derivative(f, 2);
  LaurentPoly gx = partial_derivative(g, 0), gy = partial_derivative(g, 1),
              gz = partial_derivative(g, 2);
  LaurentPoly ox = partial_derivative(omega, 0), oy = partial_derivative(omega, 1),
              oz = partial_derivative(omega, 2);
  return fx * (gy * oz - gz * oy) - fy * (gx * oz - gz * ox) + fz * (gx * oy - gy * ox);
}

LaurentPoly weyl_bracket(const WeylStructure& w, const LaurentPoly& f, const LaurentPoly& g) {
  LaurentPoly out(2 * w.pairs);
  for (int i = 0; i < w.pairs; ++i) {
    LaurentPoly fx = partial_derivative(f, 2 * i), fy = partial_derivative(f, 2 * i + 1);
    LaurentPoly gx = partial_derivative(g, 2 * i), gy = partial_derivative(g, 2 * i + 1);
    out += fx * gy - fy * gx;
  }
  return out;
}

// Raw (unreduced) bracket of block monomials for a tensor factor.
LaurentPoly factor_bracket_raw(const PoissonStructure& s, const LaurentPoly& a,
                               const LaurentPoly& b) {
  return std::visit(
      overloaded{[&](const TorusStructure& t) { return pairing_bracket(t.lambda, a, b); },
                 [&](const SkewPolyStructure& t) { return pairing_bracket(t.lambda, a, b); },
                 [&](const PotentialAffineStructure& p) { return jacobian_bracket(p.omega, a, b); },
                 [&](const PotentialQuotientStructure& p) {
                   return jacobian_bracket(p.omega, a, b);
                 },
                 [&](const WeylStructure& w) { return weyl_bracket(w, a, b); },
                 [&](const TensorStructure&) -> LaurentPoly {
                   raise(Errc::internal_assertion, "nested tensor handled by caller");
                 }},
      s.v());
}

void collect_quotient_blocks(const PoissonStructure& s, int offset,
                             std::vector<std::pair<int, const PotentialQuotientStructure*>>& out) {
  if (const auto* q = std::get_if<PotentialQuotientStructure>(&s.v())) {
    out.emplace_back(offset, q);
  } else if (const auto* t = std::get_if<TensorStructure>(&s.v())) {
    int off = offset;
    for (const auto& f : t->factors) {
      collect_quotient_blocks(f, off, out);
      off += f.arity();
    }
  }
}

LaurentPoly reduce_quotient_blocks(const PoissonStructure& s, LaurentPoly f) {
  std::vector<std::pair<int, const PotentialQuotientStructure*>> blocks;
  collect_quotient_blocks(s, 0, blocks);
  for (const auto& [offset, q] : blocks) {
    LaurentPoly gen = embed_block(omega_minus_xi(*q), f.arity(), offset);
    ExponentVec lm_block = leading_exponent(q->omega, q->order);
    ExponentVec lm(static_cast<size_t>(f.arity()), 0);
    std::copy(lm_block.begin(), lm_block.end(), lm.begin() + offset);
    Rat lc = q->omega.coeff(lm_block).rational();
    f = reduce_principal(f, gen, lm, lc);
  }
  return f;
}

LaurentPoly tensor_bracket(const PoissonStructure& s, const TensorStructure& ts,
                           const LaurentPoly& f, const LaurentPoly& g) {
  const int total = f.arity();
  std::vector<int> offsets;
  int off = 0;
  for (const auto& factor : ts.factors) {
    offsets.push_back(off);
    off += factor.arity();
  }
  LaurentPoly out(total);
  for (const auto& [u, cu] : f.terms())
    for (const auto& [v, cv] : g.terms()) {
      Scalar c = cu * cv;
      for (size_t k = 0; k < ts.factors.size(); ++k) {
        const auto& factor = ts.factors[k];
        const int nk = factor.arity();
        const int o = offsets[k];
        ExponentVec uk(u.begin() + o, u.begin() + o + nk);
        ExponentVec vk(v.begin() + o, v.begin() + o + nk);
        LaurentPoly bk;
        if (std::holds_alternative<TensorStructure>(factor.v())) {
          bk = tensor_bracket(factor, std::get<TensorStructure>(factor.v()),
                              LaurentPoly::monomial(uk, Scalar(Rat(1))),
                              LaurentPoly::monomial(vk, Scalar(Rat(1))));
        } else {
          bk = factor_bracket_raw(factor, LaurentPoly::monomial(uk, Scalar(Rat(1))),
                                  LaurentPoly::monomial(vk, Scalar(Rat(1))));
        }
        if (bk.is_zero()) continue;
        ExponentVec rest = exp_add(u, v);
        for (int i = 0; i < nk; ++i) rest[static_cast<size_t>(o + i)] = 0;
        for (const auto& [ek, ck] : bk.terms()) {
          ExponentVec full = rest;
          for (int i = 0; i < nk; ++i) full[static_cast<size_t>(o + i)] += ek[static_cast<size_t>(i)];
          out.add_term(full, c * ck);
        }
      }
    }
  return out;
}

}  // namespace

void validate_element(const PoissonStructure& s, const LaurentPoly& f) {
  if (f.arity() != s.arity())
    raise(Errc::context_mismatch, "element arity " + std::to_string(f.arity()) +
                                      " does not match structure arity " +
                                      std::to_string(s.arity()));
  auto mask = s.laurent_mask();
  for (const auto& [e, c] : f.terms())
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] < 0 && !mask[i])
        raise(Errc::context_mismatch,
              "negative exponent on x" + std::to_string(i + 1) + " is not permitted here");
  // quotient representatives must be fully reduced
  std::vector<std::pair<int, const PotentialQuotientStructure*>> blocks;
  collect_quotient_blocks(s, 0, blocks);
  for (const auto& [offset, q] : blocks) {
    ExponentVec lm_block = leading_exponent(q->omega, q->order);
    ExponentVec lm(static_cast<size_t>(f.arity()), 0);
    std::copy(lm_block.begin(), lm_block.end(), lm.begin() + offset);
    for (const auto& [e, c] : f.terms())
      if (divisible_by(e, lm))
        raise(Errc::unreduced_quotient_input,
              "term " + monomial_to_string(e) + " is not reduced modulo Omega - xi");
  }
}

bool element_valid(const PoissonStructure& s, const LaurentPoly& f) {
  try {
    validate_element(s, f);
    return true;
  } catch (const ForgeError&) {
    return false;
  }
}

LaurentPoly normal_form_mod(const PotentialQuotientStructure& s, const LaurentPoly& f) {
  if (f.arity() != 3) raise(Errc::context_mismatch, "quotient elements live in three variables");
  if (f.has_negative_exponent())
    raise(Errc::context_mismatch, "quotient elements need nonnegative exponents");
  ExponentVec lm = leading_exponent(s.omega, s.order);
  Rat lc = s.omega.coeff(lm).rational();
  return reduce_principal(f, omega_minus_xi(s), lm, lc);
}

LaurentPoly normal_form_mod(const PoissonStructure& s, const LaurentPoly& f) {
  if (const auto* q = std::get_if<PotentialQuotientStructure>(&s.v())) return normal_form_mod(*q, f);
  raise(Errc::context_mismatch, "normal_form_mod needs a potential-quotient structure");
}

LaurentPoly mul_in(const PoissonStructure& s, const LaurentPoly& f, const LaurentPoly& g) {
  // reduce_quotient_blocks is a no-op when no quotient block exists
  return reduce_quotient_blocks(s, f * g);
}

LaurentPoly bracket(const PoissonStructure& s, const LaurentPoly& f, const LaurentPoly& g) {
  validate_element(s, f);
  validate_element(s, g);
  return std::visit(
      overloaded{[&](const TorusStructure& t) { return pairing_bracket(t.lambda, f, g); },
                 [&](const SkewPolyStructure& t) { return pairing_bracket(t.lambda, f, g); },
                 [&](const PotentialAffineStructure& p) { return jacobian_bracket(p.omega, f, g); },
                 [&](const PotentialQuotientStructure& p) {
                   return normal_form_mod(p, jacobian_bracket(p.omega, f, g));
                 },
                 [&](const WeylStructure& w) { return weyl_bracket(w, f, g); },
                 [&](const TensorStructure& t) {
                   return reduce_quotient_blocks(s, tensor_bracket(s, t, f, g));
                 }},
      s.v());
}

LaurentPoly sample_poly(const PoissonStructure& s, int degree_bound, Rng& rng) {
  const int n = s.arity();
  auto mask = s.laurent_mask();
  LaurentPoly p(n);
  int nterms = static_cast<int>(rng.uniform(1, 3));
  for (int t = 0; t < nterms; ++t) {
    ExponentVec e(static_cast<size_t>(n), 0);
    int budget = static_cast<int>(rng.uniform(0, degree_bound));
    for (int step = 0; step < budget; ++step) {
      size_t v = static_cast<size_t>(rng.uniform(0, n - 1));
      std::int64_t dir = (mask[v] && rng.uniform(0, 1) == 1) ? -1 : 1;
      e[v] += dir;
    }
    p.add_term(e, Scalar(rng.small_rational(3)));
  }
  return reduce_quotient_blocks(s, p);
}

namespace {

AxiomReport run_axiom_checks(const BracketFn& br,
                             const std::function<LaurentPoly(Rng&)>& sample,
                             const std::function<LaurentPoly(const LaurentPoly&,
                                                             const LaurentPoly&)>& mul,
                             int trials, std::uint64_t seed) {
  Rng rng(seed);
  AxiomReport rep;
  auto fail = [&](const std::string& axiom, const LaurentPoly& f, const LaurentPoly& g,
                  const LaurentPoly& h, const std::string& detail) {
    rep.pass = false;
    rep.axiom = axiom;
    rep.witness_f = to_string(f);
    rep.witness_g = to_string(g);
    rep.witness_h = to_string(h);
    rep.detail = detail;
  };
  for (int t = 0; t < trials; ++t) {
    LaurentPoly f = sample(rng), g = sample(rng), h = sample(rng);
    LaurentPoly fg = br(f, g);
    if (!(fg + br(g, f)).is_zero()) {
      fail("antisymmetry", f, g, h, "{f,g} + {g,f} != 0");
      return rep;
    }
    Rat alpha = rng.small_rational(3), beta = rng.small_rational(3);
    LaurentPoly lin = br(f.scaled(Scalar(alpha)) + g.scaled(Scalar(beta)), h);
    LaurentPoly rhs = br(f, h).scaled(Scalar(alpha)) + br(g, h).scaled(Scalar(beta));
    if (!(lin - rhs).is_zero()) {
      fail("bilinearity", f, g, h, "{af+bg,h} != a{f,h}+b{g,h}");
      return rep;
    }
    LaurentPoly leib = br(f, mul(g, h)) - (mul(fg, h) + mul(g, br(f, h)));
    if (!leib.is_zero()) {
      fail("leibniz", f, g, h, "{f,gh} != {f,g}h + g{f,h}");
      return rep;
    }
    LaurentPoly jac = br(f, br(g, h)) + br(g, br(h, f)) + br(h, fg);
    if (!jac.is_zero()) {
      fail("jacobi", f, g, h, "cyclic sum {f,{g,h}} is " + to_string(jac));
      return rep;
    }
  }
  return rep;
}

}  // namespace

AxiomReport verify_poisson_axioms(const PoissonStructure& s, int degree_bound, int trials,
                                  std::uint64_t seed) {
  return run_axiom_checks(
      [&](const LaurentPoly& a, const LaurentPoly& b) { return bracket(s, a, b); },
      [&](Rng& rng) { return sample_poly(s, degree_bound, rng); },
      [&](const LaurentPoly& a, const LaurentPoly& b) { return mul_in(s, a, b); }, trials, seed);
}

AxiomReport verify_poisson_axioms(const BracketFn& br, int arity, int degree_bound, int trials,
                                  std::uint64_t seed) {
  return run_axiom_checks(
      br,
      [&](Rng& rng) {
        LaurentPoly p(arity);
        int nterms = static_cast<int>(rng.uniform(1, 3));
        for (int t = 0; t < nterms; ++t) {
          ExponentVec e(static_cast<size_t>(arity), 0);
          int budget = static_cast<int>(rng.uniform(0, degree_bound));
          for (int step = 0; step < budget; ++step)
            e[static_cast<size_t>(rng.uniform(0, arity - 1))] += 1;
          p.add_term(e, Scalar(rng.small_rational(3)));
        }
        return p;
      },
      [](const LaurentPoly& a, const LaurentPoly& b) { return a * b; }, trials, seed);
}

CentralityReport omega_centrality(const PotentialAffineStructure& s) {
  CentralityReport rep;
  for (int i = 0; i < 3; ++i) {
    LaurentPoly b = jacobian_bracket(s.omega, s.omega, LaurentPoly::variable(3, i));
    rep.brackets.push_back(b);
    if (!b.is_zero()) rep.central = false;
  }
  return rep;
}

LaurentPoly table_bracket(const std::vector<std::vector<LaurentPoly>>& table,
                          const LaurentPoly& f, const LaurentPoly& g) {
  const int n = f.arity();
  LaurentPoly out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const LaurentPoly& tij = table[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (tij.is_zero()) continue;
      LaurentPoly fi = partial_derivative(f, i), fj = partial_derivative(f, j);
      LaurentPoly gi = partial_derivative(g, i), gj = partial_derivative(g, j);
      out += (fi * gj - fj * gi) * tij;
    }
  return out;
}

}  // namespace forge
