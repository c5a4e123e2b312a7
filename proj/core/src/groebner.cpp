#include "forge/groebner.hpp"

#include <algorithm>

namespace forge {

namespace {

bool divides(const ExponentVec& a, const ExponentVec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

ExponentVec exp_lcm(const ExponentVec& a, const ExponentVec& b) {
  ExponentVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

struct Term {
  ExponentVec e;
  Rat c;
};

Term leading_term(const LaurentPoly& f, const MonomialOrder& order) {
  auto it = f.terms().begin();
  Term best{it->first, it->second.rational()};
  for (++it; it != f.terms().end(); ++it)
    if (order.greater(it->first, best.e)) best = {it->first, it->second.rational()};
  return best;
}

void check_poly(const LaurentPoly& f, const GroebnerLimits& limits) {
  if (f.arity() > limits.max_arity) raise(Errc::guard_exceeded, "arity exceeds Groebner guard");
  if (f.has_negative_exponent())
    raise(Errc::bad_input, "Groebner input needs nonnegative exponents");
  if (!f.coefficients_rational())
    raise(Errc::bad_input, "Groebner input needs rational coefficients");
  for (const auto& [e, c] : f.terms())
    if (adams_degree(e) > limits.max_input_degree)
      raise(Errc::guard_exceeded, "input degree exceeds Groebner guard");
}

LaurentPoly make_monic(const LaurentPoly& f, const MonomialOrder& order) {
  Term lt = leading_term(f, order);
  return f.scaled(Scalar(Rat(1) / lt.c));
}

// Integer primitive rescaling keeps intermediate coefficients small.
LaurentPoly make_primitive(const LaurentPoly& f) {
  if (f.is_zero()) return f;
  Int den_lcm(1), num_gcd(0);
  for (const auto& [e, c] : f.terms()) den_lcm = lcm(den_lcm, c.rational().get_den());
  for (const auto& [e, c] : f.terms())
    num_gcd = gcd(num_gcd, Int(c.rational().get_num() * (den_lcm / c.rational().get_den())));
  return f.scaled(Scalar(make_rat(den_lcm, num_gcd)));
}

LaurentPoly reduce(const LaurentPoly& f, const std::vector<LaurentPoly>& basis,
                   const std::vector<Term>& lts, const MonomialOrder& order) {
  LaurentPoly work = f;
  LaurentPoly remainder(f.arity());
  while (!work.is_zero()) {
    Term t = leading_term(work, order);
    bool reduced = false;
    for (size_t k = 0; k < basis.size(); ++k) {
      if (!divides(lts[k].e, t.e)) continue;
      LaurentPoly factor =
          LaurentPoly::monomial(exp_sub(t.e, lts[k].e), Scalar(t.c / lts[k].c));
      work -= factor * basis[k];
      reduced = true;
      break;
    }
    if (!reduced) {
      LaurentPoly lt_poly = LaurentPoly::monomial(t.e, Scalar(t.c));
      remainder += lt_poly;
      work -= lt_poly;
    }
  }
  return remainder;
}

}  // namespace

GroebnerBasis groebner_basis(std::vector<LaurentPoly> gens, MonomialOrder order,
                             const GroebnerLimits& limits) {
  std::vector<LaurentPoly> basis;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    check_poly(g, limits);
    basis.push_back(make_primitive(g));
  }
  if (basis.empty()) raise(Errc::zero_generators, "no nonzero generators");

  std::vector<Term> lts;
  for (const auto& g : basis) lts.push_back(leading_term(g, order));

  // pair queue under the normal selection strategy (smallest lcm first)
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    size_t best = 0;
    ExponentVec best_lcm = exp_lcm(lts[pairs[0].first].e, lts[pairs[0].second].e);
    for (size_t k = 1; k < pairs.size(); ++k) {
      ExponentVec l = exp_lcm(lts[pairs[k].first].e, lts[pairs[k].second].e);
      if (order.greater(best_lcm, l)) {
        best = k;
        best_lcm = l;
      }
    }
    auto [i, j] = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

    // coprime leading monomials reduce to zero (first Buchberger criterion)
    ExponentVec sum = exp_add(lts[i].e, lts[j].e);
    if (sum == best_lcm) continue;

    LaurentPoly si = LaurentPoly::monomial(exp_sub(best_lcm, lts[i].e), Scalar(Rat(1) / lts[i].c));
    LaurentPoly sj = LaurentPoly::monomial(exp_sub(best_lcm, lts[j].e), Scalar(Rat(1) / lts[j].c));
    LaurentPoly spoly = si * basis[i] - sj * basis[j];
    LaurentPoly rem = reduce(spoly, basis, lts, order);
    if (rem.is_zero()) continue;
    rem = make_primitive(rem);
    size_t idx = basis.size();
    basis.push_back(rem);
    lts.push_back(leading_term(rem, order));
    for (size_t k = 0; k < idx; ++k) pairs.emplace_back(k, idx);
  }

  // inter-reduce to the unique reduced basis
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t k = 0; k < basis.size(); ++k) {
      std::vector<LaurentPoly> others;
      std::vector<Term> other_lts;
      for (size_t t = 0; t < basis.size(); ++t) {
        if (t == k) continue;
        others.push_back(basis[t]);
        other_lts.push_back(lts[t]);
      }
      if (others.empty()) break;
      LaurentPoly r = reduce(basis[k], others, other_lts, order);
      if (!(r == basis[k])) changed = true;
      if (r.is_zero()) {
        basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(k));
        lts.erase(lts.begin() + static_cast<std::ptrdiff_t>(k));
        --k;
        changed = true;
        continue;
      }
      basis[k] = r;
      lts[k] = leading_term(r, order);
    }
  }
  for (auto& g : basis) g = make_monic(g, order);

  std::sort(basis.begin(), basis.end(), [&](const LaurentPoly& a, const LaurentPoly& b) {
    return order.greater(leading_term(a, order).e, leading_term(b, order).e);
  });

  GroebnerBasis out{std::move(basis), order};
  // Buchberger criterion must hold on the finished basis
  std::vector<Term> final_lts;
  for (const auto& g : out.generators) final_lts.push_back(leading_term(g, order));
  for (size_t i = 0; i < out.generators.size(); ++i)
    for (size_t j = i + 1; j < out.generators.size(); ++j) {
      ExponentVec l = exp_lcm(final_lts[i].e, final_lts[j].e);
      LaurentPoly si =
          LaurentPoly::monomial(exp_sub(l, final_lts[i].e), Scalar(Rat(1) / final_lts[i].c));
      LaurentPoly sj =
          LaurentPoly::monomial(exp_sub(l, final_lts[j].e), Scalar(Rat(1) / final_lts[j].c));
      LaurentPoly sp = si * out.generators[i] - sj * out.generators[j];
      if (!reduce(sp, out.generators, final_lts, order).is_zero())
        raise(Errc::internal_assertion, "S-polynomial does not reduce to zero");
    }
  return out;
}

LaurentPoly normal_form(const LaurentPoly& f, const GroebnerBasis& g) {
  if (f.is_zero()) return f;
  if (f.has_negative_exponent()) raise(Errc::bad_input, "normal form needs nonnegative exponents");
  std::vector<Term> lts;
  for (const auto& gen : g.generators) lts.push_back(leading_term(gen, g.order));
  return reduce(f, g.generators, lts, g.order);
}

QuotientDim quotient_dimension(const GroebnerBasis& g) {
  QuotientDim out;
  if (g.generators.empty()) return out;
  const int n = g.generators[0].arity();
  std::vector<ExponentVec> lms;
  for (const auto& gen : g.generators) lms.push_back(leading_term(gen, g.order).e);

  // finite iff every variable has a pure power among the leading monomials
  std::vector<std::int64_t> box(static_cast<size_t>(n), -1);
  for (const auto& lm : lms) {
    int nonzero = -1;
    bool pure = true;
    for (int i = 0; i < n; ++i) {
      if (lm[static_cast<size_t>(i)] == 0) continue;
      if (nonzero >= 0) {
        pure = false;
        break;
      }
      nonzero = i;
    }
    if (pure && nonzero >= 0) {
      auto& b = box[static_cast<size_t>(nonzero)];
      if (b < 0 || lm[static_cast<size_t>(nonzero)] < b) b = lm[static_cast<size_t>(nonzero)];
    }
    if (pure && nonzero < 0) {
      // a constant generator: the ideal is the whole ring
      out.finite = true;
      out.dimension = 0;
      return out;
    }
  }
  for (auto b : box)
    if (b < 0) return out;  // infinite

  Int count(0);
  ExponentVec e(static_cast<size_t>(n), 0);
  auto rec = [&](auto&& self, int var) -> void {
    if (var == n) {
      for (const auto& lm : lms)
        if (divides(lm, e)) return;
      ++count;
      return;
    }
    for (std::int64_t k = 0; k < box[static_cast<size_t>(var)]; ++k) {
      e[static_cast<size_t>(var)] = k;
      self(self, var + 1);
    }
    e[static_cast<size_t>(var)] = 0;
  };
  rec(rec, 0);
  out.finite = true;
  out.dimension = count;
  return out;
}

SingularityReport is_isolated_singularity(const LaurentPoly& omega, MonomialOrder order) {
  if (omega.arity() != 3) raise(Errc::bad_input, "potential must live in three variables");
  if (omega.has_negative_exponent())
    raise(Errc::bad_input, "potential must have nonnegative exponents");
  auto d = homogeneous_adams_degree(omega);
  if (!d) raise(Errc::not_homogeneous, "potential must be homogeneous and nonzero");
  if (*d < 2) raise(Errc::degree_violation, "potential degree must be at least 2");

  std::vector<LaurentPoly> partials;
  for (int i = 0; i < 3; ++i) {
    LaurentPoly p = partial_derivative(omega, i);
    if (!p.is_zero()) partials.push_back(p);
  }
  SingularityReport rep;
  if (partials.size() < 3) {
    // a vanishing partial leaves a coordinate direction singular
    rep.isolated = false;
    return rep;
  }
  auto gb = groebner_basis(partials, order);
  auto qd = quotient_dimension(gb);
  rep.isolated = qd.finite;
  if (qd.finite) rep.dimension = qd.dimension;
  return rep;
}

}  // namespace forge
