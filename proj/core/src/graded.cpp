#include "forge/graded.hpp"

#include <algorithm>
#include <map>

namespace forge {

std::int64_t WeightValuation::value_of_monomial(const ExponentVec& e) const {
  if (weights.size() != e.size()) raise(Errc::arity_mismatch, "weight vector arity mismatch");
  std::int64_t v = 0;
  for (size_t i = 0; i < e.size(); ++i) v += weights[i] * e[i];
  return v;
}

std::optional<std::int64_t> WeightValuation::value(const LaurentPoly& f) const {
  if (f.is_zero()) return std::nullopt;
  std::optional<std::int64_t> best;
  for (const auto& [e, c] : f.terms()) {
    std::int64_t v = value_of_monomial(e);
    if (!best || v < *best) best = v;
  }
  return best;
}

std::vector<ExponentVec> enumerate_structure_monomials(const PoissonStructure& s, int bound) {
  const int n = s.arity();
  auto mask = s.laurent_mask();
  std::vector<ExponentVec> out;
  ExponentVec e(static_cast<size_t>(n), 0);
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == n) {
      out.push_back(e);
      return;
    }
    std::int64_t lo = mask[static_cast<size_t>(var)] ? -remaining : 0;
    for (std::int64_t k = lo; k <= remaining; ++k) {
      e[static_cast<size_t>(var)] = k;
      self(self, var + 1, remaining - static_cast<int>(std::abs(k)));
    }
    e[static_cast<size_t>(var)] = 0;
  };
  rec(rec, 0, bound);
  std::sort(out.begin(), out.end(), [](const ExponentVec& a, const ExponentVec& b) {
    std::int64_t da = 0, db = 0;
    for (auto v : a) da += std::abs(v);
    for (auto v : b) db += std::abs(v);
    if (da != db) return da < db;
    return grevlex_greater(a, b);
  });
  return out;
}

DegreeShiftReport bracket_degree_shift(const PoissonStructure& s, int bound) {
  if (s.is_quotient())
    raise(Errc::context_mismatch, "degree shift needs a graded structure, not a quotient");
  auto monos = enumerate_structure_monomials(s, bound);
  DegreeShiftReport rep;
  for (size_t a = 0; a < monos.size(); ++a)
    for (size_t b = a; b < monos.size(); ++b) {
      LaurentPoly br = bracket(s, LaurentPoly::monomial(monos[a], Scalar(Rat(1))),
                               LaurentPoly::monomial(monos[b], Scalar(Rat(1))));
      if (br.is_zero()) continue;
      std::int64_t base = adams_degree(monos[a]) + adams_degree(monos[b]);
      for (const auto& [e, c] : br.terms()) {
        std::int64_t shift = adams_degree(e) - base;
        if (!rep.max_shift) {
          rep.max_shift = shift;
        } else {
          if (shift != *rep.max_shift) rep.homogeneous = false;
          if (shift > *rep.max_shift) rep.max_shift = shift;
        }
      }
    }
  return rep;
}

ValuationCheckReport check_w_valuation(const WeightValuation& nu, const PoissonStructure& s,
                                       std::int64_t w, int bound, int trials,
                                       std::uint64_t seed) {
  if (s.is_quotient())
    raise(Errc::context_mismatch, "weight valuations act on graded structures, not quotients");
  ValuationCheckReport rep;
  auto fail = [&](int axiom, const LaurentPoly& a, const LaurentPoly& b,
                  const std::string& detail) {
    rep.pass = false;
    rep.axiom = axiom;
    rep.witness_a = to_string(a);
    rep.witness_b = to_string(b);
    rep.detail = detail;
  };
  auto val_str = [](const std::optional<std::int64_t>& v) {
    return v ? std::to_string(*v) : std::string("infinity");
  };

  // axioms (1) and (2) on structural cases
  LaurentPoly zero(s.arity());
  if (nu.value(zero)) {
    fail(1, zero, zero, "nu(0) must be infinite");
    return rep;
  }
  LaurentPoly one = LaurentPoly::constant(s.arity(), Scalar(Rat(1)));
  if (nu.value(one) != std::optional<std::int64_t>(0)) {
    fail(2, one, one, "nu(c) must be 0 for nonzero constants");
    return rep;
  }

  // exhaustive monomial pairs: axioms (3) and (5)
  auto monos = enumerate_structure_monomials(s, bound);
  for (size_t i = 0; i < monos.size(); ++i)
    for (size_t j = i; j < monos.size(); ++j) {
      LaurentPoly a = LaurentPoly::monomial(monos[i], Scalar(Rat(1)));
      LaurentPoly b = LaurentPoly::monomial(monos[j], Scalar(Rat(1)));
      std::int64_t va = nu.value_of_monomial(monos[i]), vb = nu.value_of_monomial(monos[j]);
      if (nu.value(a * b) != std::optional<std::int64_t>(va + vb)) {
        fail(3, a, b, "nu(ab) != nu(a) + nu(b)");
        return rep;
      }
      LaurentPoly br = bracket(s, a, b);
      auto vbr = nu.value(br);
      if (vbr && *vbr < va + vb - w) {
        fail(5, a, b,
             "nu({a,b}) = " + val_str(vbr) + " < " + std::to_string(va + vb - w) +
                 " = nu(a)+nu(b)-w");
        return rep;
      }
    }

  // random polynomials: axioms (1), (3), (4), (5)
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    LaurentPoly a = sample_poly(s, bound, rng);
    LaurentPoly b = sample_poly(s, bound, rng);
    auto va = nu.value(a), vb = nu.value(b);
    if ((a.is_zero()) != !va.has_value()) {
      fail(1, a, b, "nu(a) infinite iff a = 0");
      return rep;
    }
    if (!a.is_zero() && !b.is_zero()) {
      auto vab = nu.value(a * b);
      if (vab != std::optional<std::int64_t>(*va + *vb)) {
        fail(3, a, b, "nu(ab) = " + val_str(vab) + " != nu(a)+nu(b)");
        return rep;
      }
    }
    auto vsum = nu.value(a + b);
    if (va && vb && vsum && *vsum < std::min(*va, *vb)) {
      fail(4, a, b, "nu(a+b) < min(nu(a), nu(b))");
      return rep;
    }
    auto vbr = nu.value(bracket(s, a, b));
    if (va && vb && vbr && *vbr < *va + *vb - w) {
      fail(5, a, b,
           "nu({a,b}) = " + val_str(vbr) + " < " + std::to_string(*va + *vb - w) +
               " = nu(a)+nu(b)-w");
      return rep;
    }
  }
  return rep;
}

GrCheckReport associated_graded_bracket_check(const LaurentPoly& omega, const Rat& xi, int bound,
                                              int trials, std::uint64_t seed) {
  PoissonStructure affine = PoissonStructure::potential_affine(omega);
  PoissonStructure quotient = PoissonStructure::potential_quotient(omega, xi);
  PoissonStructure graded_quotient = PoissonStructure::potential_quotient(omega, Rat(0));
  std::int64_t d = *homogeneous_adams_degree(omega);

  GrCheckReport rep;
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    LaurentPoly f = sample_poly(quotient, bound, rng);
    LaurentPoly g = sample_poly(quotient, bound, rng);
    if (f.is_zero() || g.is_zero()) continue;
    LaurentPoly q = normal_form_mod(quotient, bracket(affine, f, g));
    LaurentPoly tf = top_adams_form(f), tg = top_adams_form(g);
    LaurentPoly r = normal_form_mod(graded_quotient, bracket(affine, tf, tg));
    std::int64_t target = top_adams_degree(f) + top_adams_degree(g) + (d - 3);
    bool ok;
    if (!r.is_zero()) {
      ok = !q.is_zero() && top_adams_degree(q) == target && top_adams_form(q) == r;
    } else {
      ok = q.is_zero() || top_adams_degree(q) < target;
    }
    if (!ok) {
      rep.pass = false;
      rep.witness_f = to_string(f);
      rep.witness_g = to_string(g);
      rep.detail = "graded symbol mismatch: quotient bracket " + to_string(q) +
                   ", graded bracket " + to_string(r);
      return rep;
    }
  }
  return rep;
}

SubalgebraAd::SubalgebraAd(PoissonStructure base, int d, LaurentPoly zeta)
    : base_(std::move(base)), d_(d), zeta_(std::move(zeta)) {}

bool SubalgebraAd::contains(const LaurentPoly& f) const {
  if (f.arity() != base_.arity()) raise(Errc::arity_mismatch, "membership arity mismatch");
  if (!f.coefficients_rational())
    raise(Errc::context_mismatch, "membership test expects rational coefficients");
  LaurentPoly g = f;
  // candidate t from the lowest nonzero component of zeta
  if (!zeta_.is_zero()) {
    auto zeta_comps = adams_components(zeta_);
    auto [j0, zj0] = *zeta_comps.begin();
    auto f_comps = adams_components(f);
    Rat t(0);
    auto it = f_comps.find(j0);
    if (it != f_comps.end()) {
      const auto& [le, lc] = *zj0.terms().begin();
      Scalar fc = it->second.coeff(le);
      t = fc.rational() / lc.rational();
    }
    if (sgn(t) != 0) g -= zeta_.scaled(Scalar(t));
  }
  for (const auto& [deg, comp] : adams_components(g))
    if (deg >= 1 && deg < d_ && !comp.is_zero()) return false;
  return true;
}

SubalgebraAd construct_Adzeta(const PoissonStructure& s, int d,
                              const std::optional<LaurentPoly>& zeta) {
  if (!s.polynomial_type())
    raise(Errc::context_mismatch, "A(d) subalgebras live in polynomial structures");
  const int n = s.arity();
  if (!zeta || zeta->is_zero()) {
    if (d < 2) raise(Errc::degree_violation, "threshold d must be at least 2");
    return SubalgebraAd(s, d, LaurentPoly(n));
  }
  if (d < 4) raise(Errc::degree_violation, "threshold d must be at least 4 when zeta is present");
  if (zeta->arity() != n) raise(Errc::arity_mismatch, "zeta arity mismatch");
  for (const auto& [deg, comp] : adams_components(*zeta))
    if (deg < 2 || deg > d - 1)
      raise(Errc::degree_violation, "zeta component of degree " + std::to_string(deg) +
                                        " lies outside 2..d-1");
  LaurentPoly square = (*zeta) * (*zeta);
  for (const auto& [deg, comp] : adams_components(square))
    if (deg >= 1 && deg < d)
      raise(Errc::zeta_square_escapes, "zeta^2 has a degree-" + std::to_string(deg) +
                                           " component " + to_string(comp));
  return SubalgebraAd(s, d, *zeta);
}

namespace {

LaurentPoly sample_homogeneous(const PoissonStructure& s, int degree, Rng& rng) {
  const int n = s.arity();
  LaurentPoly p(n);
  int nterms = static_cast<int>(rng.uniform(1, 3));
  for (int t = 0; t < nterms; ++t) {
    ExponentVec e(static_cast<size_t>(n), 0);
    for (int step = 0; step < degree; ++step)
      e[static_cast<size_t>(rng.uniform(0, n - 1))] += 1;
    p.add_term(e, Scalar(rng.small_rational(3)));
  }
  return p;
}

}  // namespace

AdClosureReport check_Ad_closure(const PoissonStructure& s, int d, int bound, int trials,
                                 std::uint64_t seed) {
  if (!s.polynomial_type())
    raise(Errc::context_mismatch, "A(d) closure needs a polynomial-type structure");
  if (d < 2) raise(Errc::degree_violation, "threshold d must be at least 2");
  if (bound < d) raise(Errc::bad_input, "bound must be at least d");
  AdClosureReport rep;
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    int df = static_cast<int>(rng.uniform(d, bound));
    int dg = static_cast<int>(rng.uniform(d, bound));
    LaurentPoly f = sample_homogeneous(s, df, rng);
    LaurentPoly g = sample_homogeneous(s, dg, rng);
    LaurentPoly br = bracket(s, f, g);
    for (const auto& [deg, comp] : adams_components(br)) {
      if (!comp.is_zero() && deg < 2 * d - 2) {
        rep.pass = false;
        rep.witness_f = to_string(f);
        rep.witness_g = to_string(g);
        rep.detail = "bracket component of degree " + std::to_string(deg) + " below " +
                     std::to_string(2 * d - 2);
        return rep;
      }
    }
  }
  return rep;
}

namespace {

struct SpanBasis {
  std::vector<ExponentVec> universe;  // descending canonical
  std::map<ExponentVec, size_t, TermsDescCmp> index;
  std::vector<std::vector<Rat>> rows;  // reduced row echelon, pivots ascending
  std::vector<size_t> pivots;

  std::optional<std::vector<Rat>> to_vector(const LaurentPoly& p) const {
    std::vector<Rat> v(universe.size(), Rat(0));
    for (const auto& [e, c] : p.terms()) {
      auto it = index.find(e);
      if (it == index.end()) return std::nullopt;  // leaves the box
      if (!c.is_rational())
        raise(Errc::context_mismatch, "closure needs rational bracket coefficients");
      v[it->second] = c.rational();
    }
    return v;
  }

  void reduce(std::vector<Rat>& v) const {
    for (size_t r = 0; r < rows.size(); ++r) {
      const Rat& coef = v[pivots[r]];
      if (sgn(coef) == 0) continue;
      Rat f = coef;
      for (size_t k = pivots[r]; k < v.size(); ++k) v[k] -= f * rows[r][k];
    }
  }

  bool insert(std::vector<Rat> v) {
    reduce(v);
    size_t pivot = v.size();
    for (size_t k = 0; k < v.size(); ++k)
      if (sgn(v[k]) != 0) {
        pivot = k;
        break;
      }
    if (pivot == v.size()) return false;
    Rat inv = Rat(1) / v[pivot];
    for (size_t k = pivot; k < v.size(); ++k) v[k] *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      Rat f = rows[r][pivot];
      if (sgn(f) == 0) continue;
      for (size_t k = pivot; k < v.size(); ++k) rows[r][k] -= f * v[k];
    }
    size_t at = 0;
    while (at < pivots.size() && pivots[at] < pivot) ++at;
    rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(at), std::move(v));
    pivots.insert(pivots.begin() + static_cast<std::ptrdiff_t>(at), pivot);
    return true;
  }

  LaurentPoly to_poly(size_t r, int arity) const {
    LaurentPoly p(arity);
    for (size_t k = 0; k < universe.size(); ++k)
      if (sgn(rows[r][k]) != 0) p.add_term(universe[k], Scalar(rows[r][k]));
    return p;
  }
};

}  // namespace

std::vector<LaurentPoly> bounded_poisson_closure(const PoissonStructure& s,
                                                 const std::vector<LaurentPoly>& seeds,
                                                 int degree_box, int max_rounds) {
  if (s.is_quotient())
    raise(Errc::context_mismatch, "closure runs over torus or polynomial structures");
  const int n = s.arity();
  auto mask = s.laurent_mask();

  SpanBasis span;
  {
    ExponentVec e(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, int var) -> void {
      if (var == n) {
        span.universe.push_back(e);
        return;
      }
      std::int64_t lo = mask[static_cast<size_t>(var)] ? -degree_box : 0;
      for (std::int64_t k = lo; k <= degree_box; ++k) {
        e[static_cast<size_t>(var)] = k;
        self(self, var + 1);
      }
      e[static_cast<size_t>(var)] = 0;
    };
    rec(rec, 0);
  }
  if (span.universe.size() > 20000) raise(Errc::guard_exceeded, "closure box too large");
  std::sort(span.universe.begin(), span.universe.end(), grevlex_greater);
  for (size_t k = 0; k < span.universe.size(); ++k) span.index.emplace(span.universe[k], k);

  for (const auto& seed : seeds) {
    validate_element(s, seed);
    auto v = span.to_vector(seed);
    if (!v) raise(Errc::bad_input, "seed " + to_string(seed) + " lies outside the box");
    span.insert(std::move(*v));
  }

  for (int round = 0; round < max_rounds; ++round) {
    size_t dim_before = span.rows.size();
    std::vector<LaurentPoly> reps;
    for (size_t r = 0; r < span.rows.size(); ++r) reps.push_back(span.to_poly(r, n));
    for (size_t a = 0; a < reps.size(); ++a)
      for (size_t b = a; b < reps.size(); ++b) {
        if (auto v = span.to_vector(reps[a] * reps[b])) span.insert(std::move(*v));
        if (auto v = span.to_vector(bracket(s, reps[a], reps[b]))) span.insert(std::move(*v));
      }
    if (span.rows.size() == dim_before) break;
  }

  std::vector<LaurentPoly> out;
  for (size_t r = 0; r < span.rows.size(); ++r) {
    LaurentPoly p = span.to_poly(r, n);
    // clear denominators to primitive integer form
    Int den_lcm(1), num_gcd(0);
    for (const auto& [e, c] : p.terms()) den_lcm = lcm(den_lcm, c.rational().get_den());
    for (const auto& [e, c] : p.terms())
      num_gcd = gcd(num_gcd, Int(c.rational().get_num() * (den_lcm / c.rational().get_den())));
    if (sgn(num_gcd) > 0) p = p.scaled(Scalar(make_rat(den_lcm, num_gcd)));
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace forge
