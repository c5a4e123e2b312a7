#include "forge/morphism.hpp"

namespace forge {

LaurentPoly MonomialMap::image(int i) const {
  const int n = exponents.rows();
  ExponentVec e(static_cast<size_t>(n), 0);
  for (int k = 0; k < n; ++k) {
    if (!exponents.at(k, i).fits_slong_p()) raise(Errc::guard_exceeded, "exponent exceeds int64");
    e[static_cast<size_t>(k)] = exponents.at(k, i).get_si();
  }
  return LaurentPoly::monomial(e, Scalar(coeffs[static_cast<size_t>(i)]));
}

std::vector<LaurentPoly> MonomialMap::images() const {
  std::vector<LaurentPoly> out;
  for (int i = 0; i < size(); ++i) out.push_back(image(i));
  return out;
}

MonomialMap monomial_map_from_images(const std::vector<LaurentPoly>& images) {
  const int n = static_cast<int>(images.size());
  MonomialMap map;
  map.exponents = IntMatrix(n, n);
  for (int i = 0; i < n; ++i) {
    const LaurentPoly& im = images[static_cast<size_t>(i)];
    if (im.arity() != n || !im.is_single_term())
      raise(Errc::bad_input, "monomial map images must be single terms in the same torus");
    const auto& [e, c] = *im.terms().begin();
    if (!c.is_rational() || sgn(c.rational()) == 0)
      raise(Errc::bad_input, "monomial map coefficients must be nonzero rationals");
    for (int k = 0; k < n; ++k) map.exponents.at(k, i) = Int(static_cast<long>(e[static_cast<size_t>(k)]));
    map.coeffs.push_back(c.rational());
  }
  return map;
}

MorphismReport check_poisson_morphism(const PoissonStructure& src, const PoissonStructure& tgt,
                                      const PolyMap& map) {
  const int n = src.arity();
  if (static_cast<int>(map.images.size()) != n)
    raise(Errc::arity_mismatch, "morphism needs one image per source generator");
  for (const auto& im : map.images) validate_element(tgt, im);
  MorphismReport rep;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      LaurentPoly src_bracket =
          bracket(src, LaurentPoly::variable(n, i), LaurentPoly::variable(n, j));
      MorphismPairIdentity id;
      id.i = i + 1;
      id.j = j + 1;
      id.lhs = substitute(src_bracket, map.images);
      if (tgt.is_quotient()) id.lhs = normal_form_mod(tgt, id.lhs);
      id.rhs = bracket(tgt, map.images[static_cast<size_t>(i)], map.images[static_cast<size_t>(j)]);
      id.ok = id.lhs == id.rhs;
      if (!id.ok && rep.pass) {
        rep.pass = false;
        rep.first_failure = rep.identities.size();
      }
      rep.identities.push_back(std::move(id));
    }
  return rep;
}

CompatReport monomial_compat(const SkewParamMatrix& lambda, const IntMatrix& b) {
  const int n = lambda.size();
  if (b.rows() != n || b.cols() != n)
    raise(Errc::arity_mismatch, "exponent matrix size does not match the torus rank");
  CompatReport rep;
  for (int i = 0; i < n && rep.pass; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar lhs;
      for (int k = 0; k < n; ++k) {
        if (sgn(b.at(k, i)) == 0) continue;
        for (int t = 0; t < n; ++t) {
          if (sgn(b.at(t, j)) == 0) continue;
          const Scalar& l = lambda.at(k, t);
          if (l.is_zero()) continue;
          lhs += l.scaled(Rat(b.at(k, i)) * Rat(b.at(t, j)));
        }
      }
      if (lhs != lambda.at(i, j)) {
        rep.pass = false;
        rep.i = i + 1;
        rep.j = j + 1;
        rep.lhs = lhs;
        rep.rhs = lambda.at(i, j);
        break;
      }
    }
  return rep;
}

EndoClassification classify_torus_endo(const SkewParamMatrix& lambda, const MonomialMap& map) {
  EndoClassification out;
  auto compat = monomial_compat(lambda, map.exponents);
  if (!compat.pass) {
    out.kind = EndoClassification::Kind::not_poisson;
    out.fail_i = compat.i;
    out.fail_j = compat.j;
    out.lhs = compat.lhs;
    out.rhs = compat.rhs;
    return out;
  }
  const int n = lambda.size();
  Int det = det_int(map.exponents);
  if (sgn(det) == 0) {
    out.kind = EndoClassification::Kind::not_injective;
    out.lattice_index = 0;
    return out;
  }
  if (det == 1 || det == -1) {
    IntMatrix binv = unimodular_inverse(map.exponents);
    MonomialMap inverse;
    inverse.exponents = binv;
    for (int k = 0; k < n; ++k) {
      Rat d(1);
      for (int j = 0; j < n; ++j) {
        if (!binv.at(j, k).fits_slong_p()) raise(Errc::guard_exceeded, "inverse exponent overflow");
        d *= rat_pow(map.coeffs[static_cast<size_t>(j)], -binv.at(j, k).get_si());
      }
      inverse.coeffs.push_back(d);
    }
    // composing with the inverse must restore every generator exactly
    auto fwd = map.images();
    auto bwd = inverse.images();
    for (int i = 0; i < n; ++i) {
      LaurentPoly round_trip = substitute(bwd[static_cast<size_t>(i)], fwd);
      if (round_trip != LaurentPoly::variable(n, i))
        raise(Errc::internal_assertion, "inverse verification failed on generator " +
                                            std::to_string(i + 1));
    }
    out.kind = EndoClassification::Kind::automorphism;
    out.lattice_index = 1;
    out.inverse = std::move(inverse);
    return out;
  }
  out.kind = EndoClassification::Kind::injective_not_surjective;
  out.lattice_index = abs(det);
  IntMatrix h = hermite_column_form(map.exponents);
  for (int k = 0; k < n; ++k) {
    std::vector<Int> ek(static_cast<size_t>(n), Int(0));
    ek[static_cast<size_t>(k)] = 1;
    if (!column_lattice_contains(h, ek)) {
      ExponentVec missing(static_cast<size_t>(n), 0);
      missing[static_cast<size_t>(k)] = 1;
      out.missing_generator = missing;
      break;
    }
  }
  if (!out.missing_generator)
    raise(Errc::internal_assertion, "index >= 2 lattice contains every standard generator");
  return out;
}

DixmierAssertReport simple_torus_dixmier_assert(const SkewParamMatrix& lambda,
                                                const IntMatrix& b) {
  DixmierAssertReport rep;
  auto simple = is_poisson_simple_torus(lambda);
  if (!simple.simple) {
    rep.status = DixmierAssertReport::Status::not_applicable;
    rep.reason = "torus is not Poisson simple";
    return rep;
  }
  auto compat = monomial_compat(lambda, b);
  if (!compat.pass) {
    rep.status = DixmierAssertReport::Status::not_applicable;
    rep.reason = "exponent matrix is not Poisson-compatible";
    return rep;
  }
  rep.det = det_int(b);
  if (rep.det != 1 && rep.det != -1)
    raise(Errc::internal_assertion, "simple torus admits a compatible endomorphism with |det| = " +
                                        Int(abs(rep.det)).get_str());
  rep.status = DixmierAssertReport::Status::holds;
  rep.reason = "compatible endomorphism is unimodular";
  return rep;
}

LaurentPoly jacobian_determinant(const std::vector<LaurentPoly>& images) {
  const int n = static_cast<int>(images.size());
  if (n == 0) raise(Errc::bad_input, "empty map");
  for (const auto& im : images)
    if (im.arity() != n) raise(Errc::arity_mismatch, "Jacobian needs a square system");
  std::vector<std::vector<LaurentPoly>> jac(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      jac[static_cast<size_t>(i)].push_back(partial_derivative(images[static_cast<size_t>(i)], j));
  // Laplace expansion; n stays small here
  auto det = [&](auto&& self, std::vector<int> rows, std::vector<int> cols) -> LaurentPoly {
    if (rows.size() == 1) return jac[static_cast<size_t>(rows[0])][static_cast<size_t>(cols[0])];
    LaurentPoly acc(n);
    for (size_t k = 0; k < cols.size(); ++k) {
      const LaurentPoly& entry = jac[static_cast<size_t>(rows[0])][static_cast<size_t>(cols[k])];
      if (entry.is_zero()) continue;
      std::vector<int> sub_rows(rows.begin() + 1, rows.end());
      std::vector<int> sub_cols;
      for (size_t t = 0; t < cols.size(); ++t)
        if (t != k) sub_cols.push_back(cols[t]);
      LaurentPoly minor = self(self, sub_rows, sub_cols);
      LaurentPoly term = entry * minor;
      acc += (k % 2 == 0) ? term : -term;
    }
    return acc;
  };
  std::vector<int> idx(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = i;
  return det(det, idx, idx);
}

InjectivityCertificate injectivity_certificate(const PolyMap& map) {
  for (const auto& im : map.images)
    if (im.has_negative_exponent() && !im.is_single_term())
      raise(Errc::bad_input, "certificate needs polynomial or unit-monomial images");
  return jacobian_determinant(map.images).is_zero() ? InjectivityCertificate::inconclusive
                                                    : InjectivityCertificate::certified;
}

Int aut_bound(std::int64_t d) {
  if (d < 3) raise(Errc::bad_input, "bound is defined for degree >= 3");
  Int dd(static_cast<long>(d));
  return 42 * dd * (dd - 3) * (dd - 3);
}

}  // namespace forge
