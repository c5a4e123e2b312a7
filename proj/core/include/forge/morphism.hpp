#pragma once

// Poisson morphism verification and the classification of monomial
// endomorphisms of tori: compatibility B^T Lambda B = Lambda, the
// automorphism / injective-not-surjective trichotomy, injectivity
// certificates via Jacobians, and the automorphism-order bound.

#include <optional>
#include <string>
#include <vector>

#include "forge/analysis.hpp"
#include "forge/bracket.hpp"
#include "forge/lattice.hpp"

namespace forge {

// phi(x_i) = c_i * x^{b_i} with b_i the i-th column of the exponent matrix.
struct MonomialMap {
  IntMatrix exponents;
  std::vector<Rat> coeffs;

  int size() const { return exponents.cols(); }
  LaurentPoly image(int i) const;
  std::vector<LaurentPoly> images() const;
};

struct PolyMap {
  std::vector<LaurentPoly> images;
};

// phi extracted from single-term images; raises bad_input otherwise.
MonomialMap monomial_map_from_images(const std::vector<LaurentPoly>& images);

struct MorphismPairIdentity {
  int i = 0, j = 0;  // 1-based generator indices
  LaurentPoly lhs;   // substitute({x_i,x_j}_src)
  LaurentPoly rhs;   // {image_i, image_j}_tgt
  bool ok = false;
};

struct MorphismReport {
  bool pass = true;
  std::vector<MorphismPairIdentity> identities;
  std::optional<size_t> first_failure;  // index into identities
};

MorphismReport check_poisson_morphism(const PoissonStructure& src, const PoissonStructure& tgt,
                                      const PolyMap& map);

struct CompatReport {
  bool pass = true;
  int i = -1, j = -1;
  Scalar lhs, rhs;  // (B^T Lambda B)_{ij} vs Lambda_{ij} at the first failure
};

CompatReport monomial_compat(const SkewParamMatrix& lambda, const IntMatrix& b);

struct EndoClassification {
  enum class Kind { not_poisson, not_injective, automorphism, injective_not_surjective };
  Kind kind = Kind::not_poisson;
  // not_poisson
  int fail_i = -1, fail_j = -1;
  Scalar lhs, rhs;
  // automorphism
  std::optional<MonomialMap> inverse;
  // injective_not_surjective
  Int lattice_index;
  std::optional<ExponentVec> missing_generator;
};

EndoClassification classify_torus_endo(const SkewParamMatrix& lambda, const MonomialMap& map);

struct DixmierAssertReport {
  enum class Status { holds, not_applicable } status = Status::not_applicable;
  std::string reason;
  Int det;
};

// For a simple torus, a compatible monomial endomorphism must be unimodular
// (otherwise it would exhibit a proper isomorphic Poisson subalgebra). An
// assertion failure here signals an implementation bug, not a finding.
DixmierAssertReport simple_torus_dixmier_assert(const SkewParamMatrix& lambda, const IntMatrix& b);

enum class InjectivityCertificate { certified, inconclusive };

// Nonzero Jacobian determinant of the images certifies algebraic
// independence in characteristic zero, hence injectivity.
InjectivityCertificate injectivity_certificate(const PolyMap& map);
LaurentPoly jacobian_determinant(const std::vector<LaurentPoly>& images);

// 42*d*(d-3)^2 for d >= 3.
Int aut_bound(std::int64_t d);

}  // namespace forge
