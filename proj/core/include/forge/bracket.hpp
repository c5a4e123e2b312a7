#pragma once

// Poisson structures and exact bracket evaluation: tori and skew polynomial
// algebras (bracket {x^u,x^v} = (u^T L v) x^{u+v}), potential algebras with
// the Jacobian-determinant bracket, their quotients by Omega - xi, Poisson
// Weyl algebras, and tensor products of all of these.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "forge/lattice.hpp"
#include "forge/poly.hpp"
#include "forge/rng.hpp"

namespace forge {

class SkewParamMatrix {
 public:
  explicit SkewParamMatrix(int n) : n_(n), entries_(static_cast<size_t>(n) * n) {}
  static SkewParamMatrix from_entries(const std::vector<std::vector<Scalar>>& rows);
  static SkewParamMatrix uniparameter(const Scalar& lambda, const IntMatrix& m);

  int size() const { return n_; }
  const Scalar& at(int i, int j) const { return entries_[static_cast<size_t>(i) * n_ + j]; }
  void set(int i, int j, const Scalar& v);  // also sets (j,i) = -v

  // u^T Lambda v
  Scalar pair(const ExponentVec& u, const ExponentVec& v) const;

  // Lambda = lambda * M with M integer and lambda a rational or a single
  // parameter multiple; nullopt when no such presentation exists.
  std::optional<std::pair<Scalar, IntMatrix>> uniparameter_decomposition() const;

  // Sorted parameter names appearing in the entries.
  std::vector<std::string> parameter_names() const;

 private:
  int n_;
  std::vector<Scalar> entries_;
};

class PoissonStructure;

struct TorusStructure {
  SkewParamMatrix lambda;
};

struct SkewPolyStructure {
  SkewParamMatrix lambda;
};

struct PotentialAffineStructure {
  LaurentPoly omega;  // arity 3, homogeneous of Adams degree >= 2, polynomial
};

struct PotentialQuotientStructure {
  LaurentPoly omega;
  Rat xi;
  MonomialOrder order;
};

struct WeylStructure {
  int pairs = 1;           // variables x1,y1,...,xn,yn at indices 2i, 2i+1
  bool laurent_x = false;  // allow negative exponents on the x variables
};

struct TensorStructure {
  std::vector<PoissonStructure> factors;
  TensorStructure();
  TensorStructure(const TensorStructure&);
  TensorStructure(TensorStructure&&) noexcept;
  TensorStructure& operator=(const TensorStructure&);
  TensorStructure& operator=(TensorStructure&&) noexcept;
  ~TensorStructure();
};

class PoissonStructure {
 public:
  using Variant = std::variant<TorusStructure, SkewPolyStructure, PotentialAffineStructure,
                               PotentialQuotientStructure, WeylStructure, TensorStructure>;

  static PoissonStructure torus(SkewParamMatrix lambda);
  static PoissonStructure skew_poly(SkewParamMatrix lambda);
  static PoissonStructure potential_affine(LaurentPoly omega);
  static PoissonStructure potential_quotient(LaurentPoly omega, Rat xi,
                                             MonomialOrder order = MonomialOrder{});
  static PoissonStructure weyl(int pairs, bool laurent_x = false);
  static PoissonStructure tensor(std::vector<PoissonStructure> factors);

  const Variant& v() const { return *v_; }
  int arity() const;
  // per-variable Laurent permission (negative exponents allowed)
  std::vector<bool> laurent_mask() const;
  bool polynomial_type() const;  // no variable admits negative exponents
  bool is_quotient() const { return std::holds_alternative<PotentialQuotientStructure>(*v_); }

  std::string kind_name() const;

 private:
  explicit PoissonStructure(Variant v);
  std::shared_ptr<const Variant> v_;
};

// Exact Poisson bracket {f, g} in the structure. Inputs must be valid in the
// structure's variable context (arity, exponent domain, reduced for
// quotients).
LaurentPoly bracket(const PoissonStructure& s, const LaurentPoly& f, const LaurentPoly& g);

// Fully reduced remainder of f under division by Omega - xi in the
// structure's monomial order.
LaurentPoly normal_form_mod(const PotentialQuotientStructure& s, const LaurentPoly& f);
LaurentPoly normal_form_mod(const PoissonStructure& s, const LaurentPoly& f);

// Structure-aware product: multiplies and, for quotients, reduces.
LaurentPoly mul_in(const PoissonStructure& s, const LaurentPoly& f, const LaurentPoly& g);

void validate_element(const PoissonStructure& s, const LaurentPoly& f);
bool element_valid(const PoissonStructure& s, const LaurentPoly& f);

// Random polynomial valid in the structure (reduced for quotients).
LaurentPoly sample_poly(const PoissonStructure& s, int degree_bound, Rng& rng);

struct AxiomReport {
  bool pass = true;
  std::string axiom;  // "antisymmetry" | "bilinearity" | "leibniz" | "jacobi"
  std::string witness_f, witness_g, witness_h;
  std::string detail;
};

using BracketFn = std::function<LaurentPoly(const LaurentPoly&, const LaurentPoly&)>;

AxiomReport verify_poisson_axioms(const PoissonStructure& s, int degree_bound, int trials,
                                  std::uint64_t seed);

// Same checks against an arbitrary bilinear bracket table; sampling uses
// nonnegative exponents of the given arity. Used to exhibit Jacobi failures
// of raw biderivation extensions.
AxiomReport verify_poisson_axioms(const BracketFn& br, int arity, int degree_bound, int trials,
                                  std::uint64_t seed);

struct CentralityReport {
  bool central = true;
  std::vector<LaurentPoly> brackets;  // {Omega, x_i} for each generator
};

CentralityReport omega_centrality(const PotentialAffineStructure& s);

// Biderivation extension of a generator bracket table T[i][j] = {x_i, x_j}:
// {f,g} = sum_{i<j} (f_i g_j - f_j g_i) T[i][j]. Antisymmetric and Leibniz by
// construction; Jacobi only if the table satisfies it.
LaurentPoly table_bracket(const std::vector<std::vector<LaurentPoly>>& table,
                          const LaurentPoly& f, const LaurentPoly& g);

}  // namespace forge
