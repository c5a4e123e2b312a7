#pragma once

// Adams gradings, weight valuations, associated-graded bracket checks, the
// cofinite subalgebras A(d) and A(d, zeta), and bounded Poisson closures.
//
// Sign convention: a descending filtration by Adams degree
// places a degree-a element in filtration level -a. This module works in
// Adams degrees throughout and translates through "shift <= w": a weight
// valuation nu = -deg satisfies axiom (5) exactly when every bracket of
// homogeneous elements raises total degree by at most w.

#include <optional>
#include <string>
#include <vector>

#include "forge/bracket.hpp"

namespace forge {

struct WeightValuation {
  std::vector<std::int64_t> weights;  // value on x^e is weights . e

  std::int64_t value_of_monomial(const ExponentVec& e) const;
  // min over terms; nullopt encodes infinity (the zero polynomial)
  std::optional<std::int64_t> value(const LaurentPoly& f) const;
};

struct DegreeShiftReport {
  std::optional<std::int64_t> max_shift;  // nullopt when every sampled bracket vanished
  bool homogeneous = true;                // every bracket component realizes the same shift
};

// Max of deg{m1,m2} - deg m1 - deg m2 over monomial pairs up to the Adams
// degree bound. A negatively-N-w-filtration by Adams degree exists iff the
// shift is at most w.
DegreeShiftReport bracket_degree_shift(const PoissonStructure& s, int bound);

struct ValuationCheckReport {
  bool pass = true;
  int axiom = 0;  // 1..5, first violated
  std::string witness_a, witness_b;
  std::string detail;
};

ValuationCheckReport check_w_valuation(const WeightValuation& nu, const PoissonStructure& s,
                                       std::int64_t w, int bound, int trials, std::uint64_t seed);

struct GrCheckReport {
  bool pass = true;
  std::string witness_f, witness_g;
  std::string detail;
};

// Verifies on random reduced representatives that the top-degree form of the
// quotient bracket in P_{Omega-xi} matches the bracket of top forms in P_Omega
// (or drops strictly in degree when the latter vanishes modulo Omega).
GrCheckReport associated_graded_bracket_check(const LaurentPoly& omega, const Rat& xi, int bound,
                                              int trials, std::uint64_t seed);

class SubalgebraAd {
 public:
  SubalgebraAd(PoissonStructure base, int d, LaurentPoly zeta);
  const PoissonStructure& base() const { return base_; }
  int threshold() const { return d_; }
  const LaurentPoly& zeta() const { return zeta_; }
  // f in A(d, zeta) iff f - c - t*zeta lies in A_{>=d} for the unique
  // candidate scalars c, t read off the low-degree components.
  bool contains(const LaurentPoly& f) const;

 private:
  PoissonStructure base_;
  int d_;
  LaurentPoly zeta_;
};

// Validates zeta (components confined to degrees 2..d-1, zeta^2 in A(d)) and
// returns the subalgebra handle. zeta may be omitted (plain A(d)).
SubalgebraAd construct_Adzeta(const PoissonStructure& s, int d,
                              const std::optional<LaurentPoly>& zeta);

struct AdClosureReport {
  bool pass = true;
  std::string witness_f, witness_g;
  std::string detail;
};

// Random homogeneous f, g of degree in [d, bound] must bracket into A_{>=2d-2}.
AdClosureReport check_Ad_closure(const PoissonStructure& s, int d, int bound, int trials,
                                 std::uint64_t seed);

// Span closure of the seeds under addition, multiplication and bracket inside
// a finite monomial box, iterated to a fixpoint (or max_rounds). Returns a
// reduced-row-echelon basis of the resulting subspace.
std::vector<LaurentPoly> bounded_poisson_closure(const PoissonStructure& s,
                                                 const std::vector<LaurentPoly>& seeds,
                                                 int degree_box, int max_rounds);

// Monomials valid in the structure with sum |e_i| <= bound, low degree first.
std::vector<ExponentVec> enumerate_structure_monomials(const PoissonStructure& s, int bound);

}  // namespace forge
