#pragma once

// Poisson simplicity of tori and degree-truncated center computations.

#include <optional>
#include <string>
#include <vector>

#include "forge/bracket.hpp"

namespace forge {

struct SimplicityReport {
  bool simple = true;
  std::optional<ExponentVec> witness;  // central monomial exponent when not simple
  std::string method;                  // "rank" | "stacked-rank"
};

// A torus is Poisson simple iff no nonzero integer tuple a satisfies
// sum_i a_i lambda_ij = 0 for all j. Parameters are treated as Q-linearly
// independent: the tuple must kill every parameter's coefficient matrix, so
// the integer-cleared component matrices are stacked side by side.
SimplicityReport is_poisson_simple_torus(const SkewParamMatrix& lambda);

// Z-basis of the lattice of central monomial exponents.
std::vector<ExponentVec> monomial_center_basis(const SkewParamMatrix& lambda);

// Basis of {f : deg f <= degree_bound, {f, x_i} = 0 for all i} for
// polynomial-type structures, solved exactly over Q on the monomial basis.
std::vector<LaurentPoly> truncated_center(const PoissonStructure& s, int degree_bound);

// Nonnegative exponent vectors of total degree <= bound, descending canonical
// order. Shared by the center computation and the graded module.
std::vector<ExponentVec> monomials_up_to_degree(int arity, int bound);

}  // namespace forge
