#pragma once

// Buchberger engine over Q and the isolated-singularity test via the
// Jacobian ideal. Desk scale by design: plain Buchberger with the normal
// pair selection strategy, no F4/F5.

#include <optional>
#include <vector>

#include "forge/poly.hpp"

namespace forge {

struct GroebnerLimits {
  int max_arity = 8;
  int max_input_degree = 12;
};

struct GroebnerBasis {
  std::vector<LaurentPoly> generators;  // monic, inter-reduced, LM-descending
  MonomialOrder order;
};

GroebnerBasis groebner_basis(std::vector<LaurentPoly> gens, MonomialOrder order,
                             const GroebnerLimits& limits = {});

// Unique fully reduced remainder; zero iff f lies in the ideal.
LaurentPoly normal_form(const LaurentPoly& f, const GroebnerBasis& g);

struct QuotientDim {
  bool finite = false;
  Int dimension;  // standard monomial count when finite
};

QuotientDim quotient_dimension(const GroebnerBasis& g);

struct SingularityReport {
  bool isolated = false;
  std::optional<Int> dimension;  // Milnor-algebra dimension when finite
};

// Omega homogeneous in three variables, degree >= 2: the singularity at the
// origin is isolated iff k[x,y,z]/(Omega_x, Omega_y, Omega_z) is finite
// dimensional.
SingularityReport is_isolated_singularity(const LaurentPoly& omega,
                                          MonomialOrder order = MonomialOrder{});

}  // namespace forge
