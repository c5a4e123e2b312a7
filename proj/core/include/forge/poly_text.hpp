#pragma once

// Recursive-descent parser for the canonical polynomial grammar used by the
// CLI and fixtures: terms joined by +/-, factors joined by *, monomial
// factors `x1^3`, `x2^-2`, rational factors `p/q`, parenthesized linear
// forms `(1+2*q)`. Variables are x1..xn; x, y, z alias x1, x2, x3. Any
// other identifier is a formal parameter.

#include <string>

#include "forge/poly.hpp"

namespace forge {

LaurentPoly parse_poly(const std::string& text, int arity);

// Parses a parameter-or-rational linear form (no variables in scope).
Scalar parse_scalar(const std::string& text);

}  // namespace forge
