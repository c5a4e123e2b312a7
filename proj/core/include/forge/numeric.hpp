#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace forge {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// q^e for integer e (negative allowed, q != 0 then).
Rat rat_pow(const Rat& q, std::int64_t e);

// Exponent vector of a Laurent monomial x^e, e in Z^n.
using ExponentVec = std::vector<std::int64_t>;

inline std::int64_t adams_degree(const ExponentVec& e) {
  std::int64_t d = 0;
  for (auto v : e) d += v;
  return d;
}

ExponentVec exp_add(const ExponentVec& a, const ExponentVec& b);
ExponentVec exp_sub(const ExponentVec& a, const ExponentVec& b);

}  // namespace forge
