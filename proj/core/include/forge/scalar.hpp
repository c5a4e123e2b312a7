#pragma once

// Coefficient domain: Q extended by formal parameters, restricted to
// Q-linear forms c0 + sum ck*qk. Products are defined only when at least
// one factor is parameter-free.

#include <string>
#include <utility>
#include <vector>

#include "forge/errors.hpp"
#include "forge/numeric.hpp"

namespace forge {

class Scalar {
 public:
  Scalar() = default;
  Scalar(const Rat& c) : c0_(c) {}  // NOLINT: implicit by design
  Scalar(long c) : c0_(c) {}        // NOLINT
  static Scalar parameter(const std::string& name, const Rat& coeff = Rat(1));

  bool is_zero() const;
  bool is_rational() const { return qs_.empty(); }
  const Rat& constant_part() const { return c0_; }
  const Rat& rational() const;  // requires is_rational
  const std::vector<std::pair<std::string, Rat>>& parameter_parts() const { return qs_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar scaled(const Rat& c) const;

 private:
  void prune();
  Rat c0_{0};
  std::vector<std::pair<std::string, Rat>> qs_;  // sorted by name, no zero coeffs
};

// Sign used when extracting a leading minus during rendering: rationals and
// pure single-parameter forms carry a sign, mixed sums do not.
bool scalar_prints_negative(const Scalar& s);

std::string to_string(const Scalar& s);

}  // namespace forge
