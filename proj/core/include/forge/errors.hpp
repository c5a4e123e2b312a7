#pragma once

#include <stdexcept>
#include <string>

namespace forge {

enum class Errc {
  arity_mismatch,
  parameter_product,
  negative_power_of_non_unit,
  non_square,
  not_unimodular,
  not_skew,
  not_homogeneous,
  context_mismatch,
  unreduced_quotient_input,
  zero_generators,
  zeta_square_escapes,
  degree_violation,
  guard_exceeded,
  bad_input,
  internal_assertion,
};

class ForgeError : public std::runtime_error {
 public:
  ForgeError(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) {
  throw ForgeError(code, msg);
}

}  // namespace forge
