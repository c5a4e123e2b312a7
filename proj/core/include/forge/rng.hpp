#pragma once

// Deterministic PRNG (splitmix64). Standard-library distributions are not
// byte-stable across platforms, so sampling is done by hand.

#include <cstdint>

#include "forge/numeric.hpp"

namespace forge {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // inclusive bounds
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

  Rat small_rational(int magnitude) {
    std::int64_t num = uniform(-magnitude, magnitude);
    if (num == 0) num = 1;
    return Rat(static_cast<long>(num));
  }

  Rat small_nonzero_fraction(int magnitude) {
    std::int64_t num = uniform(-magnitude, magnitude);
    if (num == 0) num = 1;
    std::int64_t den = uniform(1, 3);
    return make_rat(Int(static_cast<long>(num)), Int(static_cast<long>(den)));
  }

 private:
  std::uint64_t state_;
};

}  // namespace forge
