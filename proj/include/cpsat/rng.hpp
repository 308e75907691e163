#pragma once

#include <cstdint>
#include <random>

#include "cpsat/errors.hpp"

namespace cpsat {

/// Uniform draw from [0, bound) by rejection sampling. mt19937_64 output is
/// pinned by the standard, and this mapping avoids the implementation-defined
/// std::uniform_int_distribution, so every stream is reproducible bit-for-bit
/// across platforms.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw ContractViolation("uniform_below requires bound > 0");
  // Accept draws above 2^64 mod bound; the accepted range size is an exact
  // multiple of bound.
  const std::uint64_t threshold = -bound % bound;
  for (;;) {
    const std::uint64_t draw = rng();
    if (draw >= threshold) return draw % bound;
  }
}

}  // namespace cpsat
