#pragma once

#include <cstdint>

#include "cpsat/errors.hpp"

namespace cpsat {

/// Largest modulus accepted anywhere. Residues stay below 2^31, so a product
/// of two of them fits a 64-bit word and no reduction can overflow.
inline constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31) - 1;

/// Deterministic trial-division primality test, adequate for the 31-bit range.
bool is_prime(std::uint64_t n) noexcept;

/// A primality-certified modulus, >= 3 and <= kMaxModulus.
class Prime {
 public:
  explicit Prime(std::uint64_t value);

  std::uint64_t value() const noexcept { return value_; }

  friend bool operator==(Prime a, Prime b) noexcept = default;

 private:
  std::uint64_t value_;
};

/// Smallest prime strictly greater than bound (bound >= 2). Throws
/// std::overflow_error if that prime would exceed kMaxModulus.
Prime next_prime(std::uint64_t bound);

/// A residue in [0, p) tagged with its modulus. Arithmetic on elements of
/// different fields is a contract violation, not a silent coercion.
class FieldElement {
 public:
  /// Reduces value mod p, so any machine integer is accepted.
  FieldElement(std::uint64_t value, Prime modulus) noexcept
      : residue_(value % modulus.value()), modulus_(modulus.value()) {}

  std::uint64_t residue() const noexcept { return residue_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  bool isZero() const noexcept { return residue_ == 0; }

  /// Equal iff both the modulus and the residue agree.
  friend bool operator==(FieldElement a, FieldElement b) noexcept = default;

 private:
  // Fast path for the arithmetic kernel: the modulus was certified when the
  // operands were created, so skip re-certification.
  struct Unchecked {};
  FieldElement(std::uint64_t residue, std::uint64_t modulus, Unchecked) noexcept
      : residue_(residue), modulus_(modulus) {}

  friend FieldElement ff_add(FieldElement a, FieldElement b);
  friend FieldElement ff_neg(FieldElement a);
  friend FieldElement ff_mul(FieldElement a, FieldElement b);
  friend FieldElement ff_pow(FieldElement a, std::uint64_t k);

  std::uint64_t residue_;
  std::uint64_t modulus_;
};

FieldElement ff_add(FieldElement a, FieldElement b);
/// Subtraction as addition of the additive complement p - b; no residue ever
/// goes negative.
FieldElement ff_sub(FieldElement a, FieldElement b);
FieldElement ff_neg(FieldElement a);
FieldElement ff_mul(FieldElement a, FieldElement b);
/// Square-and-multiply; a^0 is 1 (empty product), including 0^0.
FieldElement ff_pow(FieldElement a, std::uint64_t k);
/// Fermat inversion a^(p-2): multiplication only, no division anywhere.
/// Throws NotInvertible on zero.
FieldElement ff_inv(FieldElement a);

inline FieldElement operator+(FieldElement a, FieldElement b) { return ff_add(a, b); }
inline FieldElement operator-(FieldElement a, FieldElement b) { return ff_sub(a, b); }
inline FieldElement operator-(FieldElement a) { return ff_neg(a); }
inline FieldElement operator*(FieldElement a, FieldElement b) { return ff_mul(a, b); }

}  // namespace cpsat
