#include "cpsat/field.hpp"

#include <stdexcept>
#include <string>

namespace cpsat {

namespace {

void require_same_field(FieldElement a, FieldElement b) {
  if (a.modulus() != b.modulus()) {
    throw ContractViolation("field elements have different moduli: " +
                            std::to_string(a.modulus()) + " vs " +
                            std::to_string(b.modulus()));
  }
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

Prime::Prime(std::uint64_t value) : value_(value) {
  if (value < 3) {
    throw ContractViolation("modulus must be at least 3, got " +
                            std::to_string(value));
  }
  if (value > kMaxModulus) {
    throw ContractViolation("modulus " + std::to_string(value) +
                            " exceeds the 31-bit cap");
  }
  if (!is_prime(value)) {
    throw ContractViolation(std::to_string(value) + " is not prime");
  }
}

Prime next_prime(std::uint64_t bound) {
  if (bound < 2) {
    throw ContractViolation("next_prime requires bound >= 2, got " +
                            std::to_string(bound));
  }
  for (std::uint64_t candidate = bound + 1;; ++candidate) {
    if (candidate > kMaxModulus) {
      throw std::overflow_error("no prime above " + std::to_string(bound) +
                                " within the 31-bit modulus cap");
    }
    if (is_prime(candidate)) return Prime(candidate);
  }
}

FieldElement ff_add(FieldElement a, FieldElement b) {
  require_same_field(a, b);
  std::uint64_t sum = a.residue() + b.residue();
  if (sum >= a.modulus()) sum -= a.modulus();
  return FieldElement(sum, a.modulus(), FieldElement::Unchecked{});
}

FieldElement ff_neg(FieldElement a) {
  std::uint64_t complement = a.residue() == 0 ? 0 : a.modulus() - a.residue();
  return FieldElement(complement, a.modulus(), FieldElement::Unchecked{});
}

FieldElement ff_sub(FieldElement a, FieldElement b) {
  require_same_field(a, b);
  return ff_add(a, ff_neg(b));
}

FieldElement ff_mul(FieldElement a, FieldElement b) {
  require_same_field(a, b);
  return FieldElement(a.residue() * b.residue() % a.modulus(), a.modulus(),
                      FieldElement::Unchecked{});
}

FieldElement ff_pow(FieldElement a, std::uint64_t k) {
  FieldElement result(1, a.modulus(), FieldElement::Unchecked{});
  FieldElement base = a;
  while (k > 0) {
    if (k & 1) result = ff_mul(result, base);
    base = ff_mul(base, base);
    k >>= 1;
  }
  return result;
}

FieldElement ff_inv(FieldElement a) {
  if (a.isZero()) {
    throw NotInvertible("0 has no inverse mod " + std::to_string(a.modulus()));
  }
  return ff_pow(a, a.modulus() - 2);
}

}  // namespace cpsat
