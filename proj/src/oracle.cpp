#include "cpsat/oracle.hpp"

#include <string>

namespace cpsat {

namespace {

void require_cap(int variableCount, int denseCap, const char* what) {
  if (variableCount > denseCap) {
    throw CapExceeded(std::string(what) + " over " +
                      std::to_string(variableCount) +
                      " variables exceeds the dense cap of " +
                      std::to_string(denseCap));
  }
}

}  // namespace

ProfileCounts enumerate_profile(const Formula& f, int denseCap) {
  require_cap(f.V, denseCap, "profile enumeration");
  ProfileCounts profile;
  profile.counts.assign(f.n() + 1, 0);
  const std::uint64_t span = std::uint64_t{1} << f.V;
  for (std::uint64_t t = 0; t < span; ++t) {
    std::size_t satisfied = 0;
    for (const Clause& c : f.clauses) {
      if (c.satisfiedBy(t)) ++satisfied;
    }
    ++profile.counts[satisfied];
  }
  return profile;
}

std::array<FieldElement, 3> exact_b_values(const DensePoly& fA,
                                           const DensePoly& fB, FieldElement x,
                                           int denseCap) {
  if (fA.variableCount() != fB.variableCount()) {
    throw ContractViolation("class masses need equal variable counts");
  }
  if (fA.modulus().value() != x.modulus() ||
      fB.modulus().value() != x.modulus()) {
    throw ContractViolation("class masses need a single field");
  }
  if (!fA.zeroOne() || !fB.zeroOne()) {
    throw ContractViolation("class masses are defined for 0/1 indicators");
  }
  require_cap(fA.variableCount(), denseCap, "class-mass double loop");

  const Prime p = fA.modulus();
  // x^(i+j) reaches 2*(2^V - 1); table the powers once.
  std::vector<FieldElement> power;
  power.reserve(2 * fA.size());
  FieldElement acc(1, p);
  for (std::size_t k = 0; k + 1 < 2 * fA.size(); ++k) {
    power.push_back(acc);
    acc = acc * x;
  }

  std::array<FieldElement, 3> b{FieldElement(0, p), FieldElement(0, p),
                                FieldElement(0, p)};
  const auto& a = fA.residues();
  const auto& c = fB.residues();
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (i == j) continue;
      const std::size_t s = a[i] + c[j];
      b[s] = b[s] + power[i + j];
    }
  }
  return b;
}

FieldElement exact_diag_value(const DensePoly& fA, const DensePoly& fB,
                              FieldElement x) {
  if (fA.variableCount() != fB.variableCount()) {
    throw ContractViolation("diagonal needs equal variable counts");
  }
  if (fA.modulus().value() != x.modulus() ||
      fB.modulus().value() != x.modulus()) {
    throw ContractViolation("diagonal needs a single field");
  }
  const Prime p = fA.modulus();
  const FieldElement xSquared = x * x;
  FieldElement total(0, p);
  FieldElement power(1, p);  // x^(2t)
  for (std::size_t t = 0; t < fA.size(); ++t) {
    total = total + fA.coeff(t) * fB.coeff(t) * power;
    power = power * xSquared;
  }
  return total;
}

std::uint64_t model_count(const Formula& f, int denseCap) {
  return enumerate_profile(f, denseCap).counts.back();
}

}  // namespace cpsat
