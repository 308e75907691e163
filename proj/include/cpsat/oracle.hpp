#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cpsat/clausepoly.hpp"
#include "cpsat/field.hpp"
#include "cpsat/formula.hpp"

namespace cpsat {

/// Histogram over satisfaction classes: counts[s] = number of assignments
/// satisfying exactly s of the n clauses; counts has n+1 entries and sums to
/// 2^V. counts[n] > 0 iff the formula is satisfiable.
struct ProfileCounts {
  std::vector<std::uint64_t> counts;
};

/// Exact histogram by full enumeration of all 2^V assignments.
/// Throws CapExceeded when V > denseCap.
ProfileCounts enumerate_profile(const Formula& f, int denseCap = kDefaultDenseCap);

/// The off-diagonal class masses by definition: b[s] = sum of x^(i+j) over
/// ordered pairs i != j with fA[i] + fB[j] = s. Requires 0/1 coefficient
/// vectors of equal shape. Intentionally the naive O(4^V) double loop — this
/// is the trust anchor everything else is checked against.
std::array<FieldElement, 3> exact_b_values(const DensePoly& fA,
                                           const DensePoly& fB, FieldElement x,
                                           int denseCap = kDefaultDenseCap);

/// The diagonal mass sum_t fA[t] * fB[t] * x^(2t): the conjunction's clause
/// polynomial evaluated at x^2 when the inputs are indicators.
FieldElement exact_diag_value(const DensePoly& fA, const DensePoly& fB,
                              FieldElement x);

/// counts[n] of enumerate_profile: the number of satisfying assignments.
std::uint64_t model_count(const Formula& f, int denseCap = kDefaultDenseCap);

}  // namespace cpsat
