#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cpsat/field.hpp"
#include "cpsat/formula.hpp"

namespace cpsat {

/// Default ceiling for dense coefficient vectors (2^V entries); engine and
/// oracle entry points take it as a configurable cap.
inline constexpr int kDefaultDenseCap = 24;

/// Hard limit guarding against runaway allocations regardless of config
/// (transforms legitimately produce V+1 and padding 2V spaces).
inline constexpr int kDenseVariableLimit = 26;

/// Exact coefficient vector of a clause polynomial over GF(p): slot t holds
/// the coefficient of x^t, with t ranging over all 2^V assignments (bit i of
/// t is the value of x_i, x_0 least significant). An unmodified clause
/// polynomial has coefficient 1 exactly at the satisfying assignments.
class DensePoly {
 public:
  DensePoly(int variableCount, Prime modulus);

  int variableCount() const noexcept { return variableCount_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  Prime modulus() const noexcept { return modulus_; }

  FieldElement coeff(std::size_t t) const;
  void setCoeff(std::size_t t, FieldElement value);

  /// True when every coefficient is 0 or 1 (the unmodified-indicator shape
  /// the pre-multiplication transform requires).
  bool zeroOne() const noexcept;

  /// Residues by slot; primarily for the exact oracles and tests.
  const std::vector<std::uint64_t>& residues() const noexcept { return coeffs_; }

  friend bool operator==(const DensePoly&, const DensePoly&) noexcept = default;

 private:
  int variableCount_;
  Prime modulus_;
  std::vector<std::uint64_t> coeffs_;
};

/// A clause polynomial collapsed to one field value: the polynomial evaluated
/// at basePoint^(2^doubling).
struct ScalarEval {
  FieldElement value;
  FieldElement basePoint;
  unsigned doubling = 0;
};

/// The polynomial of the single literal x_m (or its negation) over V
/// variables: coefficient 1 wherever bit m of the slot index is 1 (0 when
/// negated).
DensePoly var_poly(int m, int variableCount, bool negated, Prime p);

/// The full clause polynomial, built by the ascending-h accumulation loop:
/// positive literal  -> Result += prefix * x^(2^h)
/// negated literal   -> Result = Result * x^(2^h) + prefix
/// absent variable   -> Result *= (1 + x^(2^h))
/// where prefix = prod_{k<h} (1 + x^(2^k)). The empty prefix is 1; the empty
/// clause comes out as the zero polynomial and a flagged tautology as the
/// all-ones polynomial.
DensePoly clause_poly(const Clause& c, int variableCount, Prime p);

/// The function of ones: every coefficient 1; equals prod_k (1 + x^(2^k)).
DensePoly ones_poly(int variableCount, Prime p);

/// Scalar ones evaluation in O(V) multiplications.
FieldElement ones_at(int variableCount, FieldElement x);

/// Pre-multiplication by a marker: coefficient 1 -> a, coefficient 0 -> 1,
/// i.e. a*f(x) + (ones - f(x)). Input must be zeroOne().
DensePoly premult_transform(const DensePoly& f, FieldElement a);

/// Pre-addition: every power doubles (slot t moves to 2t), so evaluating the
/// result at x equals evaluating f at x^2. Output ranges over V+1 variables.
DensePoly preadd_transform(const DensePoly& f);

/// The clause polynomial evaluated at basePoint^(2^doubling) without ever
/// materializing 2^V coefficients: the construction loop run on scalars,
/// O(V) field operations.
ScalarEval eval_clause_at(const Clause& c, int variableCount, FieldElement x,
                          unsigned doubling = 0);

/// Horner evaluation of the dense vector.
FieldElement poly_eval(const DensePoly& f, FieldElement x);

/// Plain convolution product; the result ranges over V+1 variables (degree
/// sums reach 2^(V+1) - 2).
DensePoly poly_mul(const DensePoly& f, const DensePoly& g);

/// The diagonal of the convolution grid: slot 2t of the result carries
/// f[t] * g[t]. For clause polynomials this is the conjunction's indicator
/// at doubled powers. Output ranges over V+1 variables.
DensePoly hadamard_diag(const DensePoly& f, const DensePoly& g);

/// Tab-separated 0/1 table: header of clause specs, then one row per
/// assignment slot t ascending with one column per clause, matching
/// clause_poly coefficients. Guarded to V <= 16.
std::string pattern_table(const std::vector<Clause>& clauses, int variableCount);

}  // namespace cpsat
