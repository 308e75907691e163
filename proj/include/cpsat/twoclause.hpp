#pragma once

#include <array>
#include <optional>

#include "cpsat/field.hpp"

namespace cpsat {

/// Matched markers for diagonal elimination. With c1 fixed to 1 the closed
/// form c0 = -(a1-1)^2 / (a0-1)^2 makes the second-order differences cancel:
/// c0*(a0-1)^2 + c1*(a1-1)^2 = 0. The weighted power sums then follow the
/// affine law c0*a0^s + c1*a1^s = d + e*s for s in {0,1,2}, with e never 0.
struct MarkerPair {
  FieldElement a0, c0, a1, c1, d, e;
};

/// One elimination equation over the off-diagonal class masses:
/// w[0]*b0 + w[1]*b1 + w[2]*b2 = rhs, where w[s] = d + e*s (so the w's are
/// affine in s and w[0] - 2w[1] + w[2] = 0).
struct PairEquation {
  std::array<FieldElement, 3> w;
  FieldElement rhs;
};

enum class SplitStatus { Unique, Singular };

/// The off-diagonal class masses. When the reduced system solves (status
/// Unique) all three b's are present; in the generic singular case only the
/// aggregate u = b1 + 2*b2 is determined. T is always the full off-diagonal
/// total b0 + b1 + b2.
struct SatisfactionSplit {
  SplitStatus status;
  std::optional<FieldElement> b0, b1, b2;
  FieldElement T;
  FieldElement u;
};

/// Second-order difference of the sequence c, c*a, c*a^2: equals c*(a-1)^2.
FieldElement second_difference(FieldElement c, FieldElement a);

/// Matches the marker pair (a0, a1) with convention c1 = 1. Markers 0 and 1
/// and equal markers are rejected with InvalidMarker.
MarkerPair match_marker_pair(FieldElement a0, FieldElement a1);

/// Builds one elimination equation. fA_x/fB_x are the clause evaluations at
/// the multiplication point, fA_x2/fB_x2 at its square (the addition-side
/// inputs), ones_x/ones_x2 the function of ones at the same two points. The
/// right-hand side combines the two pre-multiplied products and subtracts
/// the addition-side affine term, which cancels every diagonal contribution:
///   E = c0*H_A(a0)*H_B(a0) + c1*H_A(a1)*H_B(a1) - (d*ones_x2 + e*(fA_x2 + fB_x2))
/// with H(a) = a*f + (ones - f). E then equals sum_s w[s]*b_s over the
/// off-diagonal masses alone.
PairEquation eliminated_evaluation(FieldElement fA_x, FieldElement fB_x,
                                   FieldElement fA_x2, FieldElement fB_x2,
                                   FieldElement ones_x, FieldElement ones_x2,
                                   const MarkerPair& mp);

/// Total off-diagonal mass T = ones_x^2 - ones_x2 = b0 + b1 + b2.
FieldElement off_diagonal_total(FieldElement ones_x, FieldElement ones_x2);

/// Substitutes b2 = T - b0 - b1 into both equations and runs 2x2 Gaussian
/// elimination (inverse by exponentiation; no division). The reduced rows of
/// valid marker equations are always proportional — e_i*(-2, -1) — so the
/// generic outcome is status Singular carrying u = (rhs - d*T)/e, on which
/// both equations must agree (disagreement throws InconsistentSystem, an
/// internal fault). A genuinely nonzero reduced determinant yields Unique.
/// The degenerate T = 0, u = 0 case (the V=0 space has no off-diagonal
/// pairs) returns Unique zeros.
SatisfactionSplit solve_two_clause(const PairEquation& eq1,
                                   const PairEquation& eq2, FieldElement T);

/// Isolates the diagonal: D = fA_x * fB_x - b2, the conjunction's clause
/// polynomial evaluated at the squared point.
FieldElement diagonal_value(FieldElement fA_x, FieldElement fB_x,
                            FieldElement b2);

}  // namespace cpsat
