#include "cpsat/twoclause.hpp"

#include <string>

namespace cpsat {

namespace {

void require_same_field(FieldElement a, FieldElement b, const char* what) {
  if (a.modulus() != b.modulus()) {
    throw ContractViolation(std::string(what) + ": operands live in different fields");
  }
}

}  // namespace

FieldElement second_difference(FieldElement c, FieldElement a) {
  require_same_field(c, a, "second_difference");
  const FieldElement shifted = a - FieldElement(1, Prime(a.modulus()));
  return c * shifted * shifted;
}

MarkerPair match_marker_pair(FieldElement a0, FieldElement a1) {
  require_same_field(a0, a1, "match_marker_pair");
  const Prime p(a0.modulus());
  const FieldElement one(1, p);
  if (a0.isZero() || a1.isZero() || a0 == one || a1 == one) {
    throw InvalidMarker("markers 0 and 1 have degenerate power sequences");
  }
  if (a0 == a1) {
    throw InvalidMarker("marker values must differ");
  }
  const FieldElement da0 = a0 - one;
  const FieldElement da1 = a1 - one;
  const FieldElement c0 = -(da1 * da1 * ff_inv(da0 * da0));
  const FieldElement c1 = one;
  const FieldElement d = c0 + c1;
  const FieldElement e = (c0 * a0 + c1 * a1) - d;
  return MarkerPair{a0, c0, a1, c1, d, e};
}

PairEquation eliminated_evaluation(FieldElement fA_x, FieldElement fB_x,
                                   FieldElement fA_x2, FieldElement fB_x2,
                                   FieldElement ones_x, FieldElement ones_x2,
                                   const MarkerPair& mp) {
  require_same_field(fA_x, fB_x, "eliminated_evaluation");
  require_same_field(fA_x, fA_x2, "eliminated_evaluation");
  require_same_field(fA_x, fB_x2, "eliminated_evaluation");
  require_same_field(fA_x, ones_x, "eliminated_evaluation");
  require_same_field(fA_x, ones_x2, "eliminated_evaluation");
  require_same_field(fA_x, mp.a0, "eliminated_evaluation");

  // H(a) = a*f + (ones - f): markers replace coefficient 1, ones replace 0.
  const auto premult = [&](FieldElement f, FieldElement a) {
    return a * f + (ones_x - f);
  };
  const FieldElement product0 = premult(fA_x, mp.a0) * premult(fB_x, mp.a0);
  const FieldElement product1 = premult(fA_x, mp.a1) * premult(fB_x, mp.a1);
  const FieldElement additionSide = mp.d * ones_x2 + mp.e * (fA_x2 + fB_x2);
  const FieldElement rhs = mp.c0 * product0 + mp.c1 * product1 - additionSide;
  return PairEquation{{mp.d, mp.d + mp.e, mp.d + mp.e + mp.e}, rhs};
}

FieldElement off_diagonal_total(FieldElement ones_x, FieldElement ones_x2) {
  require_same_field(ones_x, ones_x2, "off_diagonal_total");
  return ones_x * ones_x - ones_x2;
}

SatisfactionSplit solve_two_clause(const PairEquation& eq1,
                                   const PairEquation& eq2, FieldElement T) {
  require_same_field(eq1.rhs, eq2.rhs, "solve_two_clause");
  require_same_field(eq1.rhs, T, "solve_two_clause");
  if (eq1.w == eq2.w) {
    throw ContractViolation(
        "solve_two_clause needs equations from distinct marker pairs");
  }

  // Substitute b2 = T - b0 - b1: row i becomes
  //   (w0 - w2)*b0 + (w1 - w2)*b1 = rhs - w2*T.
  const FieldElement A1 = eq1.w[0] - eq1.w[2], B1 = eq1.w[1] - eq1.w[2];
  const FieldElement A2 = eq2.w[0] - eq2.w[2], B2 = eq2.w[1] - eq2.w[2];
  const FieldElement R1 = eq1.rhs - eq1.w[2] * T;
  const FieldElement R2 = eq2.rhs - eq2.w[2] * T;

  const FieldElement det = A1 * B2 - A2 * B1;
  if (!det.isZero()) {
    const FieldElement invDet = ff_inv(det);
    const FieldElement b0 = (R1 * B2 - R2 * B1) * invDet;
    const FieldElement b1 = (A1 * R2 - A2 * R1) * invDet;
    const FieldElement b2 = T - b0 - b1;
    return SatisfactionSplit{SplitStatus::Unique, b0, b1, b2, T,
                             b1 + b2 + b2};
  }

  // Singular: each row still determines u = b1 + 2*b2, because
  // sum_s (d + e*s)*b_s = d*T + e*u. The two must agree.
  const auto aggregate = [&](const PairEquation& eq) {
    const FieldElement d = eq.w[0];
    const FieldElement e = eq.w[1] - eq.w[0];
    return (eq.rhs - d * T) * ff_inv(e);
  };
  const FieldElement u1 = aggregate(eq1);
  const FieldElement u2 = aggregate(eq2);
  if (!(u1 == u2)) {
    throw InconsistentSystem(
        "the reduced equations disagree on b1 + 2*b2; the elimination is broken");
  }
  if (T.isZero() && u1.isZero()) {
    const FieldElement zero(0, Prime(T.modulus()));
    return SatisfactionSplit{SplitStatus::Unique, zero, zero, zero, T, u1};
  }
  return SatisfactionSplit{SplitStatus::Singular, std::nullopt, std::nullopt,
                           std::nullopt, T, u1};
}

FieldElement diagonal_value(FieldElement fA_x, FieldElement fB_x,
                            FieldElement b2) {
  require_same_field(fA_x, fB_x, "diagonal_value");
  require_same_field(fA_x, b2, "diagonal_value");
  return fA_x * fB_x - b2;
}

}  // namespace cpsat
