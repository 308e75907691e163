#include "cpsat/clausepoly.hpp"

#include <algorithm>
#include <sstream>

namespace cpsat {

namespace {

void require_same_shape(const DensePoly& f, const DensePoly& g) {
  if (f.variableCount() != g.variableCount()) {
    throw ContractViolation("dense polynomials range over different variable counts");
  }
  if (!(f.modulus() == g.modulus())) {
    throw ContractViolation("dense polynomials have different moduli");
  }
}

void require_same_field(const DensePoly& f, FieldElement x) {
  if (f.modulus().value() != x.modulus()) {
    throw ContractViolation("evaluation point lives in a different field");
  }
}

}  // namespace

DensePoly::DensePoly(int variableCount, Prime modulus)
    : variableCount_(variableCount), modulus_(modulus) {
  if (variableCount < 0) {
    throw ContractViolation("negative variable count");
  }
  if (variableCount > kDenseVariableLimit) {
    throw CapExceeded("dense representation over " + std::to_string(variableCount) +
                      " variables exceeds the hard limit of " +
                      std::to_string(kDenseVariableLimit));
  }
  coeffs_.assign(std::size_t{1} << variableCount, 0);
}

FieldElement DensePoly::coeff(std::size_t t) const {
  return FieldElement(coeffs_.at(t), modulus_);
}

void DensePoly::setCoeff(std::size_t t, FieldElement value) {
  if (value.modulus() != modulus_.value()) {
    throw ContractViolation("coefficient lives in a different field");
  }
  coeffs_.at(t) = value.residue();
}

bool DensePoly::zeroOne() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](std::uint64_t c) { return c <= 1; });
}

DensePoly var_poly(int m, int variableCount, bool negated, Prime p) {
  if (m < 0 || m >= variableCount) {
    throw ContractViolation("variable x" + std::to_string(m) + " outside V=" +
                            std::to_string(variableCount));
  }
  DensePoly f(variableCount, p);
  std::vector<Literal> lits{Literal{m, negated}};
  return clause_poly(Clause(std::move(lits)), variableCount, p);
}

DensePoly clause_poly(const Clause& c, int variableCount, Prime p) {
  if (c.maxVariable() >= variableCount) {
    throw ContractViolation("clause uses x" + std::to_string(c.maxVariable()) +
                            ", outside V=" + std::to_string(variableCount));
  }
  if (c.tautological()) return ones_poly(variableCount, p);

  DensePoly result(variableCount, p);
  const std::uint64_t mod = p.value();
  const std::size_t span = result.size();
  // result buffer plus the running prefix prod_{k<h} (1 + x^(2^k)).
  std::vector<std::uint64_t> buf(span, 0);
  std::vector<std::uint64_t> prefix(span, 0);
  prefix[0] = 1;

  auto lit = c.literals().begin();
  const auto end = c.literals().end();
  for (int h = 0; h < variableCount; ++h) {
    const std::size_t step = std::size_t{1} << h;
    if (lit != end && lit->variableIndex == h) {
      if (!lit->negated) {
        // Result += prefix * x^(2^h)
        for (std::size_t t = 0; t < span - step; ++t) {
          buf[t + step] = (buf[t + step] + prefix[t]) % mod;
        }
      } else {
        // Result = Result * x^(2^h) + prefix
        for (std::size_t t = span; t-- > step;) {
          buf[t] = buf[t - step];
        }
        std::fill(buf.begin(), buf.begin() + step, 0);
        for (std::size_t t = 0; t < span; ++t) {
          buf[t] = (buf[t] + prefix[t]) % mod;
        }
      }
      ++lit;
    } else {
      // Result *= (1 + x^(2^h))
      for (std::size_t t = span; t-- > step;) {
        buf[t] = (buf[t] + buf[t - step]) % mod;
      }
    }
    // prefix *= (1 + x^(2^h))
    for (std::size_t t = span; t-- > step;) {
      prefix[t] = (prefix[t] + prefix[t - step]) % mod;
    }
  }
  for (std::size_t t = 0; t < span; ++t) {
    result.setCoeff(t, FieldElement(buf[t], p));
  }
  return result;
}

DensePoly ones_poly(int variableCount, Prime p) {
  DensePoly f(variableCount, p);
  const FieldElement one(1, p);
  for (std::size_t t = 0; t < f.size(); ++t) f.setCoeff(t, one);
  return f;
}

FieldElement ones_at(int variableCount, FieldElement x) {
  Prime p(x.modulus());
  FieldElement result(1, p);
  FieldElement power = x;  // x^(2^k)
  const FieldElement one(1, p);
  for (int k = 0; k < variableCount; ++k) {
    result = result * (one + power);
    power = power * power;
  }
  return result;
}

DensePoly premult_transform(const DensePoly& f, FieldElement a) {
  if (!f.zeroOne()) {
    throw ContractViolation("pre-multiplication requires 0/1 coefficients");
  }
  if (a.modulus() != f.modulus().value()) {
    throw ContractViolation("marker lives in a different field");
  }
  DensePoly result(f.variableCount(), f.modulus());
  const FieldElement one(1, f.modulus());
  for (std::size_t t = 0; t < f.size(); ++t) {
    result.setCoeff(t, f.residues()[t] == 1 ? a : one);
  }
  return result;
}

DensePoly preadd_transform(const DensePoly& f) {
  DensePoly result(f.variableCount() + 1, f.modulus());
  for (std::size_t t = 0; t < f.size(); ++t) {
    result.setCoeff(2 * t, f.coeff(t));
  }
  return result;
}

ScalarEval eval_clause_at(const Clause& c, int variableCount, FieldElement x,
                          unsigned doubling) {
  if (c.maxVariable() >= variableCount) {
    throw ContractViolation("clause uses x" + std::to_string(c.maxVariable()) +
                            ", outside V=" + std::to_string(variableCount));
  }
  Prime p(x.modulus());
  FieldElement y = x;
  for (unsigned j = 0; j < doubling; ++j) y = y * y;

  if (c.tautological()) {
    return ScalarEval{ones_at(variableCount, y), x, doubling};
  }

  const FieldElement one(1, p);
  FieldElement result(0, p);
  FieldElement prefix = one;  // prod_{k<h} (1 + y^(2^k))
  FieldElement power = y;     // y^(2^h)
  auto lit = c.literals().begin();
  const auto end = c.literals().end();
  for (int h = 0; h < variableCount; ++h) {
    if (lit != end && lit->variableIndex == h) {
      if (!lit->negated) {
        result = result + prefix * power;
      } else {
        result = result * power + prefix;
      }
      ++lit;
    } else {
      result = result * (one + power);
    }
    prefix = prefix * (one + power);
    power = power * power;
  }
  return ScalarEval{result, x, doubling};
}

FieldElement poly_eval(const DensePoly& f, FieldElement x) {
  require_same_field(f, x);
  FieldElement acc(0, f.modulus());
  for (std::size_t t = f.size(); t-- > 0;) {
    acc = acc * x + f.coeff(t);
  }
  return acc;
}

DensePoly poly_mul(const DensePoly& f, const DensePoly& g) {
  require_same_shape(f, g);
  DensePoly result(f.variableCount() + 1, f.modulus());
  const std::uint64_t mod = f.modulus().value();
  std::vector<std::uint64_t> acc(result.size(), 0);
  const auto& a = f.residues();
  const auto& b = g.residues();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      acc[i + j] = (acc[i + j] + a[i] * b[j]) % mod;
    }
  }
  for (std::size_t t = 0; t < acc.size(); ++t) {
    result.setCoeff(t, FieldElement(acc[t], f.modulus()));
  }
  return result;
}

DensePoly hadamard_diag(const DensePoly& f, const DensePoly& g) {
  require_same_shape(f, g);
  DensePoly result(f.variableCount() + 1, f.modulus());
  for (std::size_t t = 0; t < f.size(); ++t) {
    result.setCoeff(2 * t, f.coeff(t) * g.coeff(t));
  }
  return result;
}

std::string pattern_table(const std::vector<Clause>& clauses, int variableCount) {
  if (variableCount < 1 || variableCount > 16) {
    throw CapExceeded("pattern tables are limited to 1 <= V <= 16");
  }
  const Prime p = next_prime(2);  // coefficients are 0/1; any field shows them
  std::vector<DensePoly> polys;
  polys.reserve(clauses.size());
  for (const Clause& c : clauses) {
    polys.push_back(clause_poly(c, variableCount, p));
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    if (i) out << '\t';
    out << format_clause(clauses[i]);
  }
  out << '\n';
  const std::size_t rows = std::size_t{1} << variableCount;
  for (std::size_t t = 0; t < rows; ++t) {
    for (std::size_t i = 0; i < polys.size(); ++i) {
      if (i) out << '\t';
      out << polys[i].residues()[t];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace cpsat
