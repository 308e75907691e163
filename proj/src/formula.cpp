#include "cpsat/formula.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <string>

#include "cpsat/rng.hpp"

namespace cpsat {

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
  std::sort(literals_.begin(), literals_.end(),
            [](const Literal& a, const Literal& b) {
              return a.variableIndex < b.variableIndex ||
                     (a.variableIndex == b.variableIndex && a.negated < b.negated);
            });
  std::vector<Literal> merged;
  merged.reserve(literals_.size());
  for (const Literal& lit : literals_) {
    if (lit.variableIndex < 0) {
      throw ContractViolation("negative variable index in clause");
    }
    if (!merged.empty() && merged.back().variableIndex == lit.variableIndex) {
      if (merged.back().negated != lit.negated) {
        // x | ~x: satisfied by everything.
        literals_.clear();
        tautological_ = true;
        return;
      }
      continue;  // same literal twice
    }
    merged.push_back(lit);
  }
  literals_ = std::move(merged);
}

Clause Clause::tautology() {
  Clause c;
  c.tautological_ = true;
  return c;
}

int Clause::maxVariable() const noexcept {
  return literals_.empty() ? -1 : literals_.back().variableIndex;
}

bool Clause::satisfiedBy(std::uint64_t assignmentBits) const noexcept {
  if (tautological_) return true;
  for (const Literal& lit : literals_) {
    const bool value = (assignmentBits >> lit.variableIndex) & 1;
    if (value != lit.negated) return true;
  }
  return false;
}

bool satisfies(const Clause& c, const Assignment& a) {
  if (c.tautological()) return true;
  for (const Literal& lit : c.literals()) {
    if (a.values.at(lit.variableIndex) != lit.negated) return true;
  }
  return false;
}

bool satisfies(const Formula& f, const Assignment& a) {
  if (static_cast<int>(a.values.size()) != f.V) {
    throw ContractViolation("assignment length differs from variable count");
  }
  return std::all_of(f.clauses.begin(), f.clauses.end(),
                     [&](const Clause& c) { return satisfies(c, a); });
}

namespace {

struct DimacsScanner {
  std::istream& in;
  std::string line{};
  int lineNumber = 0;
  std::istringstream tokens{};

  /// Advances to the next non-comment token; false at end of input.
  bool next(std::string& token) {
    for (;;) {
      if (tokens >> token) return true;
      if (!std::getline(in, line)) return false;
      ++lineNumber;
      if (!line.empty() && line[0] == 'c') {
        tokens = std::istringstream();
        continue;
      }
      tokens = std::istringstream(line);
    }
  }
};

long parse_int_token(const std::string& token, int line) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(token, &used);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + token + "'", line);
  }
  if (used != token.size()) {
    throw ParseError("expected an integer, got '" + token + "'", line);
  }
  return value;
}

}  // namespace

Formula parse_dimacs(std::istream& in) {
  DimacsScanner scan{in};
  std::string token;

  if (!scan.next(token)) throw ParseError("missing 'p cnf' header", 1);
  if (token != "p") {
    throw ParseError("expected 'p cnf' header before clauses", scan.lineNumber);
  }
  if (!scan.next(token) || token != "cnf") {
    throw ParseError("header format is 'p cnf <vars> <clauses>'", scan.lineNumber);
  }
  if (!scan.next(token)) throw ParseError("header is missing the variable count", scan.lineNumber);
  const long declaredV = parse_int_token(token, scan.lineNumber);
  if (!scan.next(token)) throw ParseError("header is missing the clause count", scan.lineNumber);
  const long declaredN = parse_int_token(token, scan.lineNumber);
  if (declaredV < 0 || declaredN < 0) {
    throw ParseError("header counts must be non-negative", scan.lineNumber);
  }

  Formula f;
  f.V = static_cast<int>(declaredV);
  std::vector<Literal> current;
  bool inClause = false;
  while (scan.next(token)) {
    const long value = parse_int_token(token, scan.lineNumber);
    if (value == 0) {
      f.clauses.emplace_back(std::move(current));
      current.clear();
      inClause = false;
      continue;
    }
    const long index = value < 0 ? -value : value;
    if (index > declaredV) {
      throw ParseError("literal " + token + " exceeds the declared " +
                           std::to_string(declaredV) + " variables",
                       scan.lineNumber);
    }
    current.push_back(Literal{static_cast<int>(index - 1), value < 0});
    inClause = true;
  }
  if (inClause) {
    throw ParseError("clause is missing its terminating 0", scan.lineNumber);
  }
  if (f.n() != declaredN) {
    throw ParseError("header declares " + std::to_string(declaredN) +
                         " clauses but " + std::to_string(f.n()) + " were given",
                     scan.lineNumber == 0 ? 1 : scan.lineNumber);
  }
  return f;
}

Formula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

std::string serialize_dimacs(const Formula& f) {
  std::ostringstream out;
  out << "p cnf " << f.V << ' ' << f.n() << '\n';
  for (const Clause& c : f.clauses) {
    if (c.tautological()) {
      if (f.V < 1) {
        throw ContractViolation("a tautology needs at least one variable in DIMACS");
      }
      out << "1 -1 0\n";
      continue;
    }
    for (const Literal& lit : c.literals()) {
      out << (lit.negated ? -(lit.variableIndex + 1) : lit.variableIndex + 1) << ' ';
    }
    out << "0\n";
  }
  return out.str();
}

SimplifyResult assign_and_simplify(const Formula& f, int variable, bool value) {
  if (variable < 0 || variable >= f.V) {
    throw ContractViolation("variable " + std::to_string(variable) +
                            " out of range for V=" + std::to_string(f.V));
  }
  Formula result;
  result.V = f.V - 1;
  for (const Clause& c : f.clauses) {
    if (c.tautological()) {
      result.clauses.push_back(c);
      continue;
    }
    std::vector<Literal> kept;
    kept.reserve(c.literals().size());
    bool satisfied = false;
    for (const Literal& lit : c.literals()) {
      if (lit.variableIndex == variable) {
        if (lit.negated != value) {
          satisfied = true;
          break;
        }
        continue;  // falsified literal drops out
      }
      Literal shifted = lit;
      if (shifted.variableIndex > variable) --shifted.variableIndex;
      kept.push_back(shifted);
    }
    if (satisfied) continue;
    if (kept.empty()) return Contradiction{};
    result.clauses.emplace_back(std::move(kept));
  }
  return result;
}

Formula random_ksat(int V, int n, int k, std::uint64_t seed) {
  if (V < 1 || n < 0 || k < 1) {
    throw ContractViolation("random_ksat requires V >= 1, n >= 0, k >= 1");
  }
  if (k > V) {
    throw ContractViolation("cannot pick " + std::to_string(k) +
                            " distinct variables out of " + std::to_string(V));
  }
  std::mt19937_64 rng(seed);
  Formula f;
  f.V = V;
  f.clauses.reserve(n);
  std::vector<int> pool(V);
  for (int i = 0; i < n; ++i) {
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<Literal> lits;
    lits.reserve(k);
    for (int j = 0; j < k; ++j) {
      // Partial Fisher-Yates: position j trades with a uniform later slot.
      const std::size_t pick = j + uniform_below(rng, V - j);
      std::swap(pool[j], pool[pick]);
      lits.push_back(Literal{pool[j], uniform_below(rng, 2) == 1});
    }
    f.clauses.emplace_back(std::move(lits));
  }
  return f;
}

Clause parse_clause_spec(const std::string& spec) {
  std::string trimmed;
  for (char ch : spec) {
    if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
  }
  if (trimmed == "T") return Clause::tautology();
  if (trimmed == "F" || trimmed.empty()) return Clause{};
  std::vector<Literal> lits;
  std::size_t pos = 0;
  while (pos < trimmed.size()) {
    bool negated = false;
    if (trimmed[pos] == '~') {
      negated = true;
      ++pos;
    }
    if (pos >= trimmed.size() || trimmed[pos] != 'x') {
      throw ContractViolation("clause spec '" + spec +
                              "': expected a literal like x3 or ~x3");
    }
    ++pos;
    std::size_t start = pos;
    while (pos < trimmed.size() && std::isdigit(static_cast<unsigned char>(trimmed[pos]))) {
      ++pos;
    }
    if (start == pos) {
      throw ContractViolation("clause spec '" + spec + "': missing variable number");
    }
    lits.push_back(Literal{std::stoi(trimmed.substr(start, pos - start)), negated});
    if (pos < trimmed.size()) {
      if (trimmed[pos] != '|') {
        throw ContractViolation("clause spec '" + spec + "': literals join with '|'");
      }
      ++pos;
      if (pos == trimmed.size()) {
        throw ContractViolation("clause spec '" + spec + "': trailing '|'");
      }
    }
  }
  return Clause(std::move(lits));
}

std::string format_clause(const Clause& c) {
  if (c.tautological()) return "T";
  if (c.isEmpty()) return "F";
  std::string out;
  for (const Literal& lit : c.literals()) {
    if (!out.empty()) out += '|';
    if (lit.negated) out += '~';
    out += 'x';
    out += std::to_string(lit.variableIndex);
  }
  return out;
}

}  // namespace cpsat
