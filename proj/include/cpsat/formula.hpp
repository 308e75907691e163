#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "cpsat/errors.hpp"

namespace cpsat {

/// One occurrence of variable x_{variableIndex}, possibly negated.
struct Literal {
  int variableIndex = 0;
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) noexcept = default;
};

/// A disjunction of literals over distinct variables, kept sorted by
/// variableIndex. A clause given both polarities of one variable normalizes
/// to the flagged tautology (empty literal list, tautological() true); a
/// default-constructed clause is the empty clause, which nothing satisfies.
class Clause {
 public:
  Clause() = default;

  /// Sorts, merges same-polarity duplicates, and flags x | ~x as tautological.
  explicit Clause(std::vector<Literal> literals);

  static Clause tautology();

  bool tautological() const noexcept { return tautological_; }
  const std::vector<Literal>& literals() const noexcept { return literals_; }
  bool isEmpty() const noexcept { return literals_.empty() && !tautological_; }
  /// Largest variableIndex used, or -1 if there are no literals.
  int maxVariable() const noexcept;

  /// True when the assignment encoded as bits satisfies the clause; bit i of
  /// assignmentBits is the value of x_i (x_0 least significant). Valid for
  /// variable indices below 64.
  bool satisfiedBy(std::uint64_t assignmentBits) const noexcept;

  friend bool operator==(const Clause&, const Clause&) noexcept = default;

 private:
  std::vector<Literal> literals_;
  bool tautological_ = false;
};

/// A CNF instance: V variables x_0 .. x_{V-1} and a conjunction of clauses.
struct Formula {
  int V = 0;
  std::vector<Clause> clauses;

  int n() const noexcept { return static_cast<int>(clauses.size()); }

  friend bool operator==(const Formula&, const Formula&) noexcept = default;
};

/// A complete truth assignment; index i is the value of x_i.
struct Assignment {
  std::vector<bool> values;

  friend bool operator==(const Assignment&, const Assignment&) noexcept = default;
};

bool satisfies(const Clause& c, const Assignment& a);
bool satisfies(const Formula& f, const Assignment& a);

/// DIMACS CNF reader: 'c' comment lines, one 'p cnf V n' header, clauses as
/// nonzero integers terminated by 0 (free layout across lines). DIMACS
/// variable k is internal x_{k-1}; negative means negated. Violations raise
/// ParseError carrying the offending line number.
Formula parse_dimacs(std::istream& in);
Formula parse_dimacs(const std::string& text);

/// Emits exactly the grammar parse_dimacs accepts. A flagged tautology is
/// written as "1 -1 0" (requires V >= 1), the empty clause as "0".
std::string serialize_dimacs(const Formula& f);

/// Marker result for a clause emptied by the assignment.
struct Contradiction {
  friend bool operator==(const Contradiction&, const Contradiction&) noexcept = default;
};

using SimplifyResult = std::variant<Formula, Contradiction>;

/// Fixes x_variable := value: satisfied clauses are dropped, the falsified
/// literal is deleted elsewhere, and variable indices above it shift down so
/// the result ranges over V-1 variables. An emptied clause yields
/// Contradiction.
SimplifyResult assign_and_simplify(const Formula& f, int variable, bool value);

/// n random clauses of k distinct variables each, fair-coin polarities,
/// bit-for-bit reproducible from the seed.
Formula random_ksat(int V, int n, int k, std::uint64_t seed);

/// Text form used by the command line: literals 'xN' or '~xN' joined by '|',
/// e.g. "x0|~x1". "T" denotes the flagged tautology, "F" the empty clause.
Clause parse_clause_spec(const std::string& spec);
std::string format_clause(const Clause& c);

}  // namespace cpsat
