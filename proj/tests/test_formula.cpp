#include <sstream>

#include "doctest.h"

#include "cpsat/formula.hpp"

using namespace cpsat;

namespace {

Clause make(std::vector<Literal> lits) { return Clause(std::move(lits)); }

}  // namespace

TEST_CASE("clause construction sorts and merges literals") {
  const Clause c = make({{2, false}, {0, true}, {2, false}});
  REQUIRE(c.literals().size() == 2);
  CHECK(c.literals()[0] == Literal{0, true});
  CHECK(c.literals()[1] == Literal{2, false});
  CHECK(c.maxVariable() == 2);
  CHECK_FALSE(c.tautological());
  CHECK_FALSE(c.isEmpty());
}

TEST_CASE("a clause holding both polarities collapses to the tautology") {
  const Clause c = make({{1, false}, {0, false}, {1, true}});
  CHECK(c.tautological());
  CHECK(c.literals().empty());
  CHECK(c.maxVariable() == -1);
  CHECK(c == Clause::tautology());
}

TEST_CASE("the default clause is the empty clause") {
  const Clause c;
  CHECK(c.isEmpty());
  CHECK_FALSE(c.tautological());
  CHECK(c.maxVariable() == -1);
  CHECK_FALSE(c.satisfiedBy(0));
}

TEST_CASE("negative variable indices are rejected") {
  CHECK_THROWS_AS(make({{-1, false}}), ContractViolation);
}

TEST_CASE("satisfiedBy reads assignment bits") {
  const Clause c = make({{0, false}, {1, true}});  // x0 | ~x1
  CHECK(c.satisfiedBy(0b00));   // ~x1 holds
  CHECK(c.satisfiedBy(0b01));   // x0 holds
  CHECK_FALSE(c.satisfiedBy(0b10));
  CHECK(c.satisfiedBy(0b11));   // x0 holds
  CHECK(Clause::tautology().satisfiedBy(0));
}

TEST_CASE("parse_dimacs handles the standard layout") {
  const Formula f = parse_dimacs("c a comment\np cnf 2 2\n1 0\n-1 2 0\n");
  CHECK(f.V == 2);
  REQUIRE(f.n() == 2);
  CHECK(f.clauses[0] == make({{0, false}}));
  CHECK(f.clauses[1] == make({{0, true}, {1, false}}));
}

TEST_CASE("parse_dimacs allows clauses split across lines") {
  const Formula f = parse_dimacs("p cnf 3 1\n1\n-2\n3 0\n");
  REQUIRE(f.n() == 1);
  CHECK(f.clauses[0] == make({{0, false}, {1, true}, {2, false}}));
}

TEST_CASE("parse_dimacs reports the offending line") {
  const auto lineOf = [](const std::string& text) {
    try {
      parse_dimacs(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(lineOf("") == 1);                              // missing header
  CHECK(lineOf("p cnf 2 1\n1 3 0\n") == 2);            // literal out of range
  CHECK(lineOf("p cnf 2 1\n1 2\n") == 2);              // missing terminator
  CHECK(lineOf("p cnf 2 2\n1 0\n") == 2);              // clause count mismatch
  CHECK(lineOf("p cnf -1 0\n") == 1);                  // negative count
  CHECK(lineOf("p cnf two 1\n1 0\n") == 1);            // non-numeric header
  CHECK(lineOf("q cnf 2 1\n1 0\n") == 1);              // wrong header tag
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 x 0\n"), ParseError);
}

TEST_CASE("serialize_dimacs emits what parse_dimacs accepts") {
  Formula f;
  f.V = 2;
  f.clauses.push_back(make({{0, false}}));
  f.clauses.push_back(make({{0, true}, {1, false}}));
  const std::string text = serialize_dimacs(f);
  CHECK(text == "p cnf 2 2\n1 0\n-1 2 0\n");
  CHECK(parse_dimacs(text) == f);
}

TEST_CASE("serialize_dimacs encodes tautologies and empty clauses") {
  Formula f;
  f.V = 1;
  f.clauses.push_back(Clause::tautology());
  f.clauses.push_back(Clause{});
  CHECK(serialize_dimacs(f) == "p cnf 1 2\n1 -1 0\n0\n");
  const Formula parsed = parse_dimacs(serialize_dimacs(f));
  CHECK(parsed.clauses[0].tautological());
  CHECK(parsed.clauses[1].isEmpty());

  Formula bare;
  bare.V = 0;
  bare.clauses.push_back(Clause::tautology());
  CHECK_THROWS_AS(serialize_dimacs(bare), ContractViolation);
}

TEST_CASE("satisfies checks the whole formula") {
  const Formula f = parse_dimacs("p cnf 2 2\n1 0\n-1 2 0\n");
  CHECK(satisfies(f, Assignment{{true, true}}));
  CHECK_FALSE(satisfies(f, Assignment{{true, false}}));
  CHECK_FALSE(satisfies(f, Assignment{{false, true}}));
  CHECK_THROWS_AS(satisfies(f, Assignment{{true}}), ContractViolation);
}

TEST_CASE("assign_and_simplify fixes a variable and shifts the rest") {
  const Formula f = parse_dimacs("p cnf 2 2\n1 0\n-1 2 0\n");

  const SimplifyResult fixedTrue = assign_and_simplify(f, 0, true);
  REQUIRE(std::holds_alternative<Formula>(fixedTrue));
  const Formula& ft = std::get<Formula>(fixedTrue);
  CHECK(ft.V == 1);
  REQUIRE(ft.n() == 1);
  CHECK(ft.clauses[0] == make({{0, false}}));  // old x1, shifted down

  const SimplifyResult fixedFalse = assign_and_simplify(f, 0, false);
  CHECK(std::holds_alternative<Contradiction>(fixedFalse));
}

TEST_CASE("assign_and_simplify keeps tautologies and drops satisfied clauses") {
  Formula f;
  f.V = 2;
  f.clauses.push_back(Clause::tautology());
  f.clauses.push_back(make({{0, false}, {1, false}}));
  const SimplifyResult r = assign_and_simplify(f, 1, true);
  REQUIRE(std::holds_alternative<Formula>(r));
  const Formula& g = std::get<Formula>(r);
  CHECK(g.V == 1);
  REQUIRE(g.n() == 1);
  CHECK(g.clauses[0].tautological());
  CHECK_THROWS_AS(assign_and_simplify(f, 2, true), ContractViolation);
}

TEST_CASE("random_ksat is reproducible and well-formed") {
  const Formula f = random_ksat(5, 8, 3, 42);
  CHECK(f.V == 5);
  REQUIRE(f.n() == 8);
  for (const Clause& c : f.clauses) {
    CHECK(c.literals().size() == 3);  // distinct variables, no merges
    CHECK(c.maxVariable() < 5);
  }
  CHECK(f == random_ksat(5, 8, 3, 42));
  CHECK_FALSE(f == random_ksat(5, 8, 3, 43));
  CHECK_THROWS_AS(random_ksat(2, 1, 3, 0), ContractViolation);
  CHECK_THROWS_AS(random_ksat(0, 1, 1, 0), ContractViolation);
}

TEST_CASE("clause specs parse and format round-trip") {
  const Clause c = parse_clause_spec("x0|~x1");
  CHECK(c == make({{0, false}, {1, true}}));
  CHECK(format_clause(c) == "x0|~x1");
  CHECK(parse_clause_spec(" x0 | ~x1 ") == c);
  CHECK(parse_clause_spec("T").tautological());
  CHECK(parse_clause_spec("F").isEmpty());
  CHECK(parse_clause_spec("").isEmpty());
  CHECK(format_clause(Clause::tautology()) == "T");
  CHECK(format_clause(Clause{}) == "F");
  CHECK(parse_clause_spec("x12").literals()[0] == Literal{12, false});

  CHECK_THROWS_AS(parse_clause_spec("y0"), ContractViolation);
  CHECK_THROWS_AS(parse_clause_spec("x"), ContractViolation);
  CHECK_THROWS_AS(parse_clause_spec("x0|"), ContractViolation);
  CHECK_THROWS_AS(parse_clause_spec("x0&x1"), ContractViolation);
  CHECK_THROWS_AS(parse_clause_spec("~"), ContractViolation);
}
