#include <cmath>
#include <random>

#include "doctest.h"

#include "cpsat/engine.hpp"
#include "cpsat/oracle.hpp"
#include "cpsat/rng.hpp"

using namespace cpsat;

namespace {

Formula walkthrough_formula() {
  return parse_dimacs("p cnf 2 2\n1 0\n-1 2 0\n");
}

Formula contradiction_formula() {
  return parse_dimacs("p cnf 1 2\n1 0\n-1 0\n");
}

/// (x0) & (~x0) & (x1) & (x1): the left half of the combiner tree is already
/// unsatisfiable, so its multiplication-role value is zero at every point.
Formula deep_unsat_formula() {
  return parse_dimacs("p cnf 2 4\n1 0\n-1 0\n2 0\n2 0\n");
}

/// 0/1 coefficient vector of the whole conjunction: coeff[t] = 1 iff
/// assignment t satisfies every clause.
DensePoly conjunction_indicator(const Formula& f, const Prime& p) {
  DensePoly conj(f.V, p);
  for (std::size_t t = 0; t < (std::size_t{1} << f.V); ++t) {
    bool all = true;
    for (const Clause& c : f.clauses) all = all && c.satisfiedBy(t);
    if (all) conj.setCoeff(t, FieldElement(1, p));
  }
  return conj;
}

}  // namespace

TEST_CASE("choose_prime sizes the field per policy") {
  CHECK(choose_prime(2, 2, PrimePolicy::Walkthrough).value() == 17);
  CHECK(choose_prime(2, 2, PrimePolicy::Optimized).value() == 37);
  CHECK(choose_prime(1, 1, PrimePolicy::Walkthrough).value() == 5);
  CHECK(choose_prime(1, 1, PrimePolicy::Optimized).value() == 5);
  CHECK(choose_prime(6, 2, PrimePolicy::Walkthrough).value() == 149);
  CHECK(choose_prime(6, 2, PrimePolicy::Optimized).value() == 149);
  CHECK(choose_prime(36, 10, PrimePolicy::Optimized).value() == 21163);
  CHECK_THROWS_AS(choose_prime(0, 1, PrimePolicy::Optimized), ContractViolation);
  CHECK_THROWS_AS(choose_prime(1, 0, PrimePolicy::Optimized), ContractViolation);
}

TEST_CASE("pad_formula rounds the clause count up to a power of two") {
  Formula three = parse_dimacs("p cnf 2 3\n1 0\n-1 2 0\n2 0\n");
  const auto [padded, plan] = pad_formula(three);
  CHECK(padded.n() == 4);
  CHECK(padded.V == 2);
  CHECK(padded.clauses[3].tautological());
  CHECK(plan.paddedClauseCount == 4);
  CHECK(plan.levels == 2);
  CHECK(plan.exponentSchedule == std::vector<int>{2, 1, 0});

  const auto [single, singlePlan] = pad_formula(parse_dimacs("p cnf 1 1\n1 0\n"));
  CHECK(single.n() == 1);
  CHECK(singlePlan.levels == 0);
  CHECK(singlePlan.exponentSchedule == std::vector<int>{0});

  CHECK_THROWS_AS(pad_formula(Formula{}), ContractViolation);
}

TEST_CASE("pad_formula can widen the variable space with a fresh unit clause") {
  const auto [padded, plan] = pad_formula(walkthrough_formula(), true);
  CHECK(padded.V == 4);
  CHECK(padded.n() == 4);
  CHECK(padded.clauses[2] == Clause(std::vector<Literal>{Literal{2, false}}));
  CHECK(padded.clauses[3].tautological());
  CHECK(plan.levels == 2);

  Formula degenerate;
  degenerate.V = 0;
  degenerate.clauses.push_back(Clause::tautology());
  CHECK_THROWS_AS(pad_formula(degenerate, true), ContractViolation);
}

TEST_CASE("zero_input_policy walks repoints, then reprimes, then gives up") {
  SolverConfig cfg;  // repointBudget 3, reprimeBudget 1

  cfg.zeroStrategy = ZeroStrategy::Repoint;
  CHECK(zero_input_policy(cfg, {0, 0, false}) == RetryAction::NewBasePoint);
  CHECK(zero_input_policy(cfg, {2, 0, false}) == RetryAction::NewBasePoint);
  CHECK(zero_input_policy(cfg, {3, 0, false}) == RetryAction::NextPrime);
  CHECK(zero_input_policy(cfg, {3, 1, false}) == RetryAction::GiveUp);

  cfg.zeroStrategy = ZeroStrategy::Reprime;
  CHECK(zero_input_policy(cfg, {0, 0, false}) == RetryAction::NextPrime);
  CHECK(zero_input_policy(cfg, {0, 1, false}) == RetryAction::GiveUp);

  cfg.zeroStrategy = ZeroStrategy::ExtraVariables;
  CHECK(zero_input_policy(cfg, {0, 0, false}) == RetryAction::ExtraVariables);
  CHECK(zero_input_policy(cfg, {0, 0, true}) == RetryAction::NewBasePoint);
  CHECK(zero_input_policy(cfg, {3, 0, true}) == RetryAction::NextPrime);
  CHECK(zero_input_policy(cfg, {3, 1, true}) == RetryAction::GiveUp);

  cfg.zeroStrategy = ZeroStrategy::Repoint;
  cfg.repointBudget = 0;
  cfg.reprimeBudget = 0;
  CHECK(zero_input_policy(cfg, {0, 0, false}) == RetryAction::GiveUp);
}

TEST_CASE("evaluate_tree on a single clause is one leaf evaluation") {
  const auto [padded, plan] = pad_formula(parse_dimacs("p cnf 2 1\n1 0\n"));
  const FieldElement x(3, Prime(17));
  SolverConfig cfg;
  TreeStats stats;
  const auto root = evaluate_tree(padded, x, 0, cfg, stats);
  REQUIRE(root.has_value());
  CHECK(root->residue() == 13);
  CHECK(stats.leafEvaluations == 1);
  CHECK(stats.combinerInvocations == 0);

  // Extra doubling just squares the evaluation point.
  TreeStats deeper;
  const auto doubled = evaluate_tree(padded, x, 2, cfg, deeper);
  REQUIRE(doubled.has_value());
  CHECK(*doubled == eval_clause_at(padded.clauses[0], 2, x, 2).value);
}

TEST_CASE("evaluate_tree combines the walkthrough pair into the conjunction") {
  const auto [padded, plan] = pad_formula(walkthrough_formula());
  const FieldElement x(3, Prime(17));
  SolverConfig cfg;
  TreeStats stats;
  const auto root = evaluate_tree(padded, x, plan.levels, cfg, stats);
  REQUIRE(root.has_value());
  CHECK(root->residue() == 15);  // conjunction = x0 & x1, value 9^3 mod 17
  CHECK(stats.leafEvaluations == 4);
  CHECK(stats.combinerInvocations == 1);
  CHECK(stats.singularCombiners == 1);
  CHECK(stats.uniqueCombiners == 0);
  CHECK(stats.zeroEvents.empty());
}

TEST_CASE("evaluate_tree recursion is unmemoized by design") {
  const auto [padded, plan] =
      pad_formula(parse_dimacs("p cnf 2 3\n1 0\n-1 2 0\n2 0\n"));
  const FieldElement x(3, Prime(257));
  SolverConfig cfg;
  TreeStats stats;
  const auto root = evaluate_tree(padded, x, plan.levels, cfg, stats);
  CHECK(root.has_value());
  CHECK(stats.leafEvaluations == 16);      // 4^levels
  CHECK(stats.combinerInvocations == 5);   // (4^levels - 1) / 3
}

TEST_CASE("paper mode propagates singular combiners as absence") {
  SolverConfig cfg;
  cfg.mode = SolveMode::Paper;

  const auto [pair, pairPlan] = pad_formula(walkthrough_formula());
  TreeStats pairStats;
  const auto pairRoot =
      evaluate_tree(pair, FieldElement(3, Prime(17)), pairPlan.levels, cfg,
                    pairStats);
  CHECK_FALSE(pairRoot.has_value());
  CHECK(pairStats.singularCombiners == 1);
  CHECK(pairStats.blockedCombiners == 0);

  const auto [four, fourPlan] =
      pad_formula(parse_dimacs("p cnf 2 3\n1 0\n-1 2 0\n2 0\n"));
  TreeStats fourStats;
  const auto fourRoot =
      evaluate_tree(four, FieldElement(3, Prime(257)), fourPlan.levels, cfg,
                    fourStats);
  CHECK_FALSE(fourRoot.has_value());
  CHECK(fourStats.blockedCombiners >= 1);
}

TEST_CASE("hybrid tree evaluation equals the conjunction polynomial") {
  std::mt19937_64 rng(7);
  SolverConfig cfg;
  for (int trial = 0; trial < 40; ++trial) {
    const int V = 1 + static_cast<int>(uniform_below(rng, 4));
    const int n = 1 + static_cast<int>(uniform_below(rng, 6));
    const int k = 1 + static_cast<int>(uniform_below(rng, V));
    const Formula f = random_ksat(V, n, k, rng());
    const auto [padded, plan] = pad_formula(f);
    const Prime p(next_prime(300 + uniform_below(rng, 5000)));
    const FieldElement x(2 + uniform_below(rng, p.value() - 2), p);

    TreeStats stats;
    const auto root = evaluate_tree(padded, x, plan.levels, cfg, stats);
    REQUIRE(root.has_value());

    FieldElement point = x;
    for (int j = 0; j < plan.levels; ++j) point = point * point;
    CHECK(*root == poly_eval(conjunction_indicator(f, p), point));
  }
}

TEST_CASE("evaluate_tree validates its contract") {
  Formula raw = parse_dimacs("p cnf 2 3\n1 0\n-1 2 0\n2 0\n");
  SolverConfig cfg;
  TreeStats stats;
  const FieldElement x(3, Prime(257));
  CHECK_THROWS_AS(evaluate_tree(raw, x, 2, cfg, stats), ContractViolation);

  const auto [padded, plan] = pad_formula(walkthrough_formula());
  CHECK_THROWS_AS(evaluate_tree(padded, FieldElement(3, Prime(17)), 0, cfg, stats),
                  ContractViolation);

  Formula wide = random_ksat(25, 2, 1, 5);
  const auto [widePadded, widePlan] = pad_formula(wide);
  CHECK_THROWS_AS(evaluate_tree(widePadded, FieldElement(3, Prime(1000003)),
                                widePlan.levels, cfg, stats),
                  CapExceeded);

  SolverConfig tight;
  tight.denseCap = 10;
  Formula eleven = random_ksat(11, 2, 1, 5);
  const auto [elevenPadded, elevenPlan] = pad_formula(eleven);
  CHECK_THROWS_AS(evaluate_tree(elevenPadded, FieldElement(3, Prime(1009)),
                                elevenPlan.levels, tight, stats),
                  CapExceeded);
}

TEST_CASE("decide accepts the walkthrough instance") {
  const Decision d = decide(walkthrough_formula());
  CHECK(d.verdict == Verdict::Satisfiable);
  REQUIRE(d.evidence.size() == 1);
  CHECK(d.evidence[0].prime == 149);
  REQUIRE(d.evidence[0].rootValue.has_value());
  CHECK(*d.evidence[0].rootValue != 0);
  CHECK(d.evidence[0].stats.leafEvaluations == 4);
  CHECK(d.evidence[0].repoints == 0);
  CHECK_FALSE(d.evidence[0].zeroEventUnresolved);
  CHECK(d.errorBound == doctest::Approx(1.0 / 149.0));

  SolverConfig offset;
  offset.primeOffset = 1;
  CHECK(decide(walkthrough_formula(), offset).evidence[0].prime == 151);
}

TEST_CASE("decide rejects the direct contradiction cleanly") {
  const Decision d = decide(contradiction_formula());
  CHECK(d.verdict == Verdict::LikelyUnsatisfiable);
  REQUIRE(d.evidence.size() == 1);
  CHECK(d.evidence[0].prime == 67);
  REQUIRE(d.evidence[0].rootValue.has_value());
  CHECK(*d.evidence[0].rootValue == 0);
  CHECK_FALSE(d.evidence[0].zeroEventUnresolved);
  CHECK(d.errorBound == doctest::Approx(1.0 / 67.0));
}

TEST_CASE("paper mode reports multi-clause instances as indeterminate") {
  SolverConfig cfg;
  cfg.mode = SolveMode::Paper;
  const Decision d = decide(walkthrough_formula(), cfg);
  CHECK(d.verdict == Verdict::Indeterminate);
  REQUIRE(d.evidence.size() == 1);
  CHECK_FALSE(d.evidence[0].rootValue.has_value());
  CHECK(d.evidence[0].stats.singularCombiners >= 1);
}

TEST_CASE("independent prime pipelines tighten the reported error bound") {
  SolverConfig cfg;
  cfg.primeCount = 2;
  const Decision d = decide(walkthrough_formula(), cfg);
  CHECK(d.verdict == Verdict::Satisfiable);
  REQUIRE(d.evidence.size() == 2);
  CHECK(d.evidence[0].prime == 149);
  CHECK(d.evidence[1].prime == 151);
  CHECK(d.evidence[0].basePoint != d.evidence[1].basePoint);
  CHECK(d.errorBound == doctest::Approx(std::pow(1.0 / 149.0, 2)));
}

TEST_CASE("decide is deterministic in the seed") {
  SolverConfig cfg;
  cfg.primeCount = 2;
  cfg.basePointSeed = 99;
  const Decision first = decide(walkthrough_formula(), cfg);
  const Decision second = decide(walkthrough_formula(), cfg);
  REQUIRE(first.evidence.size() == second.evidence.size());
  for (std::size_t i = 0; i < first.evidence.size(); ++i) {
    CHECK(first.evidence[i].basePoint == second.evidence[i].basePoint);
    CHECK(first.evidence[i].rootValue == second.evidence[i].rootValue);
  }

  SolverConfig other = cfg;
  other.basePointSeed = 100;
  const Decision third = decide(walkthrough_formula(), other);
  CHECK(third.verdict == Verdict::Satisfiable);
}

TEST_CASE("decide short-circuits degenerate instances") {
  Formula empty;
  empty.V = 3;
  const Decision d = decide(empty);
  CHECK(d.verdict == Verdict::Satisfiable);
  CHECK(d.evidence.empty());
  CHECK(d.errorBound == 0.0);

  Formula zeroVars;
  zeroVars.V = 0;
  zeroVars.clauses.push_back(Clause::tautology());
  CHECK(decide(zeroVars).verdict == Verdict::Satisfiable);
  zeroVars.clauses.push_back(Clause{});
  CHECK(decide(zeroVars).verdict == Verdict::LikelyUnsatisfiable);
}

TEST_CASE("decide validates the configuration") {
  const Formula f = walkthrough_formula();
  SolverConfig cfg;
  cfg.primeCount = 0;
  CHECK_THROWS_AS(decide(f, cfg), ContractViolation);
  cfg = SolverConfig{};
  cfg.perStepError = 1.0;
  CHECK_THROWS_AS(decide(f, cfg), ContractViolation);
  cfg = SolverConfig{};
  cfg.targetErrorTotal = 0.0;
  CHECK_THROWS_AS(decide(f, cfg), ContractViolation);
  cfg = SolverConfig{};
  cfg.repointBudget = -1;
  CHECK_THROWS_AS(decide(f, cfg), ContractViolation);
  cfg = SolverConfig{};
  cfg.primeOffset = -1;
  CHECK_THROWS_AS(decide(f, cfg), ContractViolation);
}

TEST_CASE("hybrid mode refuses variable spaces past the dense cap") {
  const Formula wide = random_ksat(25, 1, 1, 7);
  CHECK_THROWS_AS(decide(wide), CapExceeded);
  SolverConfig paper;
  paper.mode = SolveMode::Paper;
  CHECK(decide(wide, paper).verdict == Verdict::Satisfiable);
}

TEST_CASE("structurally zero multiplication inputs exhaust the retry budget") {
  const Formula f = deep_unsat_formula();

  const Decision repoint = decide(f);
  CHECK(repoint.verdict == Verdict::Indeterminate);
  REQUIRE(repoint.evidence.size() == 1);
  CHECK(repoint.evidence[0].repoints == 3);
  CHECK(repoint.evidence[0].reprimes == 1);
  CHECK(repoint.evidence[0].zeroEventUnresolved);
  CHECK(repoint.evidence[0].prime == 263);  // one reprime past 257

  SolverConfig reprime;
  reprime.zeroStrategy = ZeroStrategy::Reprime;
  const Decision viaReprime = decide(f, reprime);
  CHECK(viaReprime.verdict == Verdict::Indeterminate);
  CHECK(viaReprime.evidence[0].repoints == 0);
  CHECK(viaReprime.evidence[0].reprimes == 1);
  CHECK(viaReprime.evidence[0].prime == 263);

  SolverConfig widen;
  widen.zeroStrategy = ZeroStrategy::ExtraVariables;
  const Decision viaWiden = decide(f, widen);
  CHECK(viaWiden.verdict == Verdict::Indeterminate);
  CHECK(viaWiden.evidence[0].extraVariables);
  CHECK(viaWiden.evidence[0].zeroEventUnresolved);
}

TEST_CASE("extract_certificate recovers the unique walkthrough model") {
  const CertificateResult cert = extract_certificate(walkthrough_formula());
  REQUIRE(cert.assignment.has_value());
  CHECK(cert.assignment->values == std::vector<bool>{true, true});
  CHECK(cert.failure.empty());
  CHECK(satisfies(walkthrough_formula(), *cert.assignment));
}

TEST_CASE("extract_certificate refuses non-satisfiable decisions") {
  CHECK_THROWS_AS(extract_certificate(contradiction_formula()),
                  ContractViolation);
}

TEST_CASE("extracted certificates satisfy their formulas") {
  int satisfiable = 0;
  for (std::uint64_t seed = 1000; seed < 1012; ++seed) {
    const Formula f = random_ksat(5, 8, 3, seed);
    if (decide(f).verdict != Verdict::Satisfiable) continue;
    ++satisfiable;
    CHECK(model_count(f) > 0);  // a satisfiable verdict is never wrong
    const CertificateResult cert = extract_certificate(f);
    REQUIRE(cert.assignment.has_value());
    CHECK(satisfies(f, *cert.assignment));
  }
  CHECK(satisfiable > 0);
}
