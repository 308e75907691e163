#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cpsat/clausepoly.hpp"
#include "cpsat/field.hpp"
#include "cpsat/formula.hpp"

namespace cpsat {

/// Hybrid: when a combiner's system comes back singular, take the one
/// undetermined quantity (b2) from the exact oracle so every other mechanism
/// runs end to end. Paper: scalars only; a singular combiner propagates as
/// indeterminate, which is reported honestly.
enum class SolveMode { Hybrid, Paper };

/// Walkthrough: smallest prime above (2n)^2. Optimized: smallest prime above
/// max((2n)^2, V*(n+V)^2).
enum class PrimePolicy { Walkthrough, Optimized };

/// Remedy applied when a multiplication-role input evaluates to zero.
enum class ZeroStrategy { Repoint, Reprime, ExtraVariables };

enum class Verdict { Satisfiable, LikelyUnsatisfiable, Indeterminate };

std::string to_string(Verdict v);

struct SolverConfig {
  SolveMode mode = SolveMode::Hybrid;
  /// P: independent prime pipelines; the reported error bound is (1/p_min)^P.
  int primeCount = 1;
  PrimePolicy primePolicy = PrimePolicy::Optimized;
  /// Base points x >= 2 are drawn deterministically from this seed, fresh per
  /// prime and per repoint.
  std::uint64_t basePointSeed = 1;
  /// Variable ceiling for dense/oracle assistance (hybrid mode needs it).
  int denseCap = kDefaultDenseCap;
  ZeroStrategy zeroStrategy = ZeroStrategy::Repoint;
  /// Default schedule per pipeline: 3 repoints, then 1 reprime, then give up.
  int repointBudget = 3;
  int reprimeBudget = 1;
  /// Extra primes to try when a certificate-extraction step gets stuck.
  int certificateBudget = 3;
  /// Carried in reports only; no semantics are asserted for these two.
  double perStepError = 0.01;
  double targetErrorTotal = 0.01;
  /// Skips this many primes at the head of the schedule (certificate retries).
  int primeOffset = 0;
};

/// Shape of the combiner tree over the padded clause list: 2^levels clauses,
/// the root evaluated at doubling `levels`, multiplication-role children one
/// level lower. exponentSchedule[d] is the lowest doubling in play at depth d
/// (levels - d); the full set at depth d spans up to `levels`.
struct TreePlan {
  int paddedClauseCount = 1;
  int levels = 0;
  std::vector<int> exponentSchedule;
};

/// A multiplication-role input that evaluated to zero.
struct ZeroEvent {
  int doubling = 0;
  std::size_t rangeStart = 0;
  std::size_t rangeLength = 0;
  bool leftInput = true;
};

/// Instrumentation for one tree evaluation pass.
struct TreeStats {
  std::uint64_t leafEvaluations = 0;
  std::uint64_t combinerInvocations = 0;
  std::uint64_t singularCombiners = 0;
  std::uint64_t uniqueCombiners = 0;
  /// Combiners skipped because a child produced no value (paper mode).
  std::uint64_t blockedCombiners = 0;
  std::vector<ZeroEvent> zeroEvents;
};

/// Outcome of one prime pipeline (final attempt after any retries).
struct PrimeEvidence {
  std::uint64_t prime = 0;
  std::uint64_t basePoint = 0;
  /// Root diagonal value; absent when paper-mode singularity blocked the tree.
  std::optional<std::uint64_t> rootValue;
  TreeStats stats;
  int repoints = 0;
  int reprimes = 0;
  bool extraVariables = false;
  /// True when the final attempt still saw zero multiplication inputs.
  bool zeroEventUnresolved = false;
};

struct Decision {
  Verdict verdict = Verdict::Indeterminate;
  std::vector<PrimeEvidence> evidence;
  /// (1/p_min)^P across the pipelines that ran.
  double errorBound = 0.0;
};

/// Prime sizing for an n-clause, V-variable instance (n, V >= 1).
Prime choose_prime(int n, int V, PrimePolicy policy);

/// Pads the clause list to the next power of two with flagged tautologies.
/// With extraVariables the space first widens to 2V and one fresh-variable
/// unit clause is appended, so zeros can be dodged without changing
/// satisfiability over the original variables.
std::pair<Formula, TreePlan> pad_formula(const Formula& f,
                                         bool extraVariables = false);

/// Evaluates the conjunction polynomial of the padded clause list at
/// x^(2^doubling) through the combiner tree: a leaf is one scalar clause
/// evaluation, an internal node combines its halves' multiplication-role
/// values (doubling-1) and addition-role values (doubling) through the
/// two-clause elimination. Recursion is deliberately unmemoized so
/// stats.leafEvaluations counts the full 4^levels. Returns nothing when a
/// paper-mode singularity blocks the root. Requires doubling >= the range's
/// depth and (in hybrid mode) V <= cfg.denseCap.
std::optional<FieldElement> evaluate_tree(const Formula& padded, FieldElement x,
                                          int doubling, const SolverConfig& cfg,
                                          TreeStats& stats);

/// Runs P prime pipelines and aggregates: Satisfiable on any nonzero root
/// value (structurally sound: the root value is the model-set polynomial at a
/// nonzero point), LikelyUnsatisfiable when some pipeline finished zero with
/// no unresolved zero events, Indeterminate otherwise.
Decision decide(const Formula& f, const SolverConfig& cfg = {});

struct CertificateResult {
  std::optional<Assignment> assignment;
  std::string failure;  // set when assignment is absent
  int primeRetries = 0;
};

/// Fixes variables one at a time (true first, then false), re-deciding the
/// simplified formula; a stuck step retries on later primes up to
/// cfg.certificateBudget. No backtracking over earlier choices. The returned
/// assignment is always verified against every clause. Requires decide(f) to
/// have been Satisfiable.
CertificateResult extract_certificate(const Formula& f,
                                      const SolverConfig& cfg = {});

enum class RetryAction { NewBasePoint, NextPrime, ExtraVariables, GiveUp };

struct RetryBudget {
  int repointsUsed = 0;
  int reprimesUsed = 0;
  bool extraVariablesUsed = false;
};

/// Which remedy a pipeline applies after observing an unresolved zero
/// multiplication input, given what it already spent.
RetryAction zero_input_policy(const SolverConfig& cfg, const RetryBudget& used);

}  // namespace cpsat
