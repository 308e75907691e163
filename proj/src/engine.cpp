#include "cpsat/engine.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "cpsat/rng.hpp"
#include "cpsat/twoclause.hpp"

namespace cpsat {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Satisfiable: return "satisfiable";
    case Verdict::LikelyUnsatisfiable: return "likely-unsatisfiable";
    case Verdict::Indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

Prime choose_prime(int n, int V, PrimePolicy policy) {
  if (n < 1 || V < 1) {
    throw ContractViolation("prime sizing needs n >= 1 and V >= 1");
  }
  const std::uint64_t walkthrough = std::uint64_t(2 * n) * std::uint64_t(2 * n);
  if (policy == PrimePolicy::Walkthrough) return next_prime(walkthrough);
  const std::uint64_t sum = std::uint64_t(n) + std::uint64_t(V);
  const std::uint64_t optimized = std::uint64_t(V) * sum * sum;
  return next_prime(std::max(walkthrough, optimized));
}

std::pair<Formula, TreePlan> pad_formula(const Formula& f, bool extraVariables) {
  if (f.n() < 1) {
    throw ContractViolation("padding needs at least one clause");
  }
  Formula padded = f;
  if (extraVariables) {
    if (f.V < 1) {
      throw ContractViolation("widening needs at least one variable");
    }
    padded.V = 2 * f.V;
    // The fresh-variable equation: satisfiable independently of the original
    // variables, so the conjunction's models project onto the original ones.
    padded.clauses.emplace_back(std::vector<Literal>{Literal{f.V, false}});
  }
  TreePlan plan;
  plan.levels = 0;
  while ((1 << plan.levels) < padded.n()) ++plan.levels;
  plan.paddedClauseCount = 1 << plan.levels;
  while (padded.n() < plan.paddedClauseCount) {
    padded.clauses.push_back(Clause::tautology());
  }
  plan.exponentSchedule.resize(plan.levels + 1);
  for (int depth = 0; depth <= plan.levels; ++depth) {
    plan.exponentSchedule[depth] = plan.levels - depth;
  }
  return {std::move(padded), plan};
}

RetryAction zero_input_policy(const SolverConfig& cfg, const RetryBudget& used) {
  const bool repointLeft = used.repointsUsed < cfg.repointBudget;
  const bool reprimeLeft = used.reprimesUsed < cfg.reprimeBudget;
  switch (cfg.zeroStrategy) {
    case ZeroStrategy::Repoint:
      if (repointLeft) return RetryAction::NewBasePoint;
      if (reprimeLeft) return RetryAction::NextPrime;
      return RetryAction::GiveUp;
    case ZeroStrategy::Reprime:
      if (reprimeLeft) return RetryAction::NextPrime;
      return RetryAction::GiveUp;
    case ZeroStrategy::ExtraVariables:
      if (!used.extraVariablesUsed) return RetryAction::ExtraVariables;
      if (repointLeft) return RetryAction::NewBasePoint;
      if (reprimeLeft) return RetryAction::NextPrime;
      return RetryAction::GiveUp;
  }
  return RetryAction::GiveUp;
}

namespace {

/// 0/1 satisfaction indicators per clause range, shared by every pipeline of
/// one decide() run; ranges and their conjunctions do not depend on the prime.
class RangeIndicators {
 public:
  explicit RangeIndicators(const Formula& padded) : formula_(&padded) {
    // Paper mode constructs but never consults this; avoid the shift blowing
    // up on wide variable spaces it will never enumerate.
    words_ = padded.V <= kDenseVariableLimit
                 ? ((std::size_t{1} << padded.V) + 63) / 64
                 : 0;
  }

  const std::vector<std::uint64_t>& get(std::size_t start, std::size_t length) {
    const auto key = std::make_pair(start, length);
    auto found = cache_.find(key);
    if (found != cache_.end()) return found->second;

    std::vector<std::uint64_t> bits(words_, 0);
    if (length == 1) {
      const Clause& c = formula_->clauses[start];
      const std::size_t span = std::size_t{1} << formula_->V;
      for (std::size_t t = 0; t < span; ++t) {
        if (c.satisfiedBy(t)) bits[t / 64] |= std::uint64_t{1} << (t % 64);
      }
    } else {
      const auto& left = get(start, length / 2);
      const auto& right = get(start + length / 2, length / 2);
      for (std::size_t w = 0; w < words_; ++w) bits[w] = left[w] & right[w];
    }
    return cache_.emplace(key, std::move(bits)).first->second;
  }

  /// sum over t with both indicator bits set of y^(2t): the conjunction's
  /// diagonal mass, one multiplication per slot (word-skipping when empty).
  FieldElement diagonal(std::size_t startA, std::size_t startB,
                        std::size_t length, FieldElement y) {
    const auto& a = get(startA, length);
    const auto& b = get(startB, length);
    const Prime p(y.modulus());
    const FieldElement ySquared = y * y;
    const FieldElement jump = ff_pow(ySquared, 64);
    FieldElement total(0, p);
    FieldElement power(1, p);  // y^(2t)
    const std::size_t span = std::size_t{1} << formula_->V;
    for (std::size_t w = 0; w < words_; ++w) {
      const std::uint64_t both = a[w] & b[w];
      if (both == 0) {
        power = power * jump;
        continue;
      }
      for (std::size_t bit = 0; bit < 64 && w * 64 + bit < span; ++bit) {
        if ((both >> bit) & 1) total = total + power;
        power = power * ySquared;
      }
      for (std::size_t bit = span > w * 64 ? span - w * 64 : 0; bit < 64; ++bit) {
        power = power * ySquared;
      }
    }
    return total;
  }

 private:
  const Formula* formula_;
  std::size_t words_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::uint64_t>> cache_;
};

struct EvalContext {
  const Formula* padded = nullptr;
  SolveMode mode = SolveMode::Hybrid;
  RangeIndicators* indicators = nullptr;  // hybrid only
  std::vector<FieldElement> pointAt;      // x^(2^j) for j = 0..maxDoubling
  TreeStats* stats = nullptr;
};

std::optional<FieldElement> eval_range(EvalContext& ctx, std::size_t start,
                                       std::size_t length, int k) {
  if (length == 1) {
    ++ctx.stats->leafEvaluations;
    return eval_clause_at(ctx.padded->clauses[start], ctx.padded->V,
                          ctx.pointAt[k]).value;
  }

  const std::size_t half = length / 2;
  const auto mA = eval_range(ctx, start, half, k - 1);
  const auto mB = eval_range(ctx, start + half, half, k - 1);
  const auto aA = eval_range(ctx, start, half, k);
  const auto aB = eval_range(ctx, start + half, half, k);

  ++ctx.stats->combinerInvocations;
  if (!mA || !mB || !aA || !aB) {
    ++ctx.stats->blockedCombiners;
    return std::nullopt;
  }
  if (mA->isZero()) {
    ctx.stats->zeroEvents.push_back(ZeroEvent{k - 1, start, half, true});
  }
  if (mB->isZero()) {
    ctx.stats->zeroEvents.push_back(ZeroEvent{k - 1, start + half, half, false});
  }

  const Prime p(mA->modulus());
  const FieldElement y = ctx.pointAt[k - 1];
  const FieldElement ySquared = ctx.pointAt[k];
  const FieldElement onesY = ones_at(ctx.padded->V, y);
  const FieldElement onesY2 = ones_at(ctx.padded->V, ySquared);

  const MarkerPair mp1 = match_marker_pair(FieldElement(2, p), FieldElement(3, p));
  const MarkerPair mp2 = match_marker_pair(FieldElement(2, p), FieldElement(4, p));
  const PairEquation eq1 =
      eliminated_evaluation(*mA, *mB, *aA, *aB, onesY, onesY2, mp1);
  const PairEquation eq2 =
      eliminated_evaluation(*mA, *mB, *aA, *aB, onesY, onesY2, mp2);
  const FieldElement total = off_diagonal_total(onesY, onesY2);
  const SatisfactionSplit split = solve_two_clause(eq1, eq2, total);

  if (split.status == SplitStatus::Unique) {
    ++ctx.stats->uniqueCombiners;
  } else {
    ++ctx.stats->singularCombiners;
  }

  if (ctx.mode == SolveMode::Paper) {
    if (split.status != SplitStatus::Unique) return std::nullopt;
    return diagonal_value(*mA, *mB, *split.b2);
  }

  // Hybrid: b2 from the oracle decomposition fA(y)*fB(y) = diagonal + b2.
  const FieldElement diag = ctx.indicators->diagonal(start, start + half, half, y);
  const FieldElement b2 = (*mA) * (*mB) - diag;
  return diagonal_value(*mA, *mB, b2);
}

int range_depth(std::size_t length) {
  int depth = 0;
  while ((std::size_t{1} << depth) < length) ++depth;
  return depth;
}

void validate_config(const SolverConfig& cfg) {
  if (cfg.primeCount < 1) throw ContractViolation("primeCount must be >= 1");
  if (cfg.perStepError <= 0.0 || cfg.perStepError >= 1.0 ||
      cfg.targetErrorTotal <= 0.0 || cfg.targetErrorTotal >= 1.0) {
    throw ContractViolation("error-rate knobs must lie in (0, 1)");
  }
  if (cfg.repointBudget < 0 || cfg.reprimeBudget < 0 ||
      cfg.certificateBudget < 0 || cfg.primeOffset < 0) {
    throw ContractViolation("budgets cannot be negative");
  }
}

std::vector<FieldElement> doubling_points(FieldElement x, int maxDoubling) {
  std::vector<FieldElement> points;
  points.reserve(maxDoubling + 1);
  points.push_back(x);
  for (int j = 1; j <= maxDoubling; ++j) {
    points.push_back(points.back() * points.back());
  }
  return points;
}

int hybrid_cap(const SolverConfig& cfg) {
  return std::min(cfg.denseCap, kDenseVariableLimit);
}

}  // namespace

std::optional<FieldElement> evaluate_tree(const Formula& padded, FieldElement x,
                                          int doubling, const SolverConfig& cfg,
                                          TreeStats& stats) {
  if (padded.n() < 1 || (padded.n() & (padded.n() - 1)) != 0) {
    throw ContractViolation("tree evaluation requires a power-of-two clause count");
  }
  const int depth = range_depth(padded.n());
  if (doubling < depth) {
    throw ContractViolation("doubling level " + std::to_string(doubling) +
                            " is below the tree depth " + std::to_string(depth));
  }
  RangeIndicators indicators(padded);
  EvalContext ctx;
  ctx.padded = &padded;
  ctx.mode = cfg.mode;
  if (cfg.mode == SolveMode::Hybrid) {
    if (padded.V > hybrid_cap(cfg)) {
      throw CapExceeded("hybrid oracle assistance needs V <= " +
                        std::to_string(hybrid_cap(cfg)) + ", got " +
                        std::to_string(padded.V));
    }
    ctx.indicators = &indicators;
  }
  ctx.pointAt = doubling_points(x, doubling);
  ctx.stats = &stats;
  return eval_range(ctx, 0, padded.n(), doubling);
}

namespace {

PrimeEvidence run_pipeline(const Formula& basePadded, const TreePlan& basePlan,
                           const Formula& original, const SolverConfig& cfg,
                           Prime prime, std::uint64_t& highestPrime,
                           std::mt19937_64& rng) {
  const Formula* padded = &basePadded;
  const TreePlan* plan = &basePlan;
  // Extra-variables retries rebuild the instance; owned here when active.
  Formula widened;
  TreePlan widenedPlan;

  RetryBudget used;
  PrimeEvidence evidence;
  for (;;) {
    RangeIndicators indicators(*padded);
    EvalContext ctx;
    ctx.padded = padded;
    ctx.mode = cfg.mode;
    if (cfg.mode == SolveMode::Hybrid) ctx.indicators = &indicators;

    const std::uint64_t basePoint = 2 + uniform_below(rng, prime.value() - 2);
    const FieldElement x(basePoint, prime);
    ctx.pointAt = doubling_points(x, plan->levels);

    TreeStats stats;
    ctx.stats = &stats;
    const auto root = eval_range(ctx, 0, padded->n(), plan->levels);

    evidence.prime = prime.value();
    evidence.basePoint = basePoint;
    evidence.rootValue =
        root ? std::optional<std::uint64_t>(root->residue()) : std::nullopt;
    evidence.stats = std::move(stats);
    evidence.repoints = used.repointsUsed;
    evidence.reprimes = used.reprimesUsed;
    evidence.extraVariables = used.extraVariablesUsed;
    evidence.zeroEventUnresolved = !evidence.stats.zeroEvents.empty();

    if (!evidence.zeroEventUnresolved) return evidence;

    switch (zero_input_policy(cfg, used)) {
      case RetryAction::GiveUp:
        return evidence;
      case RetryAction::NewBasePoint:
        ++used.repointsUsed;
        break;
      case RetryAction::NextPrime:
        ++used.reprimesUsed;
        prime = next_prime(std::max(prime.value(), highestPrime));
        highestPrime = prime.value();
        break;
      case RetryAction::ExtraVariables: {
        used.extraVariablesUsed = true;
        const bool viable =
            original.V >= 1 &&
            (cfg.mode != SolveMode::Hybrid ||
             2 * original.V <= hybrid_cap(cfg)) &&
            2 * original.V <= kDenseVariableLimit;
        if (!viable) return evidence;
        auto rebuilt = pad_formula(original, /*extraVariables=*/true);
        widened = std::move(rebuilt.first);
        widenedPlan = rebuilt.second;
        padded = &widened;
        plan = &widenedPlan;
        break;
      }
    }
  }
}

}  // namespace

Decision decide(const Formula& f, const SolverConfig& cfg) {
  validate_config(cfg);

  Decision decision;
  if (f.n() == 0) {
    decision.verdict = Verdict::Satisfiable;
    return decision;
  }
  if (f.V == 0) {
    // Only flagged tautologies and empty clauses can live here.
    const bool allSatisfied =
        std::all_of(f.clauses.begin(), f.clauses.end(),
                    [](const Clause& c) { return c.tautological(); });
    decision.verdict =
        allSatisfied ? Verdict::Satisfiable : Verdict::LikelyUnsatisfiable;
    return decision;
  }
  if (cfg.mode == SolveMode::Hybrid && f.V > hybrid_cap(cfg)) {
    throw CapExceeded("hybrid oracle assistance needs V <= " +
                      std::to_string(hybrid_cap(cfg)) + ", got " +
                      std::to_string(f.V));
  }

  auto [padded, plan] = pad_formula(f);

  // Primes are sized for n + 2V clauses up front: certificate extraction can
  // append up to 2V unit constraints, and the same schedule must cover them.
  const int sizingClauses = f.n() + 2 * f.V;
  std::vector<Prime> primes;
  primes.reserve(cfg.primeCount);
  Prime prime = choose_prime(sizingClauses, f.V, cfg.primePolicy);
  for (int skip = 0; skip < cfg.primeOffset; ++skip) {
    prime = next_prime(prime.value());
  }
  primes.push_back(prime);
  for (int i = 1; i < cfg.primeCount; ++i) {
    prime = next_prime(prime.value());
    primes.push_back(prime);
  }
  std::uint64_t highestPrime = primes.back().value();

  std::mt19937_64 rng(cfg.basePointSeed);
  for (const Prime& pipelinePrime : primes) {
    decision.evidence.push_back(
        run_pipeline(padded, plan, f, cfg, pipelinePrime, highestPrime, rng));
  }

  bool anySatisfied = false;
  bool anyCleanZero = false;
  std::uint64_t minPrime = decision.evidence.front().prime;
  for (const PrimeEvidence& ev : decision.evidence) {
    minPrime = std::min(minPrime, ev.prime);
    if (ev.rootValue && *ev.rootValue != 0) anySatisfied = true;
    if (ev.rootValue && *ev.rootValue == 0 && !ev.zeroEventUnresolved) {
      anyCleanZero = true;
    }
  }
  decision.verdict = anySatisfied  ? Verdict::Satisfiable
                     : anyCleanZero ? Verdict::LikelyUnsatisfiable
                                    : Verdict::Indeterminate;
  decision.errorBound =
      std::pow(1.0 / static_cast<double>(minPrime), cfg.primeCount);
  return decision;
}

CertificateResult extract_certificate(const Formula& f, const SolverConfig& cfg) {
  validate_config(cfg);
  if (decide(f, cfg).verdict != Verdict::Satisfiable) {
    throw ContractViolation(
        "certificate extraction requires a Satisfiable decision");
  }

  CertificateResult result;
  Assignment assignment;
  assignment.values.assign(f.V, false);
  Formula current = f;

  for (int i = 0; i < f.V; ++i) {
    if (current.n() == 0) break;  // every clause satisfied; the rest is free
    bool fixed = false;
    for (int retry = 0; retry <= cfg.certificateBudget && !fixed; ++retry) {
      SolverConfig attempt = cfg;
      attempt.primeOffset = cfg.primeOffset + retry;
      if (retry > result.primeRetries) result.primeRetries = retry;
      for (const bool value : {true, false}) {
        SimplifyResult simplified = assign_and_simplify(current, 0, value);
        if (std::holds_alternative<Contradiction>(simplified)) continue;
        Formula& reduced = std::get<Formula>(simplified);
        if (reduced.n() > 0 &&
            decide(reduced, attempt).verdict != Verdict::Satisfiable) {
          continue;
        }
        assignment.values[i] = value;
        current = std::move(reduced);
        fixed = true;
        break;
      }
    }
    if (!fixed) {
      result.failure = "could not extend the partial assignment at x" +
                       std::to_string(i) +
                       " within the prime budget; satisfiability stands";
      return result;
    }
  }

  if (!satisfies(f, assignment)) {
    throw std::logic_error(
        "internal fault: extracted assignment fails verification");
  }
  result.assignment = std::move(assignment);
  return result;
}

}  // namespace cpsat
