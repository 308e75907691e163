#include "cpsat/cli.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "json.hpp"

#include "cpsat/clausepoly.hpp"
#include "cpsat/errors.hpp"
#include "cpsat/oracle.hpp"
#include "cpsat/twoclause.hpp"

namespace cpsat::cli {

namespace {

using nlohmann::ordered_json;

const char* mode_name(SolveMode m) {
  return m == SolveMode::Paper ? "paper" : "hybrid";
}

const char* policy_name(PrimePolicy p) {
  return p == PrimePolicy::Walkthrough ? "walkthrough" : "optimized";
}

const char* strategy_name(ZeroStrategy z) {
  switch (z) {
    case ZeroStrategy::Repoint: return "repoint";
    case ZeroStrategy::Reprime: return "reprime";
    case ZeroStrategy::ExtraVariables: return "extra-variables";
  }
  return "repoint";
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Satisfiable: return kExitSat;
    case Verdict::LikelyUnsatisfiable: return kExitLikelyUnsat;
    case Verdict::Indeterminate: return kExitIndeterminate;
  }
  return kExitIndeterminate;
}

ordered_json evidence_json(const PrimeEvidence& ev) {
  ordered_json j;
  j["prime"] = ev.prime;
  j["basePoint"] = ev.basePoint;
  if (ev.rootValue) {
    j["rootValue"] = *ev.rootValue;
  } else {
    j["rootValue"] = nullptr;
  }
  j["leafEvaluations"] = ev.stats.leafEvaluations;
  j["combinerInvocations"] = ev.stats.combinerInvocations;
  j["uniqueCombiners"] = ev.stats.uniqueCombiners;
  j["singularCombiners"] = ev.stats.singularCombiners;
  j["blockedCombiners"] = ev.stats.blockedCombiners;
  j["zeroEvents"] = ev.stats.zeroEvents.size();
  j["zeroEventUnresolved"] = ev.zeroEventUnresolved;
  j["repoints"] = ev.repoints;
  j["reprimes"] = ev.reprimes;
  j["extraVariables"] = ev.extraVariables;
  return j;
}

}  // namespace

int cmd_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.primes < 1) {
    err << "--primes must be at least 1\n";
    return kExitUsage;
  }
  std::ifstream file(opt.path);
  if (!file) {
    err << "cannot open " << opt.path << "\n";
    return kExitUsage;
  }
  Formula f;
  try {
    f = parse_dimacs(file);
  } catch (const ParseError& e) {
    err << opt.path << ": " << e.what() << "\n";
    return kExitUsage;
  }

  SolverConfig cfg;
  cfg.mode = opt.mode;
  cfg.primeCount = opt.primes;
  cfg.basePointSeed = opt.seed;
  cfg.primePolicy = opt.primePolicy;
  cfg.zeroStrategy = opt.zeroStrategy;

  const auto start = std::chrono::steady_clock::now();
  Decision decision;
  try {
    decision = decide(f, cfg);
  } catch (const CapExceeded& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  CertificateResult certificate;
  if (decision.verdict == Verdict::Satisfiable && !opt.noCertificate) {
    certificate = extract_certificate(f, cfg);
  }
  const double wallMs = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();

  ordered_json report;
  report["schemaVersion"] = 1;
  report["instance"] = {
      {"path", opt.path}, {"variables", f.V}, {"clauses", f.n()}};
  report["verdict"] = to_string(decision.verdict);
  if (certificate.assignment) {
    report["certificate"] = certificate.assignment->values;
  } else {
    report["certificate"] = nullptr;
    if (!certificate.failure.empty()) {
      report["certificateFailure"] = certificate.failure;
    }
  }
  report["errorBound"] = decision.errorBound;
  report["wallTimeMs"] = wallMs;
  report["evidence"] = ordered_json::array();
  for (const PrimeEvidence& ev : decision.evidence) {
    report["evidence"].push_back(evidence_json(ev));
  }
  if (opt.withOracle) {
    try {
      const std::uint64_t models = model_count(f, cfg.denseCap);
      report["oracle"] = {
          {"verdict", models > 0 ? "satisfiable" : "unsatisfiable"},
          {"modelCount", models}};
    } catch (const CapExceeded& e) {
      err << "oracle skipped: " << e.what() << "\n";
      report["oracle"] = nullptr;
    }
  } else {
    report["oracle"] = nullptr;
  }
  report["config"] = {{"mode", mode_name(cfg.mode)},
                      {"primeCount", cfg.primeCount},
                      {"primePolicy", policy_name(cfg.primePolicy)},
                      {"basePointSeed", cfg.basePointSeed},
                      {"zeroStrategy", strategy_name(cfg.zeroStrategy)},
                      {"denseCap", cfg.denseCap},
                      {"repointBudget", cfg.repointBudget},
                      {"reprimeBudget", cfg.reprimeBudget}};
  out << report.dump(2) << "\n";
  return verdict_exit(decision.verdict);
}

int cmd_walkthrough(const WalkthroughOptions& opt, std::ostream& out,
                    std::ostream& err) {
  struct Row {
    std::string name;
    std::uint64_t computed;
    std::uint64_t expected;
  };
  std::vector<Row> rows;
  const auto add = [&rows](const std::string& name, FieldElement computed,
                           std::uint64_t expected) {
    rows.push_back(Row{name, computed.residue(), expected});
  };

  const Prime p17(17);
  const Prime p7(7);
  const int V = 2;
  const FieldElement x3(3, p17);
  const FieldElement x9 = x3 * x3;
  const Clause clauseA = parse_clause_spec("x0");
  const Clause clauseB = parse_clause_spec("~x0|x1");
  const Clause clauseC = parse_clause_spec("x1");

  add("f(x0) at x=3 mod 17", eval_clause_at(clauseA, V, x3).value, 13);
  add("f(~x0|x1) at x=3 mod 17", eval_clause_at(clauseB, V, x3).value, 3);
  add("f(x1) at x=3 mod 17", eval_clause_at(clauseC, V, x3).value, 2);

  const FieldElement ones3 = ones_at(V, x3);
  const FieldElement ones9 = ones_at(V, x9);
  add("allOnes at x=3 mod 17", ones3, 6);
  add("allOnes at x=9 mod 17", ones9, 4);
  const FieldElement total = off_diagonal_total(ones3, ones9);
  add("offDiagonalTotal at x=3 mod 17", total, 15);

  const MarkerPair mp3 =
      match_marker_pair(FieldElement(2, p17), FieldElement(3, p17));
  const MarkerPair mp4 =
      match_marker_pair(FieldElement(2, p17), FieldElement(4, p17));
  const MarkerPair mp5 =
      match_marker_pair(FieldElement(2, p17), FieldElement(5, p17));
  add("marker c0 for (2,3) mod 17", mp3.c0, 13);
  add("marker d for (2,3) mod 17", mp3.d, 14);
  add("marker e for (2,3) mod 17", mp3.e, 15);
  add("marker c0 for (2,4) mod 17", mp4.c0, 8);
  add("marker d for (2,4) mod 17", mp4.d, 9);
  add("marker e for (2,4) mod 17", mp4.e, 11);
  add("marker c0 for (2,5) mod 17", mp5.c0, 1);
  add("marker d for (2,5) mod 17", mp5.d, 2);
  add("marker e for (2,5) mod 17", mp5.e, 5);

  const MarkerPair mp7 =
      match_marker_pair(FieldElement(2, p7), FieldElement(3, p7));
  add("weight w0 for (2,3) mod 7", mp7.d, 4);
  add("weight w1 for (2,3) mod 7", mp7.d + mp7.e, 2);
  add("weight w2 for (2,3) mod 7", mp7.d + mp7.e + mp7.e, 0);

  add("secondDifference(13,2) mod 17",
      second_difference(FieldElement(13, p17), FieldElement(2, p17)), 13);

  const DensePoly fA = clause_poly(clauseA, V, p17);
  const DensePoly fB = clause_poly(clauseB, V, p17);
  const FieldElement fA3 = poly_eval(fA, x3);
  const FieldElement fB3 = poly_eval(fB, x3);
  const FieldElement fA9 = poly_eval(fA, x9);
  const FieldElement fB9 = poly_eval(fB, x9);
  const PairEquation eq1 =
      eliminated_evaluation(fA3, fB3, fA9, fB9, ones3, ones9, mp3);
  const PairEquation eq2 =
      eliminated_evaluation(fA3, fB3, fA9, fB9, ones3, ones9, mp4);
  add("pairEquation rhs for (2,3) mod 17", eq1.rhs, 5);

  const auto b = exact_b_values(fA, fB, x3);
  add("offDiagonal b0 at x=3 mod 17", b[0], 13);
  add("offDiagonal b1 at x=3 mod 17", b[1], 12);
  add("offDiagonal b2 at x=3 mod 17", b[2], 7);
  add("weighted b-sum for (2,3) mod 17",
      eq1.w[0] * b[0] + eq1.w[1] * b[1] + eq1.w[2] * b[2], 5);

  const SatisfactionSplit split = solve_two_clause(eq1, eq2, total);
  add("eliminationResidual u at x=3 mod 17", split.u, 9);
  add("oracle b1+2*b2 at x=3 mod 17", b[1] + b[2] + b[2], 9);

  add("diagonal product minus b2 at x=3 mod 17",
      diagonal_value(fA3, fB3, b[2]), 15);
  add("conjunction value at x=9 mod 17", poly_eval(hadamard_diag(fA, fB), x3),
      15);

  if (!opt.expectFile.empty()) {
    std::ifstream expect(opt.expectFile);
    if (!expect) {
      err << "cannot open " << opt.expectFile << "\n";
      return kExitUsage;
    }
    std::string line;
    int lineNo = 0;
    while (std::getline(expect, line)) {
      ++lineNo;
      if (line.empty() || line[0] == '#') continue;
      const auto tab = line.find('\t');
      if (tab == std::string::npos) {
        err << opt.expectFile << ": line " << lineNo << ": expected name<TAB>value\n";
        return kExitUsage;
      }
      const std::string name = line.substr(0, tab);
      std::uint64_t value = 0;
      try {
        value = std::stoull(line.substr(tab + 1));
      } catch (const std::exception&) {
        err << opt.expectFile << ": line " << lineNo << ": bad value\n";
        return kExitUsage;
      }
      bool known = false;
      for (Row& row : rows) {
        if (row.name == name) {
          row.expected = value;
          known = true;
          break;
        }
      }
      if (!known) {
        err << opt.expectFile << ": line " << lineNo << ": unknown row '" << name
            << "'\n";
        return kExitUsage;
      }
    }
  }

  int failures = 0;
  for (const Row& row : rows) {
    const bool ok = row.computed == row.expected;
    failures += ok ? 0 : 1;
    out << (ok ? "PASS" : "FAIL") << " " << row.name
        << ": computed=" << row.computed << " expected=" << row.expected
        << "\n";
  }
  out << "walkthrough: " << rows.size() << " rows, " << failures
      << " failures\n";
  return failures == 0 ? kExitInfo : kExitMismatch;
}

namespace {

struct TrialRow {
  std::uint64_t seed = 0;
  Verdict verdict = Verdict::Indeterminate;
  bool oracleSat = false;
  std::uint64_t singularCount = 0;
  std::uint64_t zeroEvents = 0;
  std::uint64_t pMin = 0;
  std::string error;
};

TrialRow run_trial(std::uint64_t seed, const ValidateOptions& opt) {
  TrialRow row;
  row.seed = seed;
  try {
    const Formula f = random_ksat(opt.vars, opt.clauses, opt.k, seed);
    SolverConfig cfg;
    cfg.mode = opt.mode;
    cfg.primeCount = opt.primes;
    cfg.basePointSeed = seed;
    const Decision d = decide(f, cfg);
    row.verdict = d.verdict;
    row.pMin = d.evidence.front().prime;
    for (const PrimeEvidence& ev : d.evidence) {
      row.pMin = std::min(row.pMin, ev.prime);
      row.singularCount += ev.stats.singularCombiners;
      row.zeroEvents += ev.stats.zeroEvents.size();
    }
    row.oracleSat = model_count(f) > 0;
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

}  // namespace

int cmd_validate(const ValidateOptions& opt, std::ostream& out,
                 std::ostream& err) {
  if (opt.vars < 1 || opt.clauses < 1 || opt.trials < 1 || opt.k < 1 ||
      opt.k > opt.vars || opt.primes < 1 || opt.threads < 0) {
    err << "validate needs vars,clauses,trials,primes >= 1 and 1 <= k <= vars\n";
    return kExitUsage;
  }
  if (opt.vars > kDefaultDenseCap) {
    err << "the exhaustive oracle is capped at " << kDefaultDenseCap
        << " variables\n";
    return kExitUsage;
  }

  std::mt19937_64 master(opt.seed);
  std::vector<std::uint64_t> seeds(static_cast<std::size_t>(opt.trials));
  for (auto& s : seeds) s = master();

  std::vector<TrialRow> rows(seeds.size());
  std::atomic<std::size_t> nextIndex{0};
  const auto worker = [&]() {
    for (;;) {
      const std::size_t i = nextIndex.fetch_add(1);
      if (i >= seeds.size()) break;
      rows[i] = run_trial(seeds[i], opt);
    }
  };
  unsigned threadCount = opt.threads > 0
                             ? static_cast<unsigned>(opt.threads)
                             : std::thread::hardware_concurrency();
  threadCount = std::max(1u, std::min<unsigned>(threadCount, seeds.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threadCount; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  for (const TrialRow& row : rows) {
    if (!row.error.empty()) {
      err << "trial with seed " << row.seed << " failed: " << row.error << "\n";
      return kExitUsage;
    }
  }

  out << "seed,V,n,verdict,oracleVerdict,falseNeg,falsePos,singularCount,"
         "zeroEvents\n";
  std::uint64_t oracleSatCount = 0, falseNegatives = 0, falsePositives = 0,
                indeterminate = 0, singularInstances = 0;
  std::uint64_t pMin = 0;
  for (const TrialRow& row : rows) {
    const bool falseNeg =
        row.verdict == Verdict::LikelyUnsatisfiable && row.oracleSat;
    const bool falsePos = row.verdict == Verdict::Satisfiable && !row.oracleSat;
    oracleSatCount += row.oracleSat ? 1 : 0;
    falseNegatives += falseNeg ? 1 : 0;
    falsePositives += falsePos ? 1 : 0;
    indeterminate += row.verdict == Verdict::Indeterminate ? 1 : 0;
    singularInstances += row.singularCount > 0 ? 1 : 0;
    pMin = pMin == 0 ? row.pMin : std::min(pMin, row.pMin);
    out << row.seed << "," << opt.vars << "," << opt.clauses << ","
        << to_string(row.verdict) << ","
        << (row.oracleSat ? "satisfiable" : "unsatisfiable") << ","
        << (falseNeg ? 1 : 0) << "," << (falsePos ? 1 : 0) << ","
        << row.singularCount << "," << row.zeroEvents << "\n";
  }

  const double falseNegativeRate =
      oracleSatCount > 0
          ? static_cast<double>(falseNegatives) / static_cast<double>(oracleSatCount)
          : 0.0;
  const double schwartzBound = std::pow(
      std::ldexp(1.0, opt.vars) / static_cast<double>(pMin), opt.primes);
  ordered_json summary;
  summary["trials"] = opt.trials;
  summary["satisfiable"] = oracleSatCount;
  summary["falsePositives"] = falsePositives;
  summary["falseNegatives"] = falseNegatives;
  summary["falseNegativeRate"] = falseNegativeRate;
  summary["indeterminate"] = indeterminate;
  summary["singularInstanceRate"] =
      static_cast<double>(singularInstances) / static_cast<double>(opt.trials);
  summary["pMin"] = pMin;
  summary["schwartzBound"] = schwartzBound;
  summary["boundRatio"] =
      schwartzBound > 0.0 ? falseNegativeRate / schwartzBound : 0.0;
  summary["mode"] = mode_name(opt.mode);
  if (opt.mode == SolveMode::Paper) {
    summary["note"] =
        "scalar-only pipeline: every pairwise elimination is singular, so the "
        "matched-power mass b2 stays undetermined and multi-clause instances "
        "come back indeterminate";
  }
  err << summary.dump(2) << "\n";
  if (!opt.summaryPath.empty()) {
    std::ofstream summaryFile(opt.summaryPath);
    if (!summaryFile) {
      err << "cannot write " << opt.summaryPath << "\n";
      return kExitUsage;
    }
    summaryFile << summary.dump(2) << "\n";
  }
  return kExitInfo;
}

int cmd_patterns(const PatternsOptions& opt, std::ostream& out,
                 std::ostream& err) {
  std::vector<Clause> clauses;
  clauses.reserve(opt.specs.size());
  try {
    for (const std::string& spec : opt.specs) {
      clauses.push_back(parse_clause_spec(spec));
    }
    out << pattern_table(clauses, opt.vars);
  } catch (const ContractViolation& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }
  return kExitInfo;
}

int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.ladder.empty() || opt.vars < 1 || opt.k < 1 || opt.k > opt.vars ||
      opt.primes < 1) {
    err << "bench needs a non-empty ladder, primes >= 1 and 1 <= k <= vars\n";
    return kExitUsage;
  }
  for (const int n : opt.ladder) {
    if (n < 1) {
      err << "ladder entries must be >= 1\n";
      return kExitUsage;
    }
  }

  out << "n,V,P,leafEvaluations,wallTimeMs\n";
  std::vector<double> logN, logLeaf;
  for (const int n : opt.ladder) {
    const Formula f =
        random_ksat(opt.vars, n, opt.k, opt.seed + static_cast<std::uint64_t>(n));
    SolverConfig cfg;
    cfg.primeCount = opt.primes;
    cfg.basePointSeed = opt.seed;
    const auto start = std::chrono::steady_clock::now();
    const Decision d = decide(f, cfg);
    const double wallMs = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();
    const std::uint64_t leaves = d.evidence.front().stats.leafEvaluations;
    out << n << "," << opt.vars << "," << opt.primes << "," << leaves << ","
        << std::fixed << std::setprecision(3) << wallMs << "\n";
    logN.push_back(std::log(static_cast<double>(n)));
    logLeaf.push_back(std::log(static_cast<double>(leaves)));
  }

  double slope = 0.0;
  if (logN.size() >= 2) {
    const double count = static_cast<double>(logN.size());
    double sumX = 0.0, sumY = 0.0, sumXY = 0.0, sumXX = 0.0;
    for (std::size_t i = 0; i < logN.size(); ++i) {
      sumX += logN[i];
      sumY += logLeaf[i];
      sumXY += logN[i] * logLeaf[i];
      sumXX += logN[i] * logN[i];
    }
    const double denom = count * sumXX - sumX * sumX;
    slope = denom != 0.0 ? (count * sumXY - sumX * sumY) / denom : 0.0;
  }
  out << "# loglogSlopeLeafVsN=" << std::fixed << std::setprecision(4) << slope
      << "\n";
  return kExitInfo;
}

}  // namespace cpsat::cli

// CLI11 wiring lives below the command implementations so the commands stay
// usable as a library without dragging the parser into every consumer.
#include "CLI11.hpp"

namespace cpsat::cli {

namespace {

SolveMode parse_mode(const std::string& s) {
  return s == "paper" ? SolveMode::Paper : SolveMode::Hybrid;
}

PrimePolicy parse_policy(const std::string& s) {
  return s == "walkthrough" ? PrimePolicy::Walkthrough : PrimePolicy::Optimized;
}

ZeroStrategy parse_strategy(const std::string& s) {
  if (s == "reprime") return ZeroStrategy::Reprime;
  if (s == "extra-variables") return ZeroStrategy::ExtraVariables;
  return ZeroStrategy::Repoint;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"finite-field clause-polynomial satisfiability toolkit"};
  app.require_subcommand(1);

  SolveOptions solveOpt;
  std::string solveMode = "hybrid";
  std::string solvePolicy = "optimized";
  std::string solveStrategy = "repoint";
  CLI::App* solve =
      app.add_subcommand("solve", "decide a DIMACS CNF file, print a JSON report");
  solve->add_option("file", solveOpt.path, "DIMACS CNF input")->required();
  solve->add_option("--mode", solveMode, "hybrid|paper")
      ->check(CLI::IsMember({"hybrid", "paper"}))
      ->envname("CPSAT_MODE");
  solve->add_option("--primes", solveOpt.primes, "independent prime pipelines")
      ->envname("CPSAT_PRIMES");
  solve->add_option("--seed", solveOpt.seed, "base-point seed")
      ->envname("CPSAT_SEED");
  solve->add_option("--prime-policy", solvePolicy, "walkthrough|optimized")
      ->check(CLI::IsMember({"walkthrough", "optimized"}))
      ->envname("CPSAT_PRIME_POLICY");
  solve
      ->add_option("--zero-strategy", solveStrategy,
                   "repoint|reprime|extra-variables")
      ->check(CLI::IsMember({"repoint", "reprime", "extra-variables"}))
      ->envname("CPSAT_ZERO_STRATEGY");
  solve->add_flag("--with-oracle", solveOpt.withOracle,
                  "also run the exhaustive enumeration oracle");
  solve->add_flag("--no-certificate", solveOpt.noCertificate,
                  "skip certificate extraction on satisfiable instances");

  WalkthroughOptions walkOpt;
  CLI::App* walk = app.add_subcommand(
      "walkthrough", "recompute the pinned small-instance identity table");
  walk->add_option("--expect-file", walkOpt.expectFile)->group("");

  ValidateOptions valOpt;
  std::string valMode = "hybrid";
  CLI::App* validate = app.add_subcommand(
      "validate", "seeded random trials against the exhaustive oracle");
  validate->add_option("--vars", valOpt.vars, "variables per instance")
      ->envname("CPSAT_VARS");
  validate->add_option("--clauses", valOpt.clauses, "clauses per instance")
      ->envname("CPSAT_CLAUSES");
  validate->add_option("--k", valOpt.k, "literals per clause");
  validate->add_option("--trials", valOpt.trials, "number of instances")
      ->envname("CPSAT_TRIALS");
  validate->add_option("--seed", valOpt.seed, "master seed")
      ->envname("CPSAT_SEED");
  validate->add_option("--mode", valMode, "hybrid|paper")
      ->check(CLI::IsMember({"hybrid", "paper"}))
      ->envname("CPSAT_MODE");
  validate->add_option("--primes", valOpt.primes, "independent prime pipelines")
      ->envname("CPSAT_PRIMES");
  validate->add_option("--summary", valOpt.summaryPath,
                       "also write the JSON summary to this file");
  validate->add_option("--threads", valOpt.threads, "worker threads (0 = auto)");

  PatternsOptions patOpt;
  CLI::App* patterns = app.add_subcommand(
      "patterns", "print the satisfaction pattern table for clause specs");
  patterns->add_option("--vars", patOpt.vars, "variable-space size")->required();
  patterns->add_option("specs", patOpt.specs, "clause specs like x0|~x1, T, F")
      ->required();

  BenchOptions benchOpt;
  std::string ladder = "4,8,16,32";
  CLI::App* bench = app.add_subcommand(
      "bench", "leaf-evaluation scaling along a clause-count ladder");
  bench->add_option("--ladder", ladder, "comma-separated clause counts");
  bench->add_option("--vars", benchOpt.vars, "variables per instance");
  bench->add_option("--k", benchOpt.k, "literals per clause");
  bench->add_option("--primes", benchOpt.primes, "independent prime pipelines");
  bench->add_option("--seed", benchOpt.seed, "instance/base-point seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitInfo;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitInfo;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  if (*solve) {
    solveOpt.mode = parse_mode(solveMode);
    solveOpt.primePolicy = parse_policy(solvePolicy);
    solveOpt.zeroStrategy = parse_strategy(solveStrategy);
    return cmd_solve(solveOpt, out, err);
  }
  if (*walk) return cmd_walkthrough(walkOpt, out, err);
  if (*validate) {
    valOpt.mode = parse_mode(valMode);
    return cmd_validate(valOpt, out, err);
  }
  if (*patterns) return cmd_patterns(patOpt, out, err);
  if (*bench) {
    benchOpt.ladder.clear();
    std::istringstream parts(ladder);
    std::string token;
    while (std::getline(parts, token, ',')) {
      try {
        benchOpt.ladder.push_back(std::stoi(token));
      } catch (const std::exception&) {
        err << "bad ladder entry '" << token << "'\n";
        return kExitUsage;
      }
    }
    return cmd_bench(benchOpt, out, err);
  }
  return kExitUsage;
}

}  // namespace cpsat::cli
