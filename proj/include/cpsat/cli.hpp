#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cpsat/engine.hpp"

namespace cpsat::cli {

inline constexpr int kExitInfo = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;
inline constexpr int kExitSat = 10;
inline constexpr int kExitLikelyUnsat = 20;
inline constexpr int kExitIndeterminate = 30;

struct SolveOptions {
  std::string path;
  SolveMode mode = SolveMode::Hybrid;
  int primes = 1;
  std::uint64_t seed = 1;
  PrimePolicy primePolicy = PrimePolicy::Optimized;
  ZeroStrategy zeroStrategy = ZeroStrategy::Repoint;
  bool withOracle = false;
  bool noCertificate = false;
};

/// Decides a DIMACS instance and writes a JSON run report to `out`.
/// Returns 10/20/30 by verdict, 1 on input problems.
int cmd_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err);

struct WalkthroughOptions {
  /// Optional TSV (name<TAB>value) overriding expected row values.
  std::string expectFile;
};

/// Recomputes the pinned small-instance identity table (V=2, x=3, mod 17 and
/// mod 7) and prints one PASS/FAIL line per row. Returns 2 on any mismatch.
int cmd_walkthrough(const WalkthroughOptions& opt, std::ostream& out,
                    std::ostream& err);

struct ValidateOptions {
  int vars = 6;
  int clauses = 12;
  int k = 3;
  int trials = 100;
  std::uint64_t seed = 1;
  SolveMode mode = SolveMode::Hybrid;
  int primes = 1;
  std::string summaryPath;  // also write the JSON summary here when set
  int threads = 0;          // 0 = hardware concurrency
};

/// Runs seeded random-instance trials against the exhaustive oracle. Emits
/// one CSV row per trial on `out` and a JSON summary on `err`.
int cmd_validate(const ValidateOptions& opt, std::ostream& out,
                 std::ostream& err);

struct PatternsOptions {
  int vars = 2;
  std::vector<std::string> specs;
};

/// Prints the satisfaction pattern table (TSV) for the given clause specs.
int cmd_patterns(const PatternsOptions& opt, std::ostream& out,
                 std::ostream& err);

struct BenchOptions {
  std::vector<int> ladder{4, 8, 16, 32};
  int vars = 6;
  int k = 3;
  int primes = 1;
  std::uint64_t seed = 1;
};

/// Measures leaf-evaluation counts along a clause-count ladder; CSV plus a
/// trailing log-log slope comment.
int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err);

/// Full argv entry point (CLI11); writes to the given streams.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace cpsat::cli
