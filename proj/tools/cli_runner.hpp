#pragma once

// Subcommand implementations behind the shorsim binary. They are split from
// main() so tests can drive them in-process against string streams; main()
// only parses flags and picks the output sink.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace qsim::cli {

// Process exit codes shared by every subcommand.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitUsage = 1;    // bad flags or domain preconditions
inline constexpr int kExitFailure = 2;  // run completed but did not succeed

enum class Subcommand { Factor, Order, Probdist, QftVerify };

/// Parsed command line. Domain validation (compositeness, coprimality,
/// register-size limits) happens inside the run_* functions, before any state
/// vector is allocated.
struct CliConfig {
  Subcommand subcommand = Subcommand::Factor;
  long long n_value = 0;                 // N for factor/order/probdist,
                                         // max table size for qft-verify
  std::optional<long long> x;            // forced base
  std::optional<int> t;                  // first-register width override
  std::uint64_t seed = 0;
  int max_attempts = 32;
  int runs = 1;                          // Monte Carlo repeat count
  std::optional<long long> outcome;      // probdist: fixed second-register value
  std::string format = "";               // "csv" | "json" | "" (per-command default)
  bool dump = false;                     // qft-verify: emit circuit text instead
};

/// Factors N and prints the run record as JSON. With runs > 1 repeats the
/// whole run under seeds seed, seed+1, ... and prints an aggregate summary
/// instead. Returns kExitFailure when any run exhausts its attempts.
int run_factor(const CliConfig& cfg, std::ostream& out, std::ostream& err);

/// One quantum order-finding round (JSON, including the classical
/// cross-check order_bruteforce). A non-coprime --x is rejected with the gcd
/// reported as an already-found factor. With runs > 1 prints aggregate status
/// and candidate counts over per-run substreams. A single run that ends in
/// status "failed" returns kExitFailure.
int run_order(const CliConfig& cfg, std::ostream& out, std::ostream& err);

/// Analytic first-register distribution for (N, x, t), conditioned on a fixed
/// second-register outcome (default: x mod N). CSV rows `j,prob` by default,
/// --format json for a single document.
int run_probdist(const CliConfig& cfg, std::ostream& out, std::ostream& err);

/// Verifies the Fourier circuit against the direct transform matrix for
/// n = 1..N (default 6) and reports gate counts, plus a count-only row at
/// n = 20 for the asymptotic ratio. Any deviation above 1e-10 returns
/// kExitFailure. With --dump, prints the circuit text for n = N instead.
int run_qft_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err);

/// Dispatch on cfg.subcommand.
int run(const CliConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace qsim::cli
