#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsim/order_finding.hpp"

namespace qsim {

enum class AttemptKind {
  RandomBase,      // fresh base (random or forced), one quantum round
  SharedFactor,    // gcd(x, N) > 1: classical factor, no quantum round
  OrderRecursion,  // follow-up round on x^(partial exponent)
};

const char* attempt_kind_name(AttemptKind kind);

/// One entry of the factoring audit trail. Every attempt holds at most one
/// quantum round; a partial-factor continuation is recorded as a fresh
/// attempt of kind OrderRecursion that keeps the chain_base and the
/// accumulated exponent r1*r2*... of the chain it extends.
struct FactorAttempt {
  int index = 0;
  AttemptKind kind = AttemptKind::RandomBase;
  long long base = 0;        // the base this round actually ran on
  long long chain_base = 0;  // the original x of the chain
  long long accumulated_exponent = 1;  // product of candidates after the round
  std::optional<OrderResult> order;    // absent for SharedFactor
};

/// Full record of one factoring run; serializes to JSON (see record_json.hpp).
struct FactorRunRecord {
  long long n_value = 0;
  std::uint64_t seed = 0;
  int max_attempts = 0;
  std::optional<long long> forced_base;
  std::optional<std::string> shortcut;  // "even" or "perfect-power"
  std::vector<FactorAttempt> attempts;
  int rounds_used = 0;  // quantum rounds across all attempts
  std::optional<std::pair<long long, long long>> factors;
};

/// Factors composite N >= 4. Handles, in order: even N (factor 2), perfect
/// powers (b, N/b), then repeated quantum attempts: pick x in (1, N) — random
/// unless forced_base is set — return gcd(x, N) if it is already a factor,
/// otherwise run quantum order finding. A PartialFactor round multiplies its
/// candidate into the chain's exponent and recurses on x^exponent (bounded by
/// ceil(log2 N) rounds per chain); a verified order r leads to y = x^(r/2)
/// and the factor pair (gcd(y-1, N), gcd(y+1, N)) unless r is odd or
/// y = N - 1, which retire the chain. Attempts are seeded from per-attempt
/// substreams of `seed`, so identical inputs give identical records.
/// Exhausting max_attempts returns a record without factors (not an error);
/// prime or invalid N throws std::invalid_argument.
FactorRunRecord factor(long long n_value, std::uint64_t seed,
                       int max_attempts = 32,
                       std::optional<long long> forced_base = std::nullopt,
                       int t_override = 0);

}  // namespace qsim
