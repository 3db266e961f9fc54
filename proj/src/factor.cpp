#include "qsim/factor.hpp"

#include <stdexcept>
#include <string>

#include "qsim/numtheory.hpp"
#include "qsim/rng.hpp"

namespace qsim {

const char* attempt_kind_name(AttemptKind kind) {
  switch (kind) {
    case AttemptKind::RandomBase: return "random-base";
    case AttemptKind::SharedFactor: return "shared-factor";
    case AttemptKind::OrderRecursion: return "order-recursion";
  }
  throw std::invalid_argument("attempt_kind_name: unknown kind");
}

namespace {

int ceil_log2(long long n) {
  int c = 0;
  while ((1LL << c) < n) ++c;
  return c;
}

}  // namespace

FactorRunRecord factor(long long n_value, std::uint64_t seed, int max_attempts,
                       std::optional<long long> forced_base, int t_override) {
  if (n_value < 4) {
    throw std::invalid_argument("factor: N must be >= 4");
  }
  if (is_prime(n_value)) {
    throw std::invalid_argument("factor: N = " + std::to_string(n_value) +
                                " is prime; nothing to factor");
  }
  if (max_attempts < 1) {
    throw std::invalid_argument("factor: max_attempts must be >= 1");
  }
  if (forced_base && (*forced_base <= 1 || *forced_base >= n_value)) {
    throw std::invalid_argument("factor: forced base must lie in (1, N)");
  }

  FactorRunRecord record;
  record.n_value = n_value;
  record.seed = seed;
  record.max_attempts = max_attempts;
  record.forced_base = forced_base;

  if (n_value % 2 == 0) {
    record.shortcut = "even";
    record.factors = {2, n_value / 2};
    return record;
  }
  if (const auto power = is_perfect_power(n_value)) {
    record.shortcut = "perfect-power";
    record.factors = {power->first, n_value / power->first};
    return record;
  }

  const int max_chain_rounds = ceil_log2(n_value);  // bounds log2 r since r < N
  bool chain_active = false;
  long long chain_base = 0;
  long long exponent = 1;  // accumulated r1*r2*... of the active chain
  int chain_rounds = 0;

  while (static_cast<int>(record.attempts.size()) < max_attempts) {
    const int index = static_cast<int>(record.attempts.size());
    Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(index));

    FactorAttempt attempt;
    attempt.index = index;

    long long round_base;
    if (!chain_active) {
      const long long x =
          forced_base ? *forced_base
                      : 2 + static_cast<long long>(rng.uniform_below(
                                static_cast<std::uint64_t>(n_value - 2)));
      const long long shared = gcd(x, n_value);
      if (shared > 1) {
        attempt.kind = AttemptKind::SharedFactor;
        attempt.base = x;
        attempt.chain_base = x;
        record.attempts.push_back(attempt);
        record.factors = {shared, n_value / shared};
        return record;
      }
      chain_base = x;
      exponent = 1;
      chain_rounds = 0;
      round_base = x;
      attempt.kind = AttemptKind::RandomBase;
    } else {
      round_base = mod_exp(chain_base, exponent, n_value);
      attempt.kind = AttemptKind::OrderRecursion;
    }
    attempt.base = round_base;
    attempt.chain_base = chain_base;

    const OrderFindingConfig cfg =
        OrderFindingConfig::make(n_value, round_base, seed, t_override);
    const OrderResult result = order_find_quantum(cfg, rng);
    ++record.rounds_used;
    ++chain_rounds;
    attempt.order = result;
    attempt.accumulated_exponent =
        result.candidate_r ? exponent * *result.candidate_r : exponent;
    record.attempts.push_back(attempt);

    switch (result.status) {
      case OrderStatus::Failed:
        chain_active = false;
        break;
      case OrderStatus::ExactOrder: {
        const long long r = exponent * *result.candidate_r;
        chain_active = false;
        if (r % 2 != 0) break;  // odd order: retire the chain, try fresh x
        const long long y = mod_exp(chain_base, r / 2, n_value);
        if (y == 1 || y == n_value - 1) break;  // trivial square root
        const long long f1 = gcd(y - 1, n_value);
        const long long f2 = gcd(y + 1, n_value);
        if (f1 > 1 && f2 > 1 && f1 * f2 == n_value) {
          record.factors = {f1, f2};
          return record;
        }
        break;
      }
      case OrderStatus::PartialFactor: {
        exponent *= *result.candidate_r;
        if (chain_rounds >= max_chain_rounds) {
          chain_active = false;  // recursion budget spent
        } else {
          chain_active = true;
        }
        break;
      }
    }
  }
  return record;  // attempts exhausted, factors absent
}

}  // namespace qsim
