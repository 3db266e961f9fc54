#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qsim {

/// Greatest common divisor by Euclid's algorithm. a, b >= 0, not both zero.
long long gcd(long long a, long long b);

/// x^e mod m by repeated squaring; never materializes x^e. m >= 2, e >= 0.
/// Intermediate products fit in 64 bits for m < 3e9.
long long mod_exp(long long x, long long e, long long m);

/// Smallest r >= 1 with x^r = 1 (mod m), by brute-force iteration. Requires
/// gcd(x, m) = 1 and m >= 2. This is the classical oracle for the quantum
/// order-finding path.
long long order_classical(long long x, long long m);

/// Returns (b, k) with b^k = n and k >= 2 if n is a perfect power, preferring
/// the largest exponent (so 16 -> (2, 4)); std::nullopt otherwise. n >= 2.
std::optional<std::pair<long long, long long>> is_perfect_power(long long n);

/// Deterministic trial-division primality test for desk-scale n >= 2.
bool is_prime(long long n);

/// Exact rational in lowest terms; numerator >= 0, denominator >= 1.
struct Fraction {
  long long numerator = 0;
  long long denominator = 1;

  /// Reduces to lowest terms on construction.
  Fraction(long long num, long long den);

  bool operator==(const Fraction&) const = default;

  /// "num/den" form used in serialized records.
  std::string to_string() const;
};

/// Convergents of the continued-fraction expansion of j/q (0 <= j < q,
/// q >= 1), in exact integer arithmetic, starting with [a0] = 0/1; the last
/// convergent equals j/q in lowest terms.
std::vector<Fraction> continued_fraction_convergents(long long j, long long q);

}  // namespace qsim
