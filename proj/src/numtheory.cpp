#include "qsim/numtheory.hpp"

#include <numeric>
#include <stdexcept>

namespace qsim {

long long gcd(long long a, long long b) {
  if (a < 0 || b < 0) {
    throw std::invalid_argument("gcd: arguments must be non-negative");
  }
  if (a == 0 && b == 0) {
    throw std::invalid_argument("gcd: gcd(0, 0) is undefined");
  }
  return std::gcd(a, b);
}

long long mod_exp(long long x, long long e, long long m) {
  if (m < 2) {
    throw std::invalid_argument("mod_exp: modulus must be >= 2");
  }
  if (e < 0) {
    throw std::invalid_argument("mod_exp: exponent must be >= 0");
  }
  if (m > 3000000000LL) {
    throw std::invalid_argument("mod_exp: modulus too large for 64-bit squaring");
  }
  long long base = x % m;
  if (base < 0) base += m;
  long long result = 1;
  while (e > 0) {
    if (e & 1) result = result * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return result;
}

long long order_classical(long long x, long long m) {
  if (m < 2) {
    throw std::invalid_argument("order_classical: modulus must be >= 2");
  }
  long long base = x % m;
  if (base < 0) base += m;
  if (std::gcd(base, m) != 1) {
    throw std::invalid_argument("order_classical: x must be coprime to the modulus");
  }
  long long power = base % m;
  long long r = 1;
  while (power != 1) {
    power = power * base % m;
    ++r;
  }
  return r;
}

namespace {

// Largest b with b^k <= n, by binary search in integers only.
long long integer_kth_root(long long n, long long k) {
  long long lo = 1, hi = n;
  while (lo < hi) {
    const long long mid = lo + (hi - lo + 1) / 2;
    long long power = 1;
    bool overflow = false;
    for (long long i = 0; i < k; ++i) {
      if (power > n / mid) {
        overflow = true;
        break;
      }
      power *= mid;
    }
    if (!overflow && power <= n) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

}  // namespace

std::optional<std::pair<long long, long long>> is_perfect_power(long long n) {
  if (n < 2) {
    throw std::invalid_argument("is_perfect_power: n must be >= 2");
  }
  // Scan exponents downward so 16 reports (2, 4) rather than (4, 2).
  long long max_k = 0;
  while ((1LL << (max_k + 1)) <= n) ++max_k;
  for (long long k = max_k; k >= 2; --k) {
    const long long b = integer_kth_root(n, k);
    if (b < 2) continue;
    long long power = 1;
    for (long long i = 0; i < k; ++i) power *= b;
    if (power == n) return std::make_pair(b, k);
  }
  return std::nullopt;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (long long d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Fraction::Fraction(long long num, long long den) {
  if (den < 1) {
    throw std::invalid_argument("Fraction: denominator must be >= 1");
  }
  if (num < 0) {
    throw std::invalid_argument("Fraction: numerator must be >= 0");
  }
  const long long g = num == 0 ? den : std::gcd(num, den);
  numerator = num / g;
  denominator = den / g;
}

std::string Fraction::to_string() const {
  return std::to_string(numerator) + "/" + std::to_string(denominator);
}

std::vector<Fraction> continued_fraction_convergents(long long j, long long q) {
  if (q < 1) {
    throw std::invalid_argument("continued_fraction_convergents: q must be >= 1");
  }
  if (j < 0 || j >= q) {
    throw std::invalid_argument(
        "continued_fraction_convergents: j must be in [0, q)");
  }
  std::vector<Fraction> convergents;
  // Partial quotients from Euclid's algorithm on (j, q); convergents by the
  // standard recurrence h_i = a_i h_{i-1} + h_{i-2}, k_i likewise.
  long long num = j, den = q;
  long long h_prev = 1, h_prev2 = 0;  // h_{-1}, h_{-2}
  long long k_prev = 0, k_prev2 = 1;  // k_{-1}, k_{-2}
  while (den != 0) {
    const long long a = num / den;
    const long long rem = num % den;
    const long long h = a * h_prev + h_prev2;
    const long long k = a * k_prev + k_prev2;
    convergents.emplace_back(h, k);
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    num = den;
    den = rem;
  }
  return convergents;
}

}  // namespace qsim
