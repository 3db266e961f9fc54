#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "qsim/gates.hpp"
#include "qsim/numtheory.hpp"
#include "qsim/rng.hpp"
#include "qsim/state.hpp"

namespace qsim {

/// Parameters of one quantum order-finding run: find the order of `base`
/// modulo `modulus` using a t-qubit work register and an n-qubit value
/// register.
struct OrderFindingConfig {
  long long modulus = 0;  // N, the number whose group we work in
  long long base = 0;     // x, 1 < x < N, coprime to N
  int t = 0;              // first-register width
  int n = 0;              // second-register width, 2^n >= N
  std::uint64_t seed = 0;

  /// Fills in the default register widths: the smallest t with 2^t >= N^2
  /// (t_override > 0 replaces it, e.g. t = n for the power-of-2 cases) and
  /// n = ceil(log2 N).
  static OrderFindingConfig make(long long modulus, long long base,
                                 std::uint64_t seed = 0, int t_override = 0);

  /// Throws std::invalid_argument on any violated invariant, including the
  /// t + n <= 24 memory guard.
  void validate() const;
};

/// Modular-exponentiation operator: maps basis component |j>|k> to
/// |j>|(k + x^j) mod N> for k < N and leaves k >= N components unchanged,
/// which makes the index map a permutation (hence unitary). Implemented as an
/// index permutation of the amplitude array, never as a gate decomposition.
/// state must have t + n qubits, gcd(x, N) = 1, 2^n >= N.
StateVector apply_vx(const StateVector& state, long long x, long long modulus,
                     int t, int n);

/// The permutation underlying apply_vx, index in -> index out; exposed so the
/// bijectivity property can be checked without building states.
std::vector<std::uint64_t> vx_index_map(long long x, long long modulus, int t,
                                        int n);

/// Measures the contiguous qubit range [first_qubit, last_qubit] (1-based,
/// inclusive). The outcome is drawn from the marginal distribution of that
/// register; the returned state has all inconsistent amplitudes zeroed and is
/// renormalized. Measuring the same register again returns the same outcome
/// with probability 1.
std::pair<long long, StateVector> measure_register(const StateVector& state,
                                                   int first_qubit,
                                                   int last_qubit, Rng& rng);

/// In-place form of measure_register, returning only the outcome.
long long measure_register_in_place(StateVector& state, int first_qubit,
                                    int last_qubit, Rng& rng);

/// Analytic probability of reading j from the first register after the
/// inverse Fourier transform, conditioned on the second register having shown
/// `outcome` (a value x^b mod N): with b0 the least such exponent, r the
/// order, and M = floor((2^t - 1 - b0)/r) + 1 first-register terms,
/// prob = |sum_{a=0}^{M-1} e^{-2 pi i r j a / 2^t}|^2 / (2^t M).
/// Computed analytically from the collapsed pre-transform state, never by
/// sampling; sums to 1 over j within 1e-9.
double prob_j(long long x, long long modulus, int t, long long outcome,
              long long j);

enum class OrderStatus {
  Failed,        // j = 0 or no usable convergent
  ExactOrder,    // candidate_r verified: x^candidate = 1 (mod N)
  PartialFactor, // candidate_r is a plausible divisor of the order, unverified
};

/// Outcome of one quantum order-finding round plus its classical
/// post-processing.
struct OrderResult {
  long long measured_j = 0;
  long long second_register_outcome = 0;  // the x^b0 value that was observed
  std::vector<Fraction> convergents;       // of measured_j / 2^t
  std::optional<long long> candidate_r;    // absent iff status == Failed
  OrderStatus status = OrderStatus::Failed;
};

const char* order_status_name(OrderStatus status);

/// Classical post-processing of a measured j: expands j / 2^t into
/// convergents and scans the qualifying denominators (numerator >= 1,
/// denominator < N) in increasing order for one that verifies
/// x^d = 1 (mod N). On a verified d the candidate is refined to the smallest
/// divisor of d that still verifies — which is exactly the order of x — and
/// the status is ExactOrder. Otherwise the largest qualifying denominator
/// becomes a PartialFactor candidate; with no qualifying convergent (always
/// the case for j = 0) the round has Failed.
OrderResult classify_measured_j(long long j, int t, long long x,
                                long long modulus);

/// One prepared order-finding experiment. Building it runs the deterministic
/// pipeline prefix once (Hadamards on the first register, then the V_x
/// permutation); each run() then measures the second register, applies the
/// inverse Fourier transform to the first register and measures it.
///
/// run() exploits the post-measurement product structure: after the second
/// register collapses to |v>, every untouched amplitude is exactly zero, so
/// the 2^t-amplitude first-register factor is extracted and the inverse
/// transform kernels act on it directly. This is arithmetic-for-arithmetic
/// identical to run_full_width(), which keeps the full t+n-qubit state
/// throughout; a test asserts equal results draw by draw. Runs are const and
/// may execute concurrently with per-run generators.
class OrderFindingPipeline {
 public:
  explicit OrderFindingPipeline(const OrderFindingConfig& cfg);

  const OrderFindingConfig& config() const { return cfg_; }

  /// The deterministic pre-measurement state (superposed first register with
  /// modular powers in the second).
  const StateVector& prepared_state() const { return psi2_; }

  /// Probability of each second-register value, indexed 0..2^n - 1.
  const std::vector<double>& outcome_marginal() const {
    return outcome_marginal_;
  }

  /// The deterministic part of a run once the second register has shown
  /// `outcome`: the renormalized first-register factor with the inverse
  /// Fourier transform applied. run() measures this state; callers can use it
  /// to tabulate the j distribution per outcome without re-running the
  /// transform. Throws for outcomes of zero probability.
  StateVector first_register_after_inverse_transform(long long outcome) const;

  OrderResult run(Rng& rng) const;
  OrderResult run_full_width(Rng& rng) const;

 private:
  OrderFindingConfig cfg_;
  StateVector psi2_;
  std::vector<double> outcome_marginal_;  // indexed by second-register value
  Circuit inverse_qft_narrow_;            // t qubits, for the extracted factor
  Circuit inverse_qft_wide_;              // same ops over t + n qubits
};

/// One full order-finding round: pipeline preparation, both measurements and
/// classical post-processing.
OrderResult order_find_quantum(const OrderFindingConfig& cfg, Rng& rng);

/// Emits the analytic distribution as CSV: header exactly `j,prob`, one row
/// per j in [0, 2^t).
void write_probdist_csv(std::ostream& os, long long x, long long modulus,
                        int t, long long outcome);

}  // namespace qsim
