#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace qsim {

/// Deterministic random source for all sampling in this project.
///
/// Engine: std::mt19937_64, whose output sequence is fixed by the C++
/// standard, seeded through a SplitMix64 hash so that nearby seeds and stream
/// indices give unrelated streams. Uniform doubles take the top 53 bits of an
/// engine draw and integer ranges use rejection sampling; neither relies on
/// std::uniform_*_distribution, whose outputs are implementation-defined.
/// Identical (seed, stream) pairs therefore reproduce byte-identical results
/// on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  /// Independent substream for e.g. one attempt or one Monte Carlo run:
  /// equivalent to Rng(hash(seed, index)) with a fixed closed-form hash.
  static Rng substream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64();

  /// Uniform in [0, 1) with 53-bit resolution.
  double next_unit();

  /// Uniform integer in [0, bound); bound must be positive. Unbiased via
  /// rejection.
  std::uint64_t uniform_below(std::uint64_t bound);

  /// Samples an index from a discrete distribution given by non-negative
  /// weights summing to ~1; consumes exactly one next_unit() draw. Any
  /// leftover mass from rounding goes to the last index.
  std::size_t sample_discrete(const std::vector<double>& weights);

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; exposed for tests of the seeding discipline.
std::uint64_t splitmix64(std::uint64_t z);

}  // namespace qsim
