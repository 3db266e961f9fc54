#include "qsim/rng.hpp"

#include <stdexcept>

namespace qsim {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Rng::Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

Rng Rng::substream(std::uint64_t seed, std::uint64_t index) {
  // Mix the stream index in with a second round so (seed, 0) differs from
  // Rng(seed) and distinct indices decorrelate.
  return Rng(splitmix64(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1))));
}

std::uint64_t Rng::next_u64() { return engine_(); }

double Rng::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::uniform_below(std::uint64_t bound) {
  if (bound == 0) {
    throw std::invalid_argument("Rng::uniform_below: bound must be positive");
  }
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t draw;
  do {
    draw = next_u64();
  } while (draw >= limit);
  return draw % bound;
}

std::size_t Rng::sample_discrete(const std::vector<double>& weights) {
  if (weights.empty()) {
    throw std::invalid_argument("Rng::sample_discrete: empty weights");
  }
  const double u = next_unit();
  double cumulative = 0.0;
  for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
    cumulative += weights[i];
    if (u < cumulative) return i;
  }
  return weights.size() - 1;
}

}  // namespace qsim
