#include "qsim/state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qsim {

namespace {

// 2^26 amplitudes = 1 GiB of doubles; anything larger is a caller bug at desk
// scale.
constexpr int kMaxQubits = 26;

void check_qubit_count(int num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw std::invalid_argument("StateVector: num_qubits must be in [1, " +
                                std::to_string(kMaxQubits) + "], got " +
                                std::to_string(num_qubits));
  }
}

}  // namespace

StateVector::StateVector(int num_qubits)
    : num_qubits_(num_qubits) {
  check_qubit_count(num_qubits);
  amps_.assign(std::uint64_t{1} << num_qubits, Complex{0.0, 0.0});
  amps_[0] = Complex{1.0, 0.0};
}

StateVector::StateVector(int num_qubits, std::vector<Complex> amps)
    : num_qubits_(num_qubits), amps_(std::move(amps)) {}

StateVector StateVector::basis_state(int num_qubits, std::uint64_t index) {
  StateVector s(num_qubits);
  if (index >= s.dimension()) {
    throw std::out_of_range("StateVector::basis_state: index " +
                            std::to_string(index) + " out of range for " +
                            std::to_string(num_qubits) + " qubits");
  }
  s.amps_[0] = Complex{0.0, 0.0};
  s.amps_[index] = Complex{1.0, 0.0};
  return s;
}

StateVector StateVector::from_amplitudes(int num_qubits,
                                         std::vector<Complex> amps) {
  check_qubit_count(num_qubits);
  const std::uint64_t dim = std::uint64_t{1} << num_qubits;
  if (amps.size() != dim) {
    throw std::invalid_argument(
        "StateVector::from_amplitudes: expected " + std::to_string(dim) +
        " amplitudes, got " + std::to_string(amps.size()));
  }
  long double sum = 0.0L;
  for (const Complex& a : amps) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw std::invalid_argument(
          "StateVector::from_amplitudes: non-finite amplitude");
    }
    sum += static_cast<long double>(std::norm(a));
  }
  const double norm = std::sqrt(static_cast<double>(sum));
  const double deviation = std::abs(norm - 1.0);
  if (deviation > 1e-6) {
    throw std::invalid_argument(
        "StateVector::from_amplitudes: norm deviates from 1 by " +
        std::to_string(deviation));
  }
  if (deviation > 1e-10) {
    const double inv = 1.0 / norm;
    for (Complex& a : amps) a *= inv;
  }
  return StateVector(num_qubits, std::move(amps));
}

const Complex& StateVector::amplitude(std::uint64_t index) const {
  if (index >= amps_.size()) {
    throw std::out_of_range("StateVector::amplitude: index " +
                            std::to_string(index) + " out of range");
  }
  return amps_[index];
}

double StateVector::norm() const {
  long double sum = 0.0L;
  for (const Complex& a : amps_) sum += static_cast<long double>(std::norm(a));
  return std::sqrt(static_cast<double>(sum));
}

double StateVector::probability(std::uint64_t index) const {
  return std::norm(amplitude(index));
}

}  // namespace qsim
