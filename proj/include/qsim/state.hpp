#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace qsim {

using Complex = std::complex<double>;

/// Dense state vector over num_qubits qubits.
///
/// Basis convention (the single source of truth for all index math in this
/// project): indices are big-endian in the qubit numbering, i.e. qubit 1 is
/// the most significant bit of the basis index and qubit q the least
/// significant. Qubit i therefore corresponds to bit position (q - i) of the
/// amplitude index.
class StateVector {
 public:
  /// Constructs |0...0> on num_qubits qubits.
  explicit StateVector(int num_qubits);

  /// Constructs the computational basis state |index>.
  static StateVector basis_state(int num_qubits, std::uint64_t index);

  /// Constructs a state from raw amplitudes. The norm must be 1 within 1e-10;
  /// deviations up to 1e-6 are silently renormalized, anything worse (or any
  /// non-finite entry) is rejected.
  static StateVector from_amplitudes(int num_qubits, std::vector<Complex> amps);

  int num_qubits() const { return num_qubits_; }
  std::uint64_t dimension() const { return static_cast<std::uint64_t>(amps_.size()); }

  /// Bounds-checked single-amplitude access.
  const Complex& amplitude(std::uint64_t index) const;

  const std::vector<Complex>& amplitudes() const { return amps_; }

  /// Mutable amplitude array for in-place gate kernels. Callers take
  /// exclusive access and must keep the state normalized and finite.
  std::vector<Complex>& amplitudes() { return amps_; }

  /// Euclidean norm, accumulated in extended precision.
  double norm() const;

  /// |amplitude(index)|^2.
  double probability(std::uint64_t index) const;

 private:
  StateVector(int num_qubits, std::vector<Complex> amps);

  int num_qubits_;
  std::vector<Complex> amps_;
};

}  // namespace qsim
