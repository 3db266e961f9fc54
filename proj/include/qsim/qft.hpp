#pragma once

#include "qsim/gates.hpp"
#include "qsim/matrix.hpp"

namespace qsim {

/// A built Fourier-transform circuit plus its bookkeeping.
struct QftPlan {
  int num_qubits = 0;
  bool inverse = false;
  bool include_swaps = true;
  Circuit circuit;
  /// Length of circuit.ops after lowering controlled phases to the five-gate
  /// decomposition and swaps to three CNOTs.
  long long elementary_gate_count = 0;
};

/// Direct DFT matrix over n qubits: entry (j,k) = e^{2*pi*i*j*k/2^n}/sqrt(2^n).
/// Guarded to 1 <= n <= 10; this is a test oracle, not a simulation path.
DenseMatrix dft_matrix(int n);

/// Builds the Fourier transform over n qubits from Hadamards, controlled
/// phases and final order-reversing swaps: for l = 1..n, H on qubit l then
/// ControlledPhase(k) targeting qubit l controlled by qubit l+k-1 for
/// k = 2..n+1-l; then floor(n/2) swaps. include_swaps=false leaves the output
/// in reversed qubit order. inverse=true negates every phase angle and
/// reverses the op order, giving the adjoint circuit over the same gate set.
QftPlan qft_circuit(int n, bool inverse = false, bool include_swaps = true);

/// Elementary gate count of the lowered n-qubit transform; equals
/// n + 5n(n-1)/2 + 3*floor(n/2) (counted from the built circuit, not the
/// formula).
long long gate_count(int n);

/// (1/N) * sum_{j=0}^{N-1} e^{2*pi*i*j*k/N}: 1 when N divides k, else 0 (unit
/// vectors cancelling by symmetry).
Complex dft_identity_sum(long long big_n, long long k);

}  // namespace qsim
