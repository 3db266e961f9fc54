#pragma once

#include <string>
#include <vector>

#include "qsim/matrix.hpp"
#include "qsim/state.hpp"

namespace qsim {

/// Gate catalog. Phase(k) is the rotation R_k = diag(1, e^{2*pi*i/2^k});
/// PhaseDagger(k) and ControlledPhaseDagger(k) are the conjugate forms used to
/// build structural inverse circuits.
enum class GateType {
  PauliX,
  Hadamard,
  Phase,
  PhaseDagger,
  Cnot,
  ControlledPhase,
  ControlledPhaseDagger,
  Swap,
};

/// One gate application. Qubit indices are 1-based; qubit 1 is the most
/// significant bit of the basis index (see StateVector). control is 0 for
/// 1-qubit gates. For Swap, control/target name the two exchanged qubits.
struct GateOp {
  GateType type;
  int k = 0;        // phase exponent, only for Phase kinds
  int control = 0;  // 0 = none
  int target = 0;

  /// Throws std::invalid_argument if the op is malformed for a circuit of
  /// num_qubits qubits.
  void validate(int num_qubits) const;
};

// Factories, in circuit-diagram order of arguments (control before target).
GateOp make_x(int target);
GateOp make_h(int target);
GateOp make_phase(int k, int target);
GateOp make_phase_dagger(int k, int target);
GateOp make_cnot(int control, int target);
GateOp make_controlled_phase(int k, int control, int target);
GateOp make_controlled_phase_dagger(int k, int control, int target);
GateOp make_swap(int qubit_a, int qubit_b);

/// Ordered gate list over a fixed-width register.
struct Circuit {
  int num_qubits = 0;
  std::vector<GateOp> ops;

  void validate() const;
};

/// The 2x2 (or 4x4 for two-qubit kinds) unitary for a gate type. Two-qubit
/// matrices are in control-before-target tensor order. k is required for the
/// phase kinds and ignored otherwise.
DenseMatrix gate_matrix(GateType type, int k = 0);

/// Applies one gate to the state in place using stride/bit-mask kernels;
/// never materializes the 2^q x 2^q operator. O(2^q).
void apply_gate_in_place(StateVector& state, const GateOp& op);

/// Functional form of apply_gate_in_place.
StateVector apply_gate(const StateVector& state, const GateOp& op);

/// Applies c.ops left to right, in place. Widths must match.
void apply_circuit_in_place(StateVector& state, const Circuit& c);

/// Functional form of apply_circuit_in_place.
StateVector apply_circuit(const StateVector& state, const Circuit& c);

/// Composes the full 2^q x 2^q unitary by applying the circuit to every basis
/// state (column j = circuit applied to |j>). Guarded to num_qubits <= 10;
/// this is a verification oracle, not a simulation path.
DenseMatrix circuit_to_matrix(const Circuit& c);

/// The three-CNOT swap of qubits qubit_a and qubit_b:
/// CNOT(a->b), CNOT(b->a), CNOT(a->b). num_qubits 0 means max(a, b).
Circuit swap_circuit(int qubit_a, int qubit_b, int num_qubits = 0);

/// Five-gate decomposition of the controlled R_k (phase e^{2*pi*i/2^k} on
/// |11> only): R_{k+1}(control), R_{k+1}(target), CNOT, R_{k+1}^dagger(target),
/// CNOT. Exactly 2 CNOTs and 3 one-qubit gates.
Circuit controlled_phase_decomposition(int k, int control, int target,
                                       int num_qubits = 0);

/// Rewrites every ControlledPhase(Dagger) via the five-gate decomposition and
/// every Swap via three CNOTs; other ops pass through unchanged.
Circuit lower_circuit(const Circuit& c);

/// Line-oriented text form, one op per line: `GATE k? control? target` with
/// `-` for unused slots (e.g. `CP 3 1 4`, `H - - 2`).
std::string circuit_to_text(const Circuit& c);

}  // namespace qsim
