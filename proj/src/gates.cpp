#include "qsim/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace qsim {

namespace {

bool is_two_qubit(GateType type) {
  switch (type) {
    case GateType::Cnot:
    case GateType::ControlledPhase:
    case GateType::ControlledPhaseDagger:
    case GateType::Swap:
      return true;
    default:
      return false;
  }
}

bool has_phase_exponent(GateType type) {
  switch (type) {
    case GateType::Phase:
    case GateType::PhaseDagger:
    case GateType::ControlledPhase:
    case GateType::ControlledPhaseDagger:
      return true;
    default:
      return false;
  }
}

const char* gate_name(GateType type) {
  switch (type) {
    case GateType::PauliX: return "X";
    case GateType::Hadamard: return "H";
    case GateType::Phase: return "P";
    case GateType::PhaseDagger: return "PD";
    case GateType::Cnot: return "CNOT";
    case GateType::ControlledPhase: return "CP";
    case GateType::ControlledPhaseDagger: return "CPD";
    case GateType::Swap: return "SWAP";
  }
  throw std::invalid_argument("gate_name: unknown gate type");
}

// e^{+-2*pi*i / 2^k}; ldexp keeps large k exact and overflow-free.
Complex phase_factor(int k, bool dagger) {
  const double angle = 2.0 * std::numbers::pi * std::ldexp(1.0, -k);
  return std::polar(1.0, dagger ? -angle : angle);
}

// Bit position of 1-based qubit i in a q-qubit index (big-endian).
std::uint64_t qubit_mask(int num_qubits, int qubit) {
  return std::uint64_t{1} << (num_qubits - qubit);
}

}  // namespace

void GateOp::validate(int num_qubits) const {
  if (target < 1 || target > num_qubits) {
    throw std::invalid_argument("GateOp: target " + std::to_string(target) +
                                " outside [1, " + std::to_string(num_qubits) +
                                "]");
  }
  if (is_two_qubit(type)) {
    if (control < 1 || control > num_qubits) {
      throw std::invalid_argument("GateOp: control " + std::to_string(control) +
                                  " outside [1, " + std::to_string(num_qubits) +
                                  "]");
    }
    if (control == target) {
      throw std::invalid_argument("GateOp: control equals target");
    }
  } else if (control != 0) {
    throw std::invalid_argument("GateOp: unexpected control on 1-qubit gate");
  }
  if (has_phase_exponent(type)) {
    if (k < 1) {
      throw std::invalid_argument("GateOp: phase exponent k must be >= 1");
    }
  } else if (k != 0) {
    throw std::invalid_argument("GateOp: unexpected k on non-phase gate");
  }
}

GateOp make_x(int target) { return {GateType::PauliX, 0, 0, target}; }
GateOp make_h(int target) { return {GateType::Hadamard, 0, 0, target}; }
GateOp make_phase(int k, int target) { return {GateType::Phase, k, 0, target}; }
GateOp make_phase_dagger(int k, int target) {
  return {GateType::PhaseDagger, k, 0, target};
}
GateOp make_cnot(int control, int target) {
  return {GateType::Cnot, 0, control, target};
}
GateOp make_controlled_phase(int k, int control, int target) {
  return {GateType::ControlledPhase, k, control, target};
}
GateOp make_controlled_phase_dagger(int k, int control, int target) {
  return {GateType::ControlledPhaseDagger, k, control, target};
}
GateOp make_swap(int qubit_a, int qubit_b) {
  return {GateType::Swap, 0, qubit_a, qubit_b};
}

void Circuit::validate() const {
  if (num_qubits < 1) {
    throw std::invalid_argument("Circuit: num_qubits must be >= 1");
  }
  for (const GateOp& op : ops) op.validate(num_qubits);
}

DenseMatrix gate_matrix(GateType type, int k) {
  constexpr double inv_sqrt2 = 0.70710678118654752440;
  switch (type) {
    case GateType::PauliX:
      return DenseMatrix::from_rows({{0, 1}, {1, 0}});
    case GateType::Hadamard:
      return DenseMatrix::from_rows({{inv_sqrt2, inv_sqrt2},
                                     {inv_sqrt2, -inv_sqrt2}});
    case GateType::Phase:
    case GateType::PhaseDagger: {
      if (k < 1) throw std::invalid_argument("gate_matrix: k must be >= 1");
      const Complex w = phase_factor(k, type == GateType::PhaseDagger);
      return DenseMatrix::from_rows({{1, 0}, {0, w}});
    }
    case GateType::Cnot:
      return DenseMatrix::from_rows({{1, 0, 0, 0},
                                     {0, 1, 0, 0},
                                     {0, 0, 0, 1},
                                     {0, 0, 1, 0}});
    case GateType::ControlledPhase:
    case GateType::ControlledPhaseDagger: {
      if (k < 1) throw std::invalid_argument("gate_matrix: k must be >= 1");
      const Complex w =
          phase_factor(k, type == GateType::ControlledPhaseDagger);
      DenseMatrix m = DenseMatrix::identity(4);
      m.at(3, 3) = w;
      return m;
    }
    case GateType::Swap:
      return DenseMatrix::from_rows({{1, 0, 0, 0},
                                     {0, 0, 1, 0},
                                     {0, 1, 0, 0},
                                     {0, 0, 0, 1}});
  }
  throw std::invalid_argument("gate_matrix: unknown gate type");
}

void apply_gate_in_place(StateVector& state, const GateOp& op) {
  const int q = state.num_qubits();
  op.validate(q);
  auto& amps = state.amplitudes();
  const std::uint64_t dim = state.dimension();

  switch (op.type) {
    case GateType::PauliX: {
      const std::uint64_t mask = qubit_mask(q, op.target);
      const std::uint64_t lo = mask - 1;
      const std::uint64_t hi = ~lo;
      for (std::uint64_t i = 0; i < dim / 2; ++i) {
        const std::uint64_t i0 = ((i & hi) << 1) | (i & lo);
        std::swap(amps[i0], amps[i0 | mask]);
      }
      break;
    }
    case GateType::Hadamard: {
      const std::uint64_t mask = qubit_mask(q, op.target);
      const std::uint64_t lo = mask - 1;
      const std::uint64_t hi = ~lo;
      constexpr double inv_sqrt2 = 0.70710678118654752440;
      for (std::uint64_t i = 0; i < dim / 2; ++i) {
        const std::uint64_t i0 = ((i & hi) << 1) | (i & lo);
        const std::uint64_t i1 = i0 | mask;
        const Complex a0 = amps[i0];
        const Complex a1 = amps[i1];
        amps[i0] = (a0 + a1) * inv_sqrt2;
        amps[i1] = (a0 - a1) * inv_sqrt2;
      }
      break;
    }
    case GateType::Phase:
    case GateType::PhaseDagger: {
      const std::uint64_t mask = qubit_mask(q, op.target);
      const Complex w = phase_factor(op.k, op.type == GateType::PhaseDagger);
      for (std::uint64_t i = 0; i < dim; ++i) {
        if (i & mask) amps[i] *= w;
      }
      break;
    }
    case GateType::Cnot: {
      const std::uint64_t cmask = qubit_mask(q, op.control);
      const std::uint64_t tmask = qubit_mask(q, op.target);
      for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & cmask) && !(i & tmask)) std::swap(amps[i], amps[i | tmask]);
      }
      break;
    }
    case GateType::ControlledPhase:
    case GateType::ControlledPhaseDagger: {
      const std::uint64_t cmask = qubit_mask(q, op.control);
      const std::uint64_t tmask = qubit_mask(q, op.target);
      const Complex w =
          phase_factor(op.k, op.type == GateType::ControlledPhaseDagger);
      const std::uint64_t both = cmask | tmask;
      for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & both) == both) amps[i] *= w;
      }
      break;
    }
    case GateType::Swap: {
      const std::uint64_t amask = qubit_mask(q, op.control);
      const std::uint64_t bmask = qubit_mask(q, op.target);
      for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & amask) && !(i & bmask)) {
          std::swap(amps[i], amps[i ^ amask ^ bmask]);
        }
      }
      break;
    }
  }
}

StateVector apply_gate(const StateVector& state, const GateOp& op) {
  StateVector out = state;
  apply_gate_in_place(out, op);
  return out;
}

void apply_circuit_in_place(StateVector& state, const Circuit& c) {
  if (c.num_qubits != state.num_qubits()) {
    throw std::invalid_argument("apply_circuit: circuit width " +
                                std::to_string(c.num_qubits) +
                                " != state width " +
                                std::to_string(state.num_qubits()));
  }
  for (const GateOp& op : c.ops) apply_gate_in_place(state, op);
}

StateVector apply_circuit(const StateVector& state, const Circuit& c) {
  StateVector out = state;
  apply_circuit_in_place(out, c);
  return out;
}

DenseMatrix circuit_to_matrix(const Circuit& c) {
  c.validate();
  if (c.num_qubits > 10) {
    throw std::invalid_argument(
        "circuit_to_matrix: guarded to num_qubits <= 10, got " +
        std::to_string(c.num_qubits));
  }
  const int dim = 1 << c.num_qubits;
  DenseMatrix m(dim, dim);
  for (int col = 0; col < dim; ++col) {
    StateVector basis = StateVector::basis_state(
        c.num_qubits, static_cast<std::uint64_t>(col));
    apply_circuit_in_place(basis, c);
    for (int row = 0; row < dim; ++row) {
      m.at(row, col) = basis.amplitudes()[static_cast<std::size_t>(row)];
    }
  }
  return m;
}

Circuit swap_circuit(int qubit_a, int qubit_b, int num_qubits) {
  if (qubit_a == qubit_b) {
    throw std::invalid_argument("swap_circuit: qubits must differ");
  }
  Circuit c;
  c.num_qubits = num_qubits > 0 ? num_qubits : std::max(qubit_a, qubit_b);
  c.ops = {make_cnot(qubit_a, qubit_b), make_cnot(qubit_b, qubit_a),
           make_cnot(qubit_a, qubit_b)};
  c.validate();
  return c;
}

Circuit controlled_phase_decomposition(int k, int control, int target,
                                       int num_qubits) {
  if (control == target) {
    throw std::invalid_argument(
        "controlled_phase_decomposition: control equals target");
  }
  if (k < 1) {
    throw std::invalid_argument(
        "controlled_phase_decomposition: k must be >= 1");
  }
  Circuit c;
  c.num_qubits = num_qubits > 0 ? num_qubits : std::max(control, target);
  // Phase bookkeeping on basis |c t>: the three rotations contribute
  // (c + t - (c xor t)) * pi/2^k, which is 2*pi/2^k exactly on |11>.
  c.ops = {make_phase(k + 1, control), make_phase(k + 1, target),
           make_cnot(control, target), make_phase_dagger(k + 1, target),
           make_cnot(control, target)};
  c.validate();
  return c;
}

Circuit lower_circuit(const Circuit& c) {
  c.validate();
  Circuit out;
  out.num_qubits = c.num_qubits;
  for (const GateOp& op : c.ops) {
    switch (op.type) {
      case GateType::ControlledPhase: {
        const Circuit d = controlled_phase_decomposition(op.k, op.control,
                                                         op.target,
                                                         c.num_qubits);
        out.ops.insert(out.ops.end(), d.ops.begin(), d.ops.end());
        break;
      }
      case GateType::ControlledPhaseDagger: {
        // Mirror of the forward decomposition with daggered rotations.
        out.ops.push_back(make_phase_dagger(op.k + 1, op.control));
        out.ops.push_back(make_phase_dagger(op.k + 1, op.target));
        out.ops.push_back(make_cnot(op.control, op.target));
        out.ops.push_back(make_phase(op.k + 1, op.target));
        out.ops.push_back(make_cnot(op.control, op.target));
        break;
      }
      case GateType::Swap: {
        const Circuit d = swap_circuit(op.control, op.target, c.num_qubits);
        out.ops.insert(out.ops.end(), d.ops.begin(), d.ops.end());
        break;
      }
      default:
        out.ops.push_back(op);
    }
  }
  return out;
}

std::string circuit_to_text(const Circuit& c) {
  c.validate();
  std::string text;
  for (const GateOp& op : c.ops) {
    text += gate_name(op.type);
    text += ' ';
    text += has_phase_exponent(op.type) ? std::to_string(op.k) : "-";
    text += ' ';
    text += is_two_qubit(op.type) ? std::to_string(op.control) : "-";
    text += ' ';
    text += std::to_string(op.target);
    text += '\n';
  }
  return text;
}

}  // namespace qsim
