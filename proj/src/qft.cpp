#include "qsim/qft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qsim {

namespace {

// e^(2 pi i m / dim) with the four quadrant angles returned exactly, so the
// small transforms (whose entries are all +-1, +-i up to scale) come out with
// zero rounding error instead of stray 1e-16 imaginary parts from std::polar.
Complex unit_phase(int m, int dim) {
  if (4 * m % dim == 0) {
    switch (4 * m / dim) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      case 3: return {0.0, -1.0};
    }
  }
  return std::polar(1.0, 2.0 * std::numbers::pi * m / dim);
}

}  // namespace

DenseMatrix dft_matrix(int n) {
  if (n < 1 || n > 10) {
    throw std::invalid_argument("dft_matrix: n must be in [1, 10], got " +
                                std::to_string(n));
  }
  const int dim = 1 << n;
  // 2^(-n/2), kept exact: the odd-n case scales the same 1/sqrt(2) constant
  // the Hadamard kernel uses, which makes the n = 1 matrix exactly H.
  constexpr double kInvSqrt2 = 0.70710678118654752440;
  const double scale =
      n % 2 == 0 ? std::ldexp(1.0, -n / 2) : std::ldexp(kInvSqrt2, -(n - 1) / 2);
  DenseMatrix m(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int k = 0; k < dim; ++k) {
      // Reduce j*k modulo 2^n before forming the angle so every entry is an
      // exact root of unity, not a large-angle approximation.
      const int r = (j * k) & (dim - 1);
      m.at(j, k) = scale * unit_phase(r, dim);
    }
  }
  return m;
}

QftPlan qft_circuit(int n, bool inverse, bool include_swaps) {
  if (n < 1) {
    throw std::invalid_argument("qft_circuit: n must be >= 1, got " +
                                std::to_string(n));
  }
  Circuit forward;
  forward.num_qubits = n;
  for (int l = 1; l <= n; ++l) {
    forward.ops.push_back(make_h(l));
    for (int k = 2; k <= n + 1 - l; ++k) {
      forward.ops.push_back(make_controlled_phase(k, l + k - 1, l));
    }
  }
  if (include_swaps) {
    for (int l = 1; l <= n / 2; ++l) {
      forward.ops.push_back(make_swap(l, n + 1 - l));
    }
  }

  QftPlan plan;
  plan.num_qubits = n;
  plan.inverse = inverse;
  plan.include_swaps = include_swaps;
  if (!inverse) {
    plan.circuit = std::move(forward);
  } else {
    plan.circuit.num_qubits = n;
    for (auto it = forward.ops.rbegin(); it != forward.ops.rend(); ++it) {
      GateOp op = *it;
      if (op.type == GateType::ControlledPhase) {
        op.type = GateType::ControlledPhaseDagger;
      }
      // Hadamard and Swap are self-inverse.
      plan.circuit.ops.push_back(op);
    }
  }
  plan.circuit.validate();
  plan.elementary_gate_count =
      static_cast<long long>(lower_circuit(plan.circuit).ops.size());
  return plan;
}

long long gate_count(int n) { return qft_circuit(n).elementary_gate_count; }

Complex dft_identity_sum(long long big_n, long long k) {
  if (big_n < 1) {
    throw std::invalid_argument("dft_identity_sum: N must be >= 1");
  }
  Complex acc{0.0, 0.0};
  for (long long j = 0; j < big_n; ++j) {
    const long long r = (j * k) % big_n;
    const double angle =
        2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(big_n);
    acc += std::polar(1.0, angle);
  }
  return acc / static_cast<double>(big_n);
}

}  // namespace qsim
