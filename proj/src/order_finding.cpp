#include "qsim/order_finding.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qsim/qft.hpp"

namespace qsim {

OrderFindingConfig OrderFindingConfig::make(long long modulus, long long base,
                                            std::uint64_t seed,
                                            int t_override) {
  OrderFindingConfig cfg;
  cfg.modulus = modulus;
  cfg.base = base;
  cfg.seed = seed;
  if (modulus < 3) {
    throw std::invalid_argument("OrderFindingConfig: modulus must be >= 3");
  }
  int n = 0;
  while ((1LL << n) < modulus) ++n;
  cfg.n = n;
  if (t_override > 0) {
    cfg.t = t_override;
  } else {
    // Smallest t with 2^t >= modulus^2, phrased as an integer division so the
    // square never overflows: floor(2^t / N) >= N  <=>  2^t >= N^2.
    int t = 0;
    while (t < 62 && (1LL << t) / modulus < modulus) ++t;
    cfg.t = t;
  }
  cfg.validate();
  return cfg;
}

void OrderFindingConfig::validate() const {
  if (modulus < 3) {
    throw std::invalid_argument("OrderFindingConfig: modulus must be >= 3");
  }
  if (base <= 1 || base >= modulus) {
    throw std::invalid_argument(
        "OrderFindingConfig: base must satisfy 1 < base < modulus");
  }
  if (std::gcd(base, modulus) != 1) {
    throw std::invalid_argument(
        "OrderFindingConfig: base must be coprime to the modulus (gcd = " +
        std::to_string(std::gcd(base, modulus)) + ")");
  }
  if (t < 1 || n < 1) {
    throw std::invalid_argument("OrderFindingConfig: register widths not set");
  }
  if ((1LL << n) < modulus) {
    throw std::invalid_argument(
        "OrderFindingConfig: second register too narrow for the modulus");
  }
  if (t + n > 24) {
    throw std::invalid_argument(
        "OrderFindingConfig: t + n = " + std::to_string(t + n) +
        " exceeds the 24-qubit memory guard");
  }
}

std::vector<std::uint64_t> vx_index_map(long long x, long long modulus, int t,
                                        int n) {
  if (modulus < 2) {
    throw std::invalid_argument("vx_index_map: modulus must be >= 2");
  }
  if (x < 1 || std::gcd(x, modulus) != 1) {
    throw std::invalid_argument("vx_index_map: x must be coprime to the modulus");
  }
  if (t < 1 || n < 1 || (1LL << n) < modulus) {
    throw std::invalid_argument("vx_index_map: invalid register widths");
  }
  const std::uint64_t first_dim = std::uint64_t{1} << t;
  const std::uint64_t second_dim = std::uint64_t{1} << n;
  std::vector<std::uint64_t> map(first_dim * second_dim);
  const auto mod = static_cast<std::uint64_t>(modulus);
  std::uint64_t power = 1;  // x^j mod N, updated incrementally
  for (std::uint64_t j = 0; j < first_dim; ++j) {
    const std::uint64_t row = j << n;
    for (std::uint64_t k = 0; k < second_dim; ++k) {
      const std::uint64_t shifted = k < mod ? (k + power) % mod : k;
      map[row | k] = row | shifted;
    }
    power = power * static_cast<std::uint64_t>(x) % mod;
  }
  return map;
}

StateVector apply_vx(const StateVector& state, long long x, long long modulus,
                     int t, int n) {
  if (state.num_qubits() != t + n) {
    throw std::invalid_argument("apply_vx: state must have t + n = " +
                                std::to_string(t + n) + " qubits, has " +
                                std::to_string(state.num_qubits()));
  }
  const std::vector<std::uint64_t> map = vx_index_map(x, modulus, t, n);
  const auto& in = state.amplitudes();
  StateVector out(state.num_qubits());
  auto& target = out.amplitudes();
  std::fill(target.begin(), target.end(), Complex{0.0, 0.0});
  for (std::uint64_t i = 0; i < in.size(); ++i) {
    target[map[i]] = in[i];
  }
  return out;
}

namespace {

// Shared marginal computation: probabilities over register values, iterating
// amplitudes in ascending index order (the fast path reproduces this order to
// stay draw-for-draw identical with the full-width path).
std::vector<double> register_marginal(const StateVector& state,
                                      int first_qubit, int last_qubit) {
  const int q = state.num_qubits();
  if (first_qubit < 1 || last_qubit > q || first_qubit > last_qubit) {
    throw std::invalid_argument("measure_register: invalid qubit range [" +
                                std::to_string(first_qubit) + ", " +
                                std::to_string(last_qubit) + "]");
  }
  const int width = last_qubit - first_qubit + 1;
  const int shift = q - last_qubit;
  const std::uint64_t value_mask = (std::uint64_t{1} << width) - 1;
  std::vector<double> marginal(std::uint64_t{1} << width, 0.0);
  const auto& amps = state.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    marginal[(i >> shift) & value_mask] += std::norm(amps[i]);
  }
  return marginal;
}

}  // namespace

long long measure_register_in_place(StateVector& state, int first_qubit,
                                    int last_qubit, Rng& rng) {
  const std::vector<double> marginal =
      register_marginal(state, first_qubit, last_qubit);
  const std::size_t outcome = rng.sample_discrete(marginal);
  const int q = state.num_qubits();
  const int shift = q - last_qubit;
  const std::uint64_t value_mask =
      (std::uint64_t{1} << (last_qubit - first_qubit + 1)) - 1;
  const double scale = 1.0 / std::sqrt(marginal[outcome]);
  auto& amps = state.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if (((i >> shift) & value_mask) == outcome) {
      amps[i] *= scale;
    } else {
      amps[i] = Complex{0.0, 0.0};
    }
  }
  return static_cast<long long>(outcome);
}

std::pair<long long, StateVector> measure_register(const StateVector& state,
                                                   int first_qubit,
                                                   int last_qubit, Rng& rng) {
  StateVector collapsed = state;
  const long long outcome =
      measure_register_in_place(collapsed, first_qubit, last_qubit, rng);
  return {outcome, std::move(collapsed)};
}

double prob_j(long long x, long long modulus, int t, long long outcome,
              long long j) {
  if (t < 1 || t > 30) {
    throw std::invalid_argument("prob_j: t out of range");
  }
  const long long dim = 1LL << t;
  if (j < 0 || j >= dim) {
    throw std::invalid_argument("prob_j: j must be in [0, 2^t)");
  }
  const long long r = order_classical(x, modulus);
  long long b0 = -1;
  long long power = 1 % modulus;
  for (long long b = 0; b < r; ++b) {
    if (power == outcome % modulus) {
      b0 = b;
      break;
    }
    power = power * (x % modulus) % modulus;
  }
  if (b0 < 0) {
    throw std::invalid_argument("prob_j: outcome " + std::to_string(outcome) +
                                " is not a power of x modulo the modulus");
  }
  const long long num_terms = (dim - 1 - b0) / r + 1;
  const long long step = r * j % dim;
  Complex acc{0.0, 0.0};
  for (long long a = 0; a < num_terms; ++a) {
    const long long rem = step * a % dim;
    const double angle =
        -2.0 * std::numbers::pi * static_cast<double>(rem) / static_cast<double>(dim);
    acc += std::polar(1.0, angle);
  }
  return std::norm(acc) /
         (static_cast<double>(dim) * static_cast<double>(num_terms));
}

const char* order_status_name(OrderStatus status) {
  switch (status) {
    case OrderStatus::Failed: return "failed";
    case OrderStatus::ExactOrder: return "exact-order";
    case OrderStatus::PartialFactor: return "partial-factor";
  }
  throw std::invalid_argument("order_status_name: unknown status");
}

OrderResult classify_measured_j(long long j, int t, long long x,
                                long long modulus) {
  OrderResult result;
  result.measured_j = j;
  result.convergents = continued_fraction_convergents(j, 1LL << t);
  std::vector<long long> qualifying;
  for (const Fraction& c : result.convergents) {
    if (c.numerator >= 1 && c.denominator < modulus) {
      qualifying.push_back(c.denominator);
    }
  }
  std::sort(qualifying.begin(), qualifying.end());
  qualifying.erase(std::unique(qualifying.begin(), qualifying.end()),
                   qualifying.end());
  for (const long long d : qualifying) {
    if (mod_exp(x, d, modulus) != 1) continue;
    // x^d = 1, so the order divides d; the smallest dividing exponent that
    // still verifies is the order itself.
    long long refined = d;
    for (long long divisor = 1; divisor < d; ++divisor) {
      if (d % divisor == 0 && mod_exp(x, divisor, modulus) == 1) {
        refined = divisor;
        break;
      }
    }
    result.candidate_r = refined;
    result.status = OrderStatus::ExactOrder;
    return result;
  }
  if (!qualifying.empty()) {
    result.candidate_r = qualifying.back();
    result.status = OrderStatus::PartialFactor;
    return result;
  }
  result.status = OrderStatus::Failed;
  return result;
}

OrderFindingPipeline::OrderFindingPipeline(const OrderFindingConfig& cfg)
    : cfg_(cfg), psi2_(1) {
  cfg_.validate();
  StateVector state(cfg_.t + cfg_.n);
  for (int qubit = 1; qubit <= cfg_.t; ++qubit) {
    apply_gate_in_place(state, make_h(qubit));
  }
  psi2_ = apply_vx(state, cfg_.base, cfg_.modulus, cfg_.t, cfg_.n);
  outcome_marginal_ =
      register_marginal(psi2_, cfg_.t + 1, cfg_.t + cfg_.n);
  inverse_qft_narrow_ = qft_circuit(cfg_.t, /*inverse=*/true).circuit;
  inverse_qft_wide_.num_qubits = cfg_.t + cfg_.n;
  inverse_qft_wide_.ops = inverse_qft_narrow_.ops;
}

StateVector OrderFindingPipeline::first_register_after_inverse_transform(
    long long outcome) const {
  if (outcome < 0 ||
      outcome >= static_cast<long long>(outcome_marginal_.size()) ||
      outcome_marginal_[outcome] <= 0.0) {
    throw std::invalid_argument(
        "first_register_after_inverse_transform: outcome " +
        std::to_string(outcome) + " has zero probability");
  }
  const double scale = 1.0 / std::sqrt(outcome_marginal_[outcome]);
  // Extract the first-register factor of the collapsed product state; the
  // arithmetic matches measure_register's collapse exactly.
  StateVector first_register(cfg_.t);
  auto& f = first_register.amplitudes();
  const auto& amps = psi2_.amplitudes();
  const std::uint64_t first_dim = std::uint64_t{1} << cfg_.t;
  for (std::uint64_t j = 0; j < first_dim; ++j) {
    f[j] = amps[(j << cfg_.n) | static_cast<std::uint64_t>(outcome)] * scale;
  }
  apply_circuit_in_place(first_register, inverse_qft_narrow_);
  return first_register;
}

OrderResult OrderFindingPipeline::run(Rng& rng) const {
  const std::size_t outcome = rng.sample_discrete(outcome_marginal_);
  StateVector first_register =
      first_register_after_inverse_transform(static_cast<long long>(outcome));
  const long long j =
      measure_register_in_place(first_register, 1, cfg_.t, rng);
  OrderResult result =
      classify_measured_j(j, cfg_.t, cfg_.base, cfg_.modulus);
  result.second_register_outcome = static_cast<long long>(outcome);
  return result;
}

OrderResult OrderFindingPipeline::run_full_width(Rng& rng) const {
  StateVector state = psi2_;
  const long long outcome = measure_register_in_place(
      state, cfg_.t + 1, cfg_.t + cfg_.n, rng);
  apply_circuit_in_place(state, inverse_qft_wide_);
  const long long j = measure_register_in_place(state, 1, cfg_.t, rng);
  OrderResult result =
      classify_measured_j(j, cfg_.t, cfg_.base, cfg_.modulus);
  result.second_register_outcome = outcome;
  return result;
}

OrderResult order_find_quantum(const OrderFindingConfig& cfg, Rng& rng) {
  const OrderFindingPipeline pipeline(cfg);
  return pipeline.run(rng);
}

void write_probdist_csv(std::ostream& os, long long x, long long modulus,
                        int t, long long outcome) {
  os << "j,prob\n";
  const long long dim = 1LL << t;
  char buffer[64];
  for (long long j = 0; j < dim; ++j) {
    const double p = prob_j(x, modulus, t, outcome, j);
    std::snprintf(buffer, sizeof(buffer), "%.12g", p);
    os << j << ',' << buffer << '\n';
  }
}

}  // namespace qsim
