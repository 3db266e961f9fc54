#include "cli_runner.hpp"

#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qsim/factor.hpp"
#include "qsim/gates.hpp"
#include "qsim/matrix.hpp"
#include "qsim/numtheory.hpp"
#include "qsim/order_finding.hpp"
#include "qsim/qft.hpp"
#include "qsim/record_json.hpp"
#include "qsim/rng.hpp"

namespace qsim::cli {

using nlohmann::ordered_json;

namespace {

constexpr double kQftDeviationTolerance = 1e-10;
constexpr int kMaxMatrixCompareQubits = 10;  // circuit_to_matrix limit
constexpr int kCountOnlyQubits = 20;         // asymptotic-ratio row

int usage_error(std::ostream& err, const std::string& message) {
  err << "error: " << message << "\n";
  return kExitUsage;
}

/// Register-width precheck shared by the quantum subcommands; mirrors
/// OrderFindingConfig::make without requiring a base, so factor can validate
/// widths before any base has been drawn.
std::optional<std::string> width_problem(long long n_value,
                                         std::optional<int> t_override) {
  int n = 0;
  while ((1LL << n) < n_value) ++n;
  int t;
  if (t_override) {
    t = *t_override;
    if (t < 1) return "register width --t must be positive";
  } else {
    t = 0;
    while (t < 62 && (1LL << t) / n_value < n_value) ++t;
  }
  if (t + n > 24) {
    return "register widths t + n = " + std::to_string(t) + " + " +
           std::to_string(n) + " exceed the 24-qubit memory budget";
  }
  return std::nullopt;
}

std::string format_double(const char* fmt, double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, value);
  return buf;
}

ordered_json factor_pair_json(const std::pair<long long, long long>& factors) {
  return ordered_json::array({factors.first, factors.second});
}

}  // namespace

int run_factor(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.format.empty() && cfg.format != "json") {
    return usage_error(err, "factor records are JSON; --format " + cfg.format +
                                " is not available");
  }
  if (cfg.n_value < 4) {
    return usage_error(err, "--n must be a composite number >= 4");
  }
  if (is_prime(cfg.n_value)) {
    return usage_error(err, "N = " + std::to_string(cfg.n_value) +
                                " is prime; N must be composite");
  }
  if (cfg.x && (*cfg.x <= 1 || *cfg.x >= cfg.n_value)) {
    return usage_error(err, "--x must lie strictly between 1 and N");
  }
  if (cfg.max_attempts < 1) {
    return usage_error(err, "--max-attempts must be >= 1");
  }
  if (cfg.runs < 1) {
    return usage_error(err, "--runs must be >= 1");
  }
  // Width checks only matter when a quantum round can actually happen.
  if (cfg.n_value % 2 != 0 && !is_perfect_power(cfg.n_value)) {
    if (const auto problem = width_problem(cfg.n_value, cfg.t)) {
      return usage_error(err, *problem);
    }
  }
  const int t_override = cfg.t.value_or(0);

  if (cfg.runs == 1) {
    const FactorRunRecord record =
        factor(cfg.n_value, cfg.seed, cfg.max_attempts, cfg.x, t_override);
    out << dump_json(run_record_to_json(record));
    return record.factors ? kExitSuccess : kExitFailure;
  }

  int successes = 0;
  int rounds_total = 0;
  std::map<std::pair<long long, long long>, int> factor_counts;
  for (int i = 0; i < cfg.runs; ++i) {
    const FactorRunRecord record = factor(cfg.n_value, cfg.seed + i,
                                          cfg.max_attempts, cfg.x, t_override);
    rounds_total += record.rounds_used;
    if (record.factors) {
      ++successes;
      ++factor_counts[*record.factors];
    }
  }
  ordered_json doc;
  doc["n_value"] = cfg.n_value;
  doc["seed"] = cfg.seed;
  doc["runs"] = cfg.runs;
  if (cfg.x) {
    doc["forced_base"] = *cfg.x;
  } else {
    doc["forced_base"] = nullptr;
  }
  doc["successes"] = successes;
  doc["failures"] = cfg.runs - successes;
  doc["rounds_total"] = rounds_total;
  ordered_json counts = ordered_json::array();
  for (const auto& [factors, count] : factor_counts) {
    ordered_json entry;
    entry["factors"] = factor_pair_json(factors);
    entry["count"] = count;
    counts.push_back(entry);
  }
  doc["factor_counts"] = counts;
  out << dump_json(doc);
  return successes == cfg.runs ? kExitSuccess : kExitFailure;
}

int run_order(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.format.empty() && cfg.format != "json") {
    return usage_error(err, "order results are JSON; --format " + cfg.format +
                                " is not available");
  }
  if (cfg.n_value < 3) {
    return usage_error(err, "--n must be >= 3");
  }
  if (!cfg.x) {
    return usage_error(err, "order requires --x");
  }
  if (*cfg.x <= 1 || *cfg.x >= cfg.n_value) {
    return usage_error(err, "--x must lie strictly between 1 and N");
  }
  if (cfg.runs < 1) {
    return usage_error(err, "--runs must be >= 1");
  }
  const long long shared = gcd(*cfg.x, cfg.n_value);
  if (shared > 1) {
    return usage_error(
        err, "gcd(x, N) = " + std::to_string(shared) +
                 " is already a nontrivial factor of " +
                 std::to_string(cfg.n_value) + "; no quantum run needed");
  }
  OrderFindingConfig order_cfg;
  try {
    order_cfg = OrderFindingConfig::make(cfg.n_value, *cfg.x, cfg.seed,
                                         cfg.t.value_or(0));
  } catch (const std::invalid_argument& e) {
    return usage_error(err, e.what());
  }
  const long long bruteforce = order_classical(*cfg.x, cfg.n_value);

  if (cfg.runs == 1) {
    Rng rng = Rng::substream(cfg.seed, 0);
    const OrderResult result = order_find_quantum(order_cfg, rng);
    ordered_json doc;
    doc["n_value"] = cfg.n_value;
    doc["x"] = *cfg.x;
    doc["t"] = order_cfg.t;
    doc["seed"] = cfg.seed;
    ordered_json body = order_result_to_json(result);
    for (auto& [key, value] : body.items()) {
      doc[key] = value;
    }
    doc["order_bruteforce"] = bruteforce;
    out << dump_json(doc);
    return result.status == OrderStatus::Failed ? kExitFailure : kExitSuccess;
  }

  OrderFindingPipeline pipeline(order_cfg);
  std::map<OrderStatus, int> status_counts;
  std::map<long long, int> candidate_counts;
  for (int i = 0; i < cfg.runs; ++i) {
    Rng rng = Rng::substream(cfg.seed, static_cast<std::uint64_t>(i));
    const OrderResult result = pipeline.run(rng);
    ++status_counts[result.status];
    if (result.candidate_r) ++candidate_counts[*result.candidate_r];
  }
  ordered_json doc;
  doc["n_value"] = cfg.n_value;
  doc["x"] = *cfg.x;
  doc["t"] = order_cfg.t;
  doc["seed"] = cfg.seed;
  doc["runs"] = cfg.runs;
  doc["order_bruteforce"] = bruteforce;
  ordered_json statuses;
  for (const OrderStatus status :
       {OrderStatus::Failed, OrderStatus::ExactOrder,
        OrderStatus::PartialFactor}) {
    statuses[order_status_name(status)] =
        status_counts.count(status) ? status_counts.at(status) : 0;
  }
  doc["status_counts"] = statuses;
  ordered_json candidates;
  for (const auto& [candidate, count] : candidate_counts) {
    candidates[std::to_string(candidate)] = count;
  }
  doc["candidate_counts"] = candidates;
  out << dump_json(doc);
  return kExitSuccess;
}

int run_probdist(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.format.empty() && cfg.format != "csv" && cfg.format != "json") {
    return usage_error(err, "--format must be csv or json");
  }
  if (cfg.n_value < 3) {
    return usage_error(err, "--n must be >= 3");
  }
  if (!cfg.x) {
    return usage_error(err, "probdist requires --x");
  }
  if (*cfg.x <= 1 || *cfg.x >= cfg.n_value) {
    return usage_error(err, "--x must lie strictly between 1 and N");
  }
  const long long shared = gcd(*cfg.x, cfg.n_value);
  if (shared > 1) {
    return usage_error(err, "gcd(x, N) = " + std::to_string(shared) +
                                " != 1; x must be coprime to N");
  }
  OrderFindingConfig order_cfg;
  try {
    order_cfg = OrderFindingConfig::make(cfg.n_value, *cfg.x, cfg.seed,
                                         cfg.t.value_or(0));
  } catch (const std::invalid_argument& e) {
    return usage_error(err, e.what());
  }

  // Default outcome: x^1 mod N, the cycle value the base itself lands on.
  const long long outcome = cfg.outcome.value_or(*cfg.x % cfg.n_value);
  bool outcome_reachable = false;
  long long power = 1 % cfg.n_value;
  const long long order = order_classical(*cfg.x, cfg.n_value);
  for (long long b = 0; b < order; ++b) {
    if (power == outcome) {
      outcome_reachable = true;
      break;
    }
    power = (power * *cfg.x) % cfg.n_value;
  }
  if (!outcome_reachable) {
    return usage_error(err, "--outcome " + std::to_string(outcome) +
                                " is not a power of x modulo N");
  }

  if (cfg.format == "json") {
    const long long dim = 1LL << order_cfg.t;
    ordered_json doc;
    doc["n_value"] = cfg.n_value;
    doc["x"] = *cfg.x;
    doc["t"] = order_cfg.t;
    doc["outcome"] = outcome;
    ordered_json rows = ordered_json::array();
    for (long long j = 0; j < dim; ++j) {
      rows.push_back(prob_j(*cfg.x, cfg.n_value, order_cfg.t, outcome, j));
    }
    doc["prob"] = rows;
    out << dump_json(doc);
  } else {
    write_probdist_csv(out, *cfg.x, cfg.n_value, order_cfg.t, outcome);
  }
  return kExitSuccess;
}

int run_qft_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const int n_max = cfg.n_value > 0 ? static_cast<int>(cfg.n_value) : 6;
  if (n_max > kMaxMatrixCompareQubits) {
    return usage_error(err,
                       "--n must be <= " +
                           std::to_string(kMaxMatrixCompareQubits) +
                           " (matrix comparison is dense)");
  }

  if (cfg.dump) {
    out << circuit_to_text(qft_circuit(n_max).circuit);
    return kExitSuccess;
  }

  char line[128];
  std::snprintf(line, sizeof(line), "%4s%16s%8s%12s\n", "n", "max_deviation",
                "gates", "gates/n^2");
  out << line;
  std::vector<int> exceeded;
  for (int n = 1; n <= n_max; ++n) {
    const QftPlan plan = qft_circuit(n);
    const DenseMatrix circuit = circuit_to_matrix(plan.circuit);
    const double deviation = max_abs_diff(circuit, dft_matrix(n));
    if (deviation > kQftDeviationTolerance) exceeded.push_back(n);
    std::snprintf(line, sizeof(line), "%4d%16s%8lld%12.4f\n", n,
                  format_double("%.3e", deviation).c_str(),
                  static_cast<long long>(plan.elementary_gate_count),
                  static_cast<double>(plan.elementary_gate_count) / (n * n));
    out << line;
  }
  const long long big_count = gate_count(kCountOnlyQubits);
  std::snprintf(line, sizeof(line), "%4d%16s%8lld%12.4f\n", kCountOnlyQubits,
                "-", big_count,
                static_cast<double>(big_count) /
                    (kCountOnlyQubits * kCountOnlyQubits));
  out << line;

  if (exceeded.empty()) {
    out << "all deviations within 1e-10\n";
    return kExitSuccess;
  }
  std::string bad = "deviation exceeds 1e-10 for n =";
  for (const int n : exceeded) bad += " " + std::to_string(n);
  out << bad << "\n";
  return kExitFailure;
}

int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  switch (cfg.subcommand) {
    case Subcommand::Factor: return run_factor(cfg, out, err);
    case Subcommand::Order: return run_order(cfg, out, err);
    case Subcommand::Probdist: return run_probdist(cfg, out, err);
    case Subcommand::QftVerify: return run_qft_verify(cfg, out, err);
  }
  return kExitUsage;
}

}  // namespace qsim::cli
