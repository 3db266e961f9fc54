// shorsim — command-line front end for the factoring simulator.
//
// Subcommands: factor (end-to-end run, JSON record), order (one order-finding
// round, JSON), probdist (analytic first-register distribution, CSV/JSON),
// qft-verify (Fourier circuit vs direct matrix report, --dump for the circuit
// text). Exit codes: 0 success, 1 usage error, 2 algorithmic failure.

#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cli_runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Dense state-vector simulation of quantum factoring: order finding, "
      "continued-fraction post-processing and Fourier-circuit verification"};
  app.require_subcommand(1);

  long long n_value = 0;
  long long x_raw = 0;
  int t_raw = 0;
  std::uint64_t seed = 0;
  int max_attempts = 32;
  int runs = 1;
  long long outcome_raw = 0;
  std::string format;
  std::string out_path;
  bool dump = false;

  CLI::App* factor_cmd = app.add_subcommand(
      "factor", "Factor a composite N, printing the full run record as JSON");
  factor_cmd->add_option("--n", n_value, "Composite number to factor")
      ->required();
  factor_cmd->add_option("--x", x_raw,
                         "Force this base instead of drawing one per attempt");
  factor_cmd->add_option("--t", t_raw, "First-register width override");
  factor_cmd->add_option("--seed", seed, "Deterministic RNG seed");
  factor_cmd->add_option("--max-attempts", max_attempts,
                         "Attempt budget before giving up");
  factor_cmd->add_option(
      "--runs", runs, "Repeat under seeds seed..seed+runs-1, print aggregates");
  factor_cmd->add_option("--out", out_path, "Write output to file, not stdout");
  factor_cmd->add_option("--format", format, "Output format (json)")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* order_cmd = app.add_subcommand(
      "order", "Run one quantum order-finding round for x modulo N (JSON)");
  order_cmd->add_option("--n", n_value, "Modulus N")->required();
  order_cmd->add_option("--x", x_raw, "Base whose order is sought")->required();
  order_cmd->add_option("--t", t_raw, "First-register width override");
  order_cmd->add_option("--seed", seed, "Deterministic RNG seed");
  order_cmd->add_option("--runs", runs,
                        "Repeat over per-run substreams, print status counts");
  order_cmd->add_option("--out", out_path, "Write output to file, not stdout");
  order_cmd->add_option("--format", format, "Output format (json)")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* probdist_cmd = app.add_subcommand(
      "probdist",
      "Emit the analytic measured-j distribution for (N, x) as CSV");
  probdist_cmd->add_option("--n", n_value, "Modulus N")->required();
  probdist_cmd->add_option("--x", x_raw, "Base, coprime to N")->required();
  probdist_cmd->add_option("--t", t_raw, "First-register width override");
  probdist_cmd->add_option(
      "--outcome", outcome_raw,
      "Fixed second-register value (default: x mod N, must be a power of x)");
  probdist_cmd->add_option("--out", out_path,
                           "Write output to file, not stdout");
  probdist_cmd->add_option("--format", format, "Output format (csv or json)")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* qft_cmd = app.add_subcommand(
      "qft-verify",
      "Compare Fourier circuits against the direct transform matrix");
  qft_cmd->add_option(
      "--n", n_value,
      "Verify register sizes 1..n (default 6); also sets the --dump size");
  qft_cmd->add_flag("--dump", dump,
                    "Print the circuit text for size --n instead of the table");
  qft_cmd->add_option("--out", out_path, "Write output to file, not stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints the message or requested help
    return code == 0 ? qsim::cli::kExitSuccess : qsim::cli::kExitUsage;
  }

  qsim::cli::CliConfig cfg;
  CLI::App* active = nullptr;
  if (app.got_subcommand(factor_cmd)) {
    cfg.subcommand = qsim::cli::Subcommand::Factor;
    active = factor_cmd;
  } else if (app.got_subcommand(order_cmd)) {
    cfg.subcommand = qsim::cli::Subcommand::Order;
    active = order_cmd;
  } else if (app.got_subcommand(probdist_cmd)) {
    cfg.subcommand = qsim::cli::Subcommand::Probdist;
    active = probdist_cmd;
  } else {
    cfg.subcommand = qsim::cli::Subcommand::QftVerify;
    active = qft_cmd;
  }
  cfg.n_value = n_value;
  cfg.seed = seed;
  cfg.max_attempts = max_attempts;
  cfg.runs = runs;
  cfg.format = format;
  cfg.dump = dump;
  const auto given = [active](const std::string& name) {
    const CLI::Option* opt = active->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  if (given("--x")) cfg.x = x_raw;
  if (given("--t")) cfg.t = t_raw;
  if (given("--outcome")) cfg.outcome = outcome_raw;

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "error: cannot open " << out_path << " for writing\n";
      return qsim::cli::kExitUsage;
    }
    out = &file;
  }

  try {
    return qsim::cli::run(cfg, *out, std::cerr);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return qsim::cli::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return qsim::cli::kExitFailure;
  }
}
