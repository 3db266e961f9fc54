// Tests for the command-line layer: flag validation, output formats, exit
// codes, determinism of emitted bytes, and an end-to-end pass through the
// installed binary.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "cli_runner.hpp"
#include "json.hpp"
#include "qsim/numtheory.hpp"
#include "qsim/order_finding.hpp"

using namespace qsim;
using namespace qsim::cli;

namespace {

struct CliOutput {
  int exit_code = 0;
  std::string out;
  std::string err;
};

CliOutput drive(const CliConfig& cfg) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(cfg, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (const char c : text) {
    if (c == '\n') {
      lines.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) {
    lines.push_back(current);
  }
  return lines;
}

CliConfig probdist_config(long long n, long long x) {
  CliConfig cfg;
  cfg.subcommand = Subcommand::Probdist;
  cfg.n_value = n;
  cfg.x = x;
  return cfg;
}

CliConfig order_config(long long n, long long x, std::uint64_t seed) {
  CliConfig cfg;
  cfg.subcommand = Subcommand::Order;
  cfg.n_value = n;
  cfg.x = x;
  cfg.seed = seed;
  return cfg;
}

CliConfig factor_config(long long n, std::uint64_t seed) {
  CliConfig cfg;
  cfg.subcommand = Subcommand::Factor;
  cfg.n_value = n;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("probdist emits the analytic distribution as CSV") {
  const CliOutput result = drive(probdist_config(21, 2));
  CHECK(result.exit_code == kExitSuccess);
  CHECK(result.err.empty());

  const std::vector<std::string> lines = split_lines(result.out);
  REQUIRE(lines.size() == 513);  // header + one row per j
  CHECK(lines[0] == "j,prob");
  CHECK(lines[1] == "0,0.16796875");
  CHECK(lines[257] == "256,0.16796875");

  double sum = 0.0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t comma = lines[i].find(',');
    REQUIRE(comma != std::string::npos);
    CHECK(lines[i].substr(0, comma) == std::to_string(i - 1));
    sum += std::stod(lines[i].substr(comma + 1));
  }
  CHECK(std::abs(sum - 1.0) <= 1e-9);

  // Identical configuration, identical bytes.
  CHECK(drive(probdist_config(21, 2)).out == result.out);
}

TEST_CASE("probdist JSON carries the same distribution") {
  CliConfig cfg = probdist_config(21, 2);
  cfg.format = "json";
  const CliOutput result = drive(cfg);
  CHECK(result.exit_code == kExitSuccess);

  const nlohmann::json doc = nlohmann::json::parse(result.out);
  CHECK(doc.at("n_value").get<long long>() == 21);
  CHECK(doc.at("x").get<long long>() == 2);
  CHECK(doc.at("t").get<int>() == 9);
  CHECK(doc.at("outcome").get<long long>() == 2);  // default: x^1 mod N
  REQUIRE(doc.at("prob").is_array());
  REQUIRE(doc.at("prob").size() == 512);
  CHECK(std::abs(doc.at("prob")[0].get<double>() - 86.0 / 512.0) <= 1e-12);
  double sum = 0.0;
  for (const auto& p : doc.at("prob")) {
    sum += p.get<double>();
  }
  CHECK(std::abs(sum - 1.0) <= 1e-9);
}

TEST_CASE("probdist respects an explicit outcome and rejects bad ones") {
  CliConfig cfg = probdist_config(21, 2);
  cfg.outcome = 4;  // 2^2 mod 21: cycle position with 85 repeat exponents
  const CliOutput result = drive(cfg);
  CHECK(result.exit_code == kExitSuccess);
  const std::vector<std::string> lines = split_lines(result.out);
  CHECK(lines[1] == "0,0.166015625");  // 85/512

  cfg.outcome = 3;  // not a power of 2 mod 21
  const CliOutput bad = drive(cfg);
  CHECK(bad.exit_code == kExitUsage);
  CHECK(bad.err.find("not a power") != std::string::npos);

  CliConfig non_coprime = probdist_config(21, 6);
  const CliOutput rejected = drive(non_coprime);
  CHECK(rejected.exit_code == kExitUsage);
  CHECK(rejected.err.find("gcd") != std::string::npos);

  CliConfig missing = probdist_config(21, 2);
  missing.x.reset();
  CHECK(drive(missing).exit_code == kExitUsage);

  CliConfig bad_format = probdist_config(21, 2);
  bad_format.format = "xml";
  CHECK(drive(bad_format).exit_code == kExitUsage);
}

TEST_CASE("order reports one round with the classical cross-check") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const CliOutput result = drive(order_config(21, 2, seed));
    const nlohmann::json doc = nlohmann::json::parse(result.out);
    CHECK(doc.at("n_value").get<long long>() == 21);
    CHECK(doc.at("x").get<long long>() == 2);
    CHECK(doc.at("t").get<int>() == 9);
    CHECK(doc.at("seed").get<std::uint64_t>() == seed);
    CHECK(doc.at("order_bruteforce").get<long long>() == 6);

    // The reported classification must agree with the library applied to the
    // reported j.
    const long long j = doc.at("measured_j").get<long long>();
    const OrderResult expected = classify_measured_j(j, 9, 2, 21);
    CHECK(doc.at("status").get<std::string>() ==
          order_status_name(expected.status));
    if (expected.candidate_r) {
      CHECK(doc.at("candidate_r").get<long long>() == *expected.candidate_r);
    } else {
      CHECK(doc.at("candidate_r").is_null());
    }
    REQUIRE(doc.at("convergents").is_array());
    REQUIRE(doc.at("convergents").size() == expected.convergents.size());
    for (std::size_t i = 0; i < expected.convergents.size(); ++i) {
      CHECK(doc.at("convergents")[i].get<std::string>() ==
            expected.convergents[i].to_string());
    }

    // Exit code mirrors the round status.
    if (doc.at("status").get<std::string>() == "failed") {
      CHECK(result.exit_code == kExitFailure);
    } else {
      CHECK(result.exit_code == kExitSuccess);
    }
    // Determinism: repeating the identical run yields identical bytes.
    CHECK(drive(order_config(21, 2, seed)).out == result.out);
  }
}

TEST_CASE("order aggregates many runs into status and candidate counts") {
  CliConfig cfg = order_config(21, 2, 0);
  cfg.runs = 500;
  const CliOutput result = drive(cfg);
  CHECK(result.exit_code == kExitSuccess);

  const nlohmann::json doc = nlohmann::json::parse(result.out);
  CHECK(doc.at("runs").get<int>() == 500);
  CHECK(doc.at("order_bruteforce").get<long long>() == 6);
  const auto& statuses = doc.at("status_counts");
  const int failed = statuses.at("failed").get<int>();
  const int exact = statuses.at("exact-order").get<int>();
  const int partial = statuses.at("partial-factor").get<int>();
  CHECK(failed + exact + partial == 500);
  // The j = 0 peak carries about a sixth of the mass; stay within a wide band.
  CHECK(failed >= 40);
  CHECK(failed <= 130);
  CHECK(exact > 0);
  CHECK(partial > 0);

  const auto& candidates = doc.at("candidate_counts");
  REQUIRE(candidates.contains("6"));
  REQUIRE(candidates.contains("3"));
  int candidate_total = 0;
  for (const auto& [key, value] : candidates.items()) {
    candidate_total += value.get<int>();
  }
  CHECK(candidate_total == 500 - failed);
}

TEST_CASE("order rejects bad inputs with usage errors") {
  const CliOutput non_coprime = drive(order_config(21, 3, 0));
  CHECK(non_coprime.exit_code == kExitUsage);
  CHECK(non_coprime.err.find("gcd(x, N) = 3") != std::string::npos);
  CHECK(non_coprime.err.find("factor") != std::string::npos);

  CliConfig missing = order_config(21, 2, 0);
  missing.x.reset();
  CHECK(drive(missing).exit_code == kExitUsage);

  CHECK(drive(order_config(21, 1, 0)).exit_code == kExitUsage);
  CHECK(drive(order_config(21, 21, 0)).exit_code == kExitUsage);
  CHECK(drive(order_config(2, 2, 0)).exit_code == kExitUsage);

  CliConfig csv = order_config(21, 2, 0);
  csv.format = "csv";
  CHECK(drive(csv).exit_code == kExitUsage);

  CliConfig too_wide = order_config(21, 2, 0);
  too_wide.t = 20;  // 20 + 5 qubits exceed the memory budget
  const CliOutput wide_result = drive(too_wide);
  CHECK(wide_result.exit_code == kExitUsage);
  CHECK(wide_result.err.find("24") != std::string::npos);
}

TEST_CASE("factor prints the run record and mirrors the result in its exit") {
  CliConfig cfg = factor_config(21, 7);
  cfg.x = 2;
  const CliOutput result = drive(cfg);
  CHECK(result.exit_code == kExitSuccess);
  const nlohmann::json doc = nlohmann::json::parse(result.out);
  CHECK(doc.at("n_value").get<long long>() == 21);
  REQUIRE(doc.at("factors").is_array());
  const std::set<long long> factors = {doc.at("factors")[0].get<long long>(),
                                       doc.at("factors")[1].get<long long>()};
  CHECK(factors == std::set<long long>{3, 7});
  CHECK(drive(cfg).out == result.out);

  // Shortcut path.
  const CliOutput even = drive(factor_config(12, 0));
  CHECK(even.exit_code == kExitSuccess);
  CHECK(nlohmann::json::parse(even.out).at("shortcut").get<std::string>() ==
        "even");

  // Deterministic exhaustion: base 14 = -1 (mod 15) can never factor.
  CliConfig exhausted = factor_config(15, 0);
  exhausted.x = 14;
  exhausted.max_attempts = 4;
  const CliOutput failed = drive(exhausted);
  CHECK(failed.exit_code == kExitFailure);
  CHECK(nlohmann::json::parse(failed.out).at("factors").is_null());
}

TEST_CASE("factor aggregates repeated runs") {
  CliConfig cfg = factor_config(15, 0);
  cfg.runs = 20;
  const CliOutput result = drive(cfg);
  CHECK(result.exit_code == kExitSuccess);
  const nlohmann::json doc = nlohmann::json::parse(result.out);
  CHECK(doc.at("runs").get<int>() == 20);
  CHECK(doc.at("successes").get<int>() == 20);
  CHECK(doc.at("failures").get<int>() == 0);
  CHECK(doc.at("forced_base").is_null());
  int counted = 0;
  for (const auto& entry : doc.at("factor_counts")) {
    const std::set<long long> factors = {
        entry.at("factors")[0].get<long long>(),
        entry.at("factors")[1].get<long long>()};
    CHECK(factors == std::set<long long>{3, 5});
    counted += entry.at("count").get<int>();
  }
  CHECK(counted == 20);

  // All-failing aggregate exits nonzero.
  CliConfig failing = factor_config(15, 0);
  failing.x = 14;
  failing.max_attempts = 4;
  failing.runs = 3;
  const CliOutput failed = drive(failing);
  CHECK(failed.exit_code == kExitFailure);
  const nlohmann::json failed_doc = nlohmann::json::parse(failed.out);
  CHECK(failed_doc.at("successes").get<int>() == 0);
  CHECK(failed_doc.at("failures").get<int>() == 3);
  CHECK(failed_doc.at("factor_counts").empty());
}

TEST_CASE("factor rejects bad inputs with usage errors") {
  CHECK(drive(factor_config(13, 0)).exit_code == kExitUsage);  // prime
  CHECK(drive(factor_config(3, 0)).exit_code == kExitUsage);

  CliConfig bad_base = factor_config(21, 0);
  bad_base.x = 1;
  CHECK(drive(bad_base).exit_code == kExitUsage);

  CliConfig bad_attempts = factor_config(21, 0);
  bad_attempts.max_attempts = 0;
  CHECK(drive(bad_attempts).exit_code == kExitUsage);

  CliConfig csv = factor_config(21, 0);
  csv.format = "csv";
  CHECK(drive(csv).exit_code == kExitUsage);

  CliConfig too_wide = factor_config(21, 0);
  too_wide.t = 22;
  CHECK(drive(too_wide).exit_code == kExitUsage);
}

TEST_CASE("qft-verify prints the comparison table with a closing verdict") {
  CliConfig cfg;
  cfg.subcommand = Subcommand::QftVerify;
  const CliOutput result = drive(cfg);
  CHECK(result.exit_code == kExitSuccess);

  const std::vector<std::string> lines = split_lines(result.out);
  REQUIRE(lines.size() == 9);  // header + n=1..6 + n=20 + verdict
  CHECK(lines[0].find("max_deviation") != std::string::npos);
  CHECK(lines[1].find("0.000e+00") != std::string::npos);  // n = 1 is exact
  CHECK(lines[3].find("21") != std::string::npos);         // n = 3 gate count
  CHECK(lines[3].find("2.3333") != std::string::npos);
  CHECK(lines[7].find("1000") != std::string::npos);       // n = 20 count row
  CHECK(lines[7].find("2.5000") != std::string::npos);
  CHECK(lines[7].find("-") != std::string::npos);          // no dense compare
  CHECK(lines[8] == "all deviations within 1e-10");

  CliConfig too_big = cfg;
  too_big.n_value = 11;
  CHECK(drive(too_big).exit_code == kExitUsage);
}

TEST_CASE("qft-verify --dump emits the circuit text") {
  CliConfig cfg;
  cfg.subcommand = Subcommand::QftVerify;
  cfg.n_value = 3;
  cfg.dump = true;
  const CliOutput result = drive(cfg);
  CHECK(result.exit_code == kExitSuccess);
  CHECK(result.out ==
        "H - - 1\n"
        "CP 2 2 1\n"
        "CP 3 3 1\n"
        "H - - 2\n"
        "CP 2 3 2\n"
        "H - - 3\n"
        "SWAP - 1 3\n");
}

TEST_CASE("the installed binary behaves like the in-process runner") {
  const std::string binary = SHORSIM_BINARY;
  const std::filesystem::path a = "cli_e2e_a.csv";
  const std::filesystem::path b = "cli_e2e_b.csv";

  auto shell = [&](const std::string& args) {
    const int status = std::system((binary + " " + args).c_str());
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
  };
  auto slurp = [](const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };

  CHECK(shell("--help > /dev/null") == 0);
  CHECK(shell("probdist --n 21 --x 2 --out " + a.string()) == 0);
  CHECK(shell("probdist --n 21 --x 2 --out " + b.string()) == 0);
  const std::string first = slurp(a);
  CHECK(first == slurp(b));  // byte-identical across invocations
  CHECK(first == drive(probdist_config(21, 2)).out);  // and in-process

  // Exit codes propagate through main().
  CHECK(shell("factor --n 13 2> /dev/null") == 1);
  CHECK(shell("factor --n 21 --x 2 --seed 7 > /dev/null") == 0);
  CHECK(shell("factor --n 15 --x 14 --max-attempts 4 > /dev/null") == 2);
  CHECK(shell("order --n 21 --x 3 2> /dev/null") == 1);
  CHECK(shell("qft-verify > /dev/null") == 0);
  CHECK(shell("nonsense 2> /dev/null") == 1);
  CHECK(shell("2> /dev/null") == 1);  // a subcommand is required

  std::filesystem::remove(a);
  std::filesystem::remove(b);
}
