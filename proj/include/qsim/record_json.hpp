#pragma once

// JSON serialization for order-finding results and factoring run records.
//
// Field names are part of the tool's output contract and must stay stable:
// n_value, seed, max_attempts, attempts[], measured_j, second_register_outcome,
// convergents (as "num/den" strings), candidate_r, status, factors.  Ordered
// JSON keeps key order deterministic so identical runs emit identical bytes.

#include <string>

#include "json.hpp"
#include "qsim/factor.hpp"
#include "qsim/order_finding.hpp"

namespace qsim {

nlohmann::ordered_json order_result_to_json(const OrderResult& result);
nlohmann::ordered_json attempt_to_json(const FactorAttempt& attempt);
nlohmann::ordered_json run_record_to_json(const FactorRunRecord& record);

// Two-space indented dump with a trailing newline, shared by all emitters.
std::string dump_json(const nlohmann::ordered_json& doc);

}  // namespace qsim
