#include "qsim/record_json.hpp"

namespace qsim {

using nlohmann::ordered_json;

ordered_json order_result_to_json(const OrderResult& result) {
  ordered_json doc;
  doc["measured_j"] = result.measured_j;
  doc["second_register_outcome"] = result.second_register_outcome;
  ordered_json fractions = ordered_json::array();
  for (const Fraction& f : result.convergents) {
    fractions.push_back(f.to_string());
  }
  doc["convergents"] = fractions;
  if (result.candidate_r) {
    doc["candidate_r"] = *result.candidate_r;
  } else {
    doc["candidate_r"] = nullptr;
  }
  doc["status"] = order_status_name(result.status);
  return doc;
}

ordered_json attempt_to_json(const FactorAttempt& attempt) {
  ordered_json doc;
  doc["index"] = attempt.index;
  doc["kind"] = attempt_kind_name(attempt.kind);
  doc["base"] = attempt.base;
  doc["chain_base"] = attempt.chain_base;
  doc["accumulated_exponent"] = attempt.accumulated_exponent;
  if (attempt.order) {
    doc["order"] = order_result_to_json(*attempt.order);
  } else {
    doc["order"] = nullptr;
  }
  return doc;
}

ordered_json run_record_to_json(const FactorRunRecord& record) {
  ordered_json doc;
  doc["n_value"] = record.n_value;
  doc["seed"] = record.seed;
  doc["max_attempts"] = record.max_attempts;
  if (record.forced_base) {
    doc["forced_base"] = *record.forced_base;
  } else {
    doc["forced_base"] = nullptr;
  }
  if (record.shortcut) {
    doc["shortcut"] = *record.shortcut;
  } else {
    doc["shortcut"] = nullptr;
  }
  doc["rounds_used"] = record.rounds_used;
  ordered_json attempts = ordered_json::array();
  for (const FactorAttempt& attempt : record.attempts) {
    attempts.push_back(attempt_to_json(attempt));
  }
  doc["attempts"] = attempts;
  if (record.factors) {
    doc["factors"] = ordered_json::array({record.factors->first, record.factors->second});
  } else {
    doc["factors"] = nullptr;
  }
  return doc;
}

std::string dump_json(const ordered_json& doc) { return doc.dump(2) + "\n"; }

}  // namespace qsim
