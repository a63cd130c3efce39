#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "chainprover/verifier.hpp"

namespace chainprover::jsonio {

struct SchemaError : std::runtime_error {
  explicit SchemaError(const std::string& why)
      : std::runtime_error("input schema error: " + why) {}
};

/// Wire form of one instance (one JSONL line).
struct InstanceRecord {
  std::string id;
  std::vector<std::string> premises;
  std::string conclusion;
  std::string label;  // "True" | "False"
  std::vector<std::string> steps;
  std::string answer;  // "True" | "False"
  std::optional<std::vector<std::string>> premises_fol;
  std::optional<std::string> conclusion_fol;
  std::optional<std::vector<std::string>> steps_fol;
  // Fixture extras (mutator output), carried through when present.
  std::optional<std::string> gold_category;
  std::optional<std::vector<std::string>> gold_step_labels;

  bool has_fol() const {
    return premises_fol && conclusion_fol && steps_fol;
  }
};

InstanceRecord record_from_json(const nlohmann::json& j);
nlohmann::json record_to_json(const InstanceRecord& r);

/// Parse and normalize the FOL fields into a verifier Instance.
/// Requires has_fol().
verify::Instance to_instance(const InstanceRecord& r);

/// Wire form of an already-formalized instance; FOL fields are the printed
/// formulas, NL fields fall back to them when no text is attached.
InstanceRecord from_instance(const verify::Instance& inst);

verify::TriLabel trilabel_from_string(const std::string& s);

/// One report JSONL line. The normalized FOL strings feed metric comparison
/// downstream.
nlohmann::json report_to_json(const InstanceRecord& input,
                              const verify::VerificationReport& report);

}  // namespace chainprover::jsonio
