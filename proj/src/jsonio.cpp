#include "chainprover/jsonio.hpp"

namespace chainprover::jsonio {

using nlohmann::json;
using verify::TriLabel;

namespace {

std::string require_string(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string())
    throw SchemaError(std::string("missing or non-string field '") + key + "'");
  return j[key].get<std::string>();
}

std::vector<std::string> require_string_array(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw SchemaError(std::string("missing or non-array field '") + key + "'");
  std::vector<std::string> out;
  for (const json& item : j[key]) {
    if (!item.is_string())
      throw SchemaError(std::string("non-string element in '") + key + "'");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::string check_truth_word(const std::string& s, const char* key) {
  if (s != "True" && s != "False")
    throw SchemaError(std::string("field '") + key +
                      "' must be \"True\" or \"False\", got \"" + s + "\"");
  return s;
}

}  // namespace

InstanceRecord record_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("line is not a JSON object");
  InstanceRecord r;
  r.id = require_string(j, "id");
  r.premises = require_string_array(j, "premises");
  r.conclusion = require_string(j, "conclusion");
  r.label = check_truth_word(require_string(j, "label"), "label");
  r.steps = require_string_array(j, "steps");
  r.answer = check_truth_word(require_string(j, "answer"), "answer");
  if (j.contains("premises_fol"))
    r.premises_fol = require_string_array(j, "premises_fol");
  if (j.contains("conclusion_fol"))
    r.conclusion_fol = require_string(j, "conclusion_fol");
  if (j.contains("steps_fol")) r.steps_fol = require_string_array(j, "steps_fol");
  if (j.contains("gold_category"))
    r.gold_category = require_string(j, "gold_category");
  if (j.contains("gold_step_labels"))
    r.gold_step_labels = require_string_array(j, "gold_step_labels");
  if (r.premises_fol && r.premises_fol->size() != r.premises.size())
    throw SchemaError("premises_fol not parallel to premises");
  if (r.steps_fol && r.steps_fol->size() != r.steps.size())
    throw SchemaError("steps_fol not parallel to steps");
  return r;
}

json record_to_json(const InstanceRecord& r) {
  json j{{"id", r.id},           {"premises", r.premises},
         {"conclusion", r.conclusion}, {"label", r.label},
         {"steps", r.steps},     {"answer", r.answer}};
  if (r.premises_fol) j["premises_fol"] = *r.premises_fol;
  if (r.conclusion_fol) j["conclusion_fol"] = *r.conclusion_fol;
  if (r.steps_fol) j["steps_fol"] = *r.steps_fol;
  if (r.gold_category) j["gold_category"] = *r.gold_category;
  if (r.gold_step_labels) j["gold_step_labels"] = *r.gold_step_labels;
  return j;
}

verify::Instance to_instance(const InstanceRecord& r) {
  if (!r.has_fol()) throw SchemaError("instance '" + r.id + "' lacks FOL fields");
  verify::Instance inst;
  inst.id = r.id;
  try {
    for (const std::string& s : *r.premises_fol)
      inst.premises.push_back(fol::normalize(fol::parse_formula(s)));
    inst.conclusion = fol::normalize(fol::parse_formula(*r.conclusion_fol));
    for (const std::string& s : *r.steps_fol)
      inst.steps.push_back(fol::normalize(fol::parse_formula(s)));
  } catch (const std::exception& e) {
    throw SchemaError("instance '" + r.id + "': " + e.what());
  }
  inst.label = r.label == "True";
  inst.answer = r.answer == "True";
  inst.premises_text = r.premises;
  inst.conclusion_text = r.conclusion;
  inst.steps_text = r.steps;
  return inst;
}

InstanceRecord from_instance(const verify::Instance& inst) {
  InstanceRecord r;
  r.id = inst.id;
  std::vector<std::string> premises_fol, steps_fol;
  for (const fol::FormulaPtr& p : inst.premises)
    premises_fol.push_back(fol::print_formula(p));
  for (const fol::FormulaPtr& s : inst.steps)
    steps_fol.push_back(fol::print_formula(s));
  r.premises_fol = premises_fol;
  r.conclusion_fol = fol::print_formula(inst.conclusion);
  r.steps_fol = steps_fol;
  r.premises = inst.premises_text.empty() ? premises_fol : inst.premises_text;
  r.conclusion =
      inst.conclusion_text.empty() ? *r.conclusion_fol : inst.conclusion_text;
  r.steps = inst.steps_text.empty() ? steps_fol : inst.steps_text;
  r.label = inst.label ? "True" : "False";
  r.answer = inst.answer ? "True" : "False";
  return r;
}

TriLabel trilabel_from_string(const std::string& s) {
  if (s == "True") return TriLabel::True;
  if (s == "False") return TriLabel::False;
  if (s == "Unknown") return TriLabel::Unknown;
  throw SchemaError("bad step label \"" + s + "\"");
}

json report_to_json(const InstanceRecord& input,
                    const verify::VerificationReport& report) {
  json labels = json::array();
  for (TriLabel l : report.step_labels) labels.push_back(verify::to_string(l));
  json diagnostics = json::array();
  for (const auto& [code, message] : report.diagnostics)
    diagnostics.push_back({{"code", code}, {"message", message}});
  json j{{"id", input.id},
         {"category", verify::to_string(report.category)},
         {"step_labels", labels},
         {"answer_correct", report.answer_correct},
         {"proof_path", report.proof_path},
         {"has_valid_proof_path", report.has_valid_proof_path},
         {"diagnostics", diagnostics}};
  if (input.premises_fol) j["premises_fol"] = *input.premises_fol;
  if (input.conclusion_fol) j["conclusion_fol"] = *input.conclusion_fol;
  if (input.steps_fol) j["steps_fol"] = *input.steps_fol;
  if (input.gold_category) j["gold_category"] = *input.gold_category;
  if (input.gold_step_labels) j["gold_step_labels"] = *input.gold_step_labels;
  return j;
}

}  // namespace chainprover::jsonio
