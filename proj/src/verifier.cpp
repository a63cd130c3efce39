#include "chainprover/verifier.hpp"

namespace chainprover::verify {

using engine::EntailmentOutcome;
using engine::OutcomeKind;
using fol::Formula;
using fol::FormulaPtr;

const char* to_string(TriLabel label) {
  switch (label) {
    case TriLabel::True:
      return "True";
    case TriLabel::False:
      return "False";
    case TriLabel::Unknown:
      return "Unknown";
  }
  return "?";
}

const char* to_string(Category c) {
  switch (c) {
    case Category::T1:
      return "T1";
    case Category::T2:
      return "T2";
    case Category::T3:
      return "T3";
    case Category::T4:
      return "T4";
    case Category::F1:
      return "F1";
    case Category::F2:
      return "F2";
    case Category::Error:
      return "Error";
  }
  return "?";
}

namespace {

// Collapse an engine outcome to "entailed or not" under the policy.
bool entailed(const EntailmentOutcome& outcome, const VerifyOptions& opts,
              Diagnostics* diagnostics) {
  switch (outcome.kind) {
    case OutcomeKind::Entailed:
      return true;
    case OutcomeKind::NotEntailed:
      return false;
    case OutcomeKind::Indeterminate:
      if (opts.policy == Policy::Strict)
        throw engine::EngineError("indeterminate engine outcome (strict): " +
                                  outcome.detail);
      if (diagnostics)
        diagnostics->emplace_back("resource_limited", outcome.detail);
      return false;
    case OutcomeKind::EngineError:
      throw engine::EngineError(outcome.detail);
  }
  return false;
}

}  // namespace

TriLabel verify_single_statement(const std::vector<FormulaPtr>& premises,
                                 const FormulaPtr& statement,
                                 const VerifyOptions& opts,
                                 Diagnostics* diagnostics) {
  bool proves = entailed(
      engine::check_entailment(premises, statement, opts.engine), opts,
      diagnostics);
  bool refutes = entailed(
      engine::check_entailment(premises, Formula::negate(statement),
                               opts.engine),
      opts, diagnostics);
  if (proves && refutes) throw ContradictionError();
  if (proves) return TriLabel::True;
  if (refutes) return TriLabel::False;
  return TriLabel::Unknown;
}

StepsResult verify_reasoning_steps(const Instance& inst,
                                   const VerifyOptions& opts,
                                   Diagnostics* diagnostics) {
  TriLabel conclusion =
      verify_single_statement(inst.premises, inst.conclusion, opts,
                              diagnostics);
  TriLabel expected = inst.label ? TriLabel::True : TriLabel::False;
  if (conclusion != expected) throw LabelMismatchError(conclusion);

  StepsResult res;
  res.answer_correct = inst.label == inst.answer;
  res.step_labels.reserve(inst.steps.size());
  for (const FormulaPtr& step : inst.steps)
    res.step_labels.push_back(
        verify_single_statement(inst.premises, step, opts, diagnostics));
  return res;
}

PathResult verify_proof_path(const Instance& inst,
                             const std::vector<TriLabel>& step_labels,
                             const VerifyOptions& opts,
                             Diagnostics* diagnostics) {
  PathResult res{false, {}};
  std::vector<FormulaPtr> path;
  for (std::size_t i = 0; i < inst.steps.size(); ++i) {
    if (step_labels[i] != TriLabel::True) continue;
    TriLabel novelty =
        verify_single_statement(path, inst.steps[i], opts, diagnostics);
    if (novelty == TriLabel::Unknown) {
      path.push_back(inst.steps[i]);
      res.proof_path.push_back(i);
    } else if (novelty == TriLabel::False && diagnostics) {
      // True-labeled step contradicted by the path so far can only happen
      // when the engine disagrees with itself; skip and record.
      diagnostics->emplace_back("path_contradiction",
                                "step " + std::to_string(i) +
                                    " refuted by the partial proof path");
    }
  }
  TriLabel expected = inst.label ? TriLabel::True : TriLabel::False;
  res.has_valid_proof_path =
      verify_single_statement(path, inst.conclusion, opts, diagnostics) ==
      expected;
  return res;
}

Category classify_chain(bool answer_correct,
                        const std::vector<TriLabel>& step_labels,
                        bool has_valid_proof_path) {
  bool all_true = true;
  for (TriLabel l : step_labels)
    if (l != TriLabel::True) all_true = false;
  if (!answer_correct) return all_true ? Category::F1 : Category::F2;
  if (all_true) return has_valid_proof_path ? Category::T1 : Category::T3;
  return has_valid_proof_path ? Category::T2 : Category::T4;
}

VerificationReport verify_instance(const Instance& inst,
                                   const VerifyOptions& opts) {
  VerificationReport report;
  try {
    StepsResult steps = verify_reasoning_steps(inst, opts, &report.diagnostics);
    PathResult path =
        verify_proof_path(inst, steps.step_labels, opts, &report.diagnostics);
    report.step_labels = std::move(steps.step_labels);
    report.answer_correct = steps.answer_correct;
    report.proof_path = std::move(path.proof_path);
    report.has_valid_proof_path = path.has_valid_proof_path;
    report.category = classify_chain(report.answer_correct, report.step_labels,
                                     report.has_valid_proof_path);
  } catch (const ContradictionError& e) {
    report.category = Category::Error;
    report.diagnostics.emplace_back("contradictory_premises", e.what());
  } catch (const LabelMismatchError& e) {
    report.category = Category::Error;
    report.diagnostics.emplace_back("label_mismatch", e.what());
  } catch (const engine::EngineError& e) {
    report.category = Category::Error;
    report.diagnostics.emplace_back("engine_error", e.what());
  } catch (const std::exception& e) {
    // e.g. arity conflicts between steps and premises
    report.category = Category::Error;
    report.diagnostics.emplace_back("engine_error", e.what());
  }
  return report;
}

}  // namespace chainprover::verify
