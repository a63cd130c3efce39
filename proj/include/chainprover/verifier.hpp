#pragma once

#include <string>
#include <vector>

#include "chainprover/engine.hpp"
#include "chainprover/fol.hpp"

namespace chainprover::verify {

enum class TriLabel { True, False, Unknown };

const char* to_string(TriLabel label);

struct ContradictionError : std::runtime_error {
  ContradictionError() : std::runtime_error("contradiction in premises") {}
};

struct LabelMismatchError : std::runtime_error {
  explicit LabelMismatchError(TriLabel verified)
      : std::runtime_error(
            std::string("conclusion verifies as ") + to_string(verified) +
            ", contradicting the ground-truth label"),
        verified(verified) {}
  TriLabel verified;
};

struct Instance {
  std::string id;
  std::vector<fol::FormulaPtr> premises;
  fol::FormulaPtr conclusion;
  bool label;  // ground truth: true <=> "True"
  std::vector<fol::FormulaPtr> steps;
  bool answer;  // model's predicted answer
  // Optional parallel natural-language forms.
  std::vector<std::string> premises_text;
  std::string conclusion_text;
  std::vector<std::string> steps_text;
};

enum class Category { T1, T2, T3, T4, F1, F2, Error };

const char* to_string(Category c);

using Diagnostics = std::vector<std::pair<std::string, std::string>>;

struct VerificationReport {
  std::vector<TriLabel> step_labels;
  bool answer_correct = false;
  std::vector<std::size_t> proof_path;  // 0-based step indices
  bool has_valid_proof_path = false;
  Category category = Category::Error;
  Diagnostics diagnostics;
};

enum class Policy { Lenient, Strict };

struct VerifyOptions {
  engine::EngineConfig engine;
  Policy policy = Policy::Lenient;
};

/// Three-valued verdict for one statement against a premise set. Throws
/// ContradictionError when both s and ¬s are entailed. Under the lenient
/// policy an Indeterminate engine outcome counts as non-entailed and a
/// resource diagnostic is recorded; under the strict policy it throws
/// EngineError.
TriLabel verify_single_statement(const std::vector<fol::FormulaPtr>& premises,
                                 const fol::FormulaPtr& statement,
                                 const VerifyOptions& opts,
                                 Diagnostics* diagnostics = nullptr);

struct StepsResult {
  bool answer_correct;
  std::vector<TriLabel> step_labels;
};

/// Gate on the conclusion verifying as the ground-truth label, then label
/// each step independently against the premises.
StepsResult verify_reasoning_steps(const Instance& inst,
                                   const VerifyOptions& opts,
                                   Diagnostics* diagnostics = nullptr);

struct PathResult {
  bool has_valid_proof_path;
  std::vector<std::size_t> proof_path;
};

/// Greedy proof-path construction: a True step joins the path iff it is not
/// already entailed by the path built so far.
PathResult verify_proof_path(const Instance& inst,
                             const std::vector<TriLabel>& step_labels,
                             const VerifyOptions& opts,
                             Diagnostics* diagnostics = nullptr);

/// Six-way classification. A step is erroneous iff its label is False or
/// Unknown.
Category classify_chain(bool answer_correct,
                        const std::vector<TriLabel>& step_labels,
                        bool has_valid_proof_path);

/// Full pipeline for one instance; all failures fold into category Error
/// with diagnostics.
VerificationReport verify_instance(const Instance& inst,
                                   const VerifyOptions& opts);

}  // namespace chainprover::verify
