#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "chainprover/engine.hpp"
#include "chainprover/verifier.hpp"

namespace chainprover::metrics {

struct EmptyBatchError : std::runtime_error {
  EmptyBatchError() : std::runtime_error("empty batch") {}
};

struct NoExecutedInstancesError : std::runtime_error {
  NoExecutedInstancesError()
      : std::runtime_error("no executed instances in batch") {}
};

struct LengthMismatchError : std::runtime_error {
  LengthMismatchError(std::size_t a, std::size_t b)
      : std::runtime_error("length mismatch: " + std::to_string(a) + " vs " +
                           std::to_string(b)) {}
};

struct TokenizeError : std::runtime_error {
  explicit TokenizeError(const std::string& why)
      : std::runtime_error("tokenize error: " + why) {}
};

struct EquivalenceUndecidedError : std::runtime_error {
  explicit EquivalenceUndecidedError(const std::string& why)
      : std::runtime_error("equivalence undecided: " + why) {}
};

/// Per-instance execution summary feeding ER/EA.
struct ExecutionRecord {
  bool executed;           // every emitted formula engine-accepted
  bool first_attempt_match;  // conclusion verdict == label on first attempt
};

/// Fraction of instances whose formulas all executed.
double execution_rate(const std::vector<ExecutionRecord>& batch);

/// Among executed instances, fraction whose first-attempt conclusion verdict
/// matched the ground-truth label.
double execution_accuracy(const std::vector<ExecutionRecord>& batch);

/// FOL-aware surface tokens: quantifiers, connectives, parentheses, commas,
/// identifiers (original casing).
std::vector<std::string> fol_tokens(const std::string& surface);

/// BLEU up to 4-grams, uniform weights, add-one smoothing on n >= 2,
/// standard brevity penalty. Inputs are surface strings (print a Formula
/// first when starting from an AST).
double fol_bleu(const std::string& candidate, const std::string& reference);

/// f and g are equivalent iff each entails the other.
bool logical_equivalence(const fol::FormulaPtr& f, const fol::FormulaPtr& g,
                         const engine::EngineConfig& cfg);

/// Unweighted mean of per-class F1 over {True, False, Unknown}; classes
/// absent from both sides are excluded.
double macro_f1(const std::vector<verify::TriLabel>& predicted,
                const std::vector<verify::TriLabel>& gold);

struct ConfusionResult {
  std::array<std::array<int, 7>, 7> matrix;  // [gold][predicted], T1..Error
  double accuracy;
};

ConfusionResult category_confusion(
    const std::vector<verify::Category>& predicted,
    const std::vector<verify::Category>& gold);

}  // namespace chainprover::metrics
