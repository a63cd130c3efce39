#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chainprover/fol.hpp"

namespace chainprover::tptp {

struct InvalidNameError : std::runtime_error {
  explicit InvalidNameError(const std::string& name)
      : std::runtime_error("invalid TPTP name: " + name) {}
};

struct UnnormalizedFormulaError : std::runtime_error {
  UnnormalizedFormulaError()
      : std::runtime_error("formula contains Xor/Iff; normalize first") {}
};

enum class Role { Axiom, Conjecture };

struct TptpProblem {
  std::vector<std::pair<std::string, fol::FormulaPtr>> axioms;
  std::pair<std::string, fol::FormulaPtr> conjecture;  // name empty if absent
  bool has_conjecture() const { return !conjecture.first.empty(); }
};

/// Build a problem with axioms named premise_1..premise_n and the conjecture
/// named "conclusion". Formulas must already be normalized.
TptpProblem make_problem(const std::vector<fol::FormulaPtr>& premises,
                         const fol::FormulaPtr& conclusion);

/// One FOF annotated formula: "fof(name, role, <tptp formula>)."
std::string to_fof_line(const std::string& name, Role role,
                        const fol::FormulaPtr& f);

/// Newline-joined FOF document, axioms in order, conjecture last.
std::string emit_problem(const TptpProblem& p);

/// Bounded best-effort syntax repair on a raw FOL surface string. Returns the
/// input unchanged when it already parses. Applied rewrites, if any, are
/// appended to *applied.
std::string repair(const std::string& text,
                   std::vector<std::string>* applied = nullptr);

enum class SzsStatus {
  Theorem,
  CounterSatisfiable,
  Satisfiable,
  Timeout,
  GaveUp,
  Error,
  Unparsed,
};

struct SzsOutcome {
  SzsStatus status;
  std::string raw_line;
};

/// Scan prover stdout for the first "SZS status <word>" line.
SzsOutcome parse_szs(const std::string& output);

}  // namespace chainprover::tptp
