#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chainprover/fol.hpp"

namespace chainprover::engine {

struct EngineError : std::runtime_error {
  explicit EngineError(const std::string& what) : std::runtime_error(what) {}
};

struct GroundingBudgetExceeded : EngineError {
  explicit GroundingBudgetExceeded(std::size_t budget)
      : EngineError("ground clause budget exceeded (" +
                    std::to_string(budget) + ")") {}
};

enum class Backend { Internal, External };

struct EngineConfig {
  Backend backend = Backend::Internal;
  std::string prover_command;  // external only; "{timeout_s}" substituted
  int timeout_ms = 10000;
  int skolem_depth_bound = 1;       // internal only
  std::size_t max_ground_clauses = 200000;
};

enum class OutcomeKind { Entailed, NotEntailed, Indeterminate, EngineError };

struct EntailmentOutcome {
  OutcomeKind kind;
  std::string detail;
  bool resource_limited = false;
};

// ---------------------------------------------------------------------------
// Clause representation (Skolemized, quantifier-free)

/// Herbrand term: a constant, a variable, or a Skolem function application.
struct HTerm {
  std::string name;
  std::vector<HTerm> args;
  bool is_var = false;

  bool operator==(const HTerm&) const = default;
};

struct Literal {
  bool positive;
  std::string predicate;
  std::vector<HTerm> args;
};

struct Clause {
  std::vector<Literal> literals;
};

struct ClauseSet {
  std::vector<Clause> clauses;
  std::set<std::string> skolem_constants;
  std::map<std::string, int> skolem_functions;  // name -> arity

  bool function_free() const { return skolem_functions.empty(); }
};

/// NNF -> Skolemize -> CNF (structure-preserving when naive distribution
/// would blow up). Equisatisfiable with the input set.
ClauseSet clausify(const std::vector<fol::FormulaPtr>& formulas);

/// A propositional (ground) clause; literals are signed indices into an
/// atom table maintained by the caller.
struct GroundClause {
  std::vector<int> literals;  // +(atom+1) / -(atom+1)
};

struct GroundProblem {
  std::vector<GroundClause> clauses;
  std::vector<std::string> atoms;  // index -> rendered ground atom
};

/// Instantiate every clause with all Herbrand terms of function-nesting
/// depth <= depth over the signature's constants (plus Skolem symbols).
/// A fresh constant is added when the Herbrand universe would be empty.
GroundProblem ground(const ClauseSet& cs, const fol::Signature& sig, int depth,
                     std::size_t max_ground_clauses = 200000);

struct SatResult {
  bool satisfiable;
  std::vector<bool> model;  // assignment per atom when satisfiable
};

/// Complete DPLL over ground clauses: unit propagation, pure literals,
/// chronological backtracking. deadline, when set, turns the search into a
/// best-effort one: nullopt is returned on expiry.
std::optional<SatResult> sat(
    const GroundProblem& p,
    std::optional<std::chrono::steady_clock::time_point> deadline = {});

/// Decide axioms |= conjecture by refutation. Internal backend grounds over
/// the Herbrand universe; external backend shells out to an ATP over TPTP.
EntailmentOutcome check_entailment(const std::vector<fol::FormulaPtr>& axioms,
                                   const fol::FormulaPtr& conjecture,
                                   const EngineConfig& cfg);

/// Run the external prover on a TPTP document; exposed for tests.
EntailmentOutcome run_external_prover(const std::string& tptp_document,
                                      const EngineConfig& cfg);

}  // namespace chainprover::engine
