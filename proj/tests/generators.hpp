#pragma once

// Seeded random generators shared by the property tests and the acceptance
// binary. Two families:
//  - random_formula: arbitrary closed formulas (all connectives, nested
//    quantifiers) for parse/print round-trips and normalization tests;
//  - random_problem: function-free problems with prefix-only quantifiers
//    (existentials before universals in axioms, the dual in conjectures),
//    sized so the enumeration oracle in oracle.hpp stays tractable.

#include <random>
#include <string>
#include <vector>

#include "chainprover/fol.hpp"

namespace gen {

using chainprover::fol::Formula;
using chainprover::fol::FormulaPtr;
using chainprover::fol::Term;

struct SymbolPool {
  std::vector<std::pair<std::string, int>> predicates;  // name, arity
  std::vector<std::string> constants;
};

inline SymbolPool small_pool(std::mt19937_64& rng) {
  SymbolPool pool;
  static const char* preds[] = {"pra", "prb", "prc", "prd"};
  static const char* consts[] = {"ca", "cb", "cc"};
  int n_preds = 2 + static_cast<int>(rng() % 3);  // 2..4
  bool used_binary = false;
  for (int i = 0; i < n_preds; ++i) {
    int arity = 1 + static_cast<int>(rng() % 2);
    if (arity == 2 && used_binary) arity = 1;  // one binary keeps atoms few
    if (arity == 2) used_binary = true;
    pool.predicates.emplace_back(preds[i], arity);
  }
  int n_consts = 1 + static_cast<int>(rng() % 2);  // 1..2
  for (int i = 0; i < n_consts; ++i) pool.constants.push_back(consts[i]);
  return pool;
}

inline FormulaPtr random_atom(std::mt19937_64& rng, const SymbolPool& pool,
                              const std::vector<std::string>& vars) {
  const auto& [pred, arity] = pool.predicates[rng() % pool.predicates.size()];
  std::vector<Term> args;
  for (int i = 0; i < arity; ++i) {
    bool use_var = !vars.empty() && rng() % 2;
    args.push_back(use_var ? Term::variable(vars[rng() % vars.size()])
                           : Term::constant(
                                 pool.constants[rng() % pool.constants.size()]));
  }
  return Formula::atom(pred, args);
}

/// Quantifier-free boolean combination over in-scope variables.
inline FormulaPtr random_matrix(std::mt19937_64& rng, const SymbolPool& pool,
                                const std::vector<std::string>& vars,
                                int depth) {
  if (depth <= 0 || rng() % 3 == 0) return random_atom(rng, pool, vars);
  switch (rng() % 6) {
    case 0:
      return Formula::negate(random_matrix(rng, pool, vars, depth - 1));
    case 1:
      return Formula::conj(random_matrix(rng, pool, vars, depth - 1),
                           random_matrix(rng, pool, vars, depth - 1));
    case 2:
      return Formula::disj(random_matrix(rng, pool, vars, depth - 1),
                           random_matrix(rng, pool, vars, depth - 1));
    case 3:
      return Formula::implies(random_matrix(rng, pool, vars, depth - 1),
                              random_matrix(rng, pool, vars, depth - 1));
    case 4:
      return Formula::iff(random_matrix(rng, pool, vars, depth - 1),
                          random_matrix(rng, pool, vars, depth - 1));
    default:
      return Formula::exclusive_or(random_matrix(rng, pool, vars, depth - 1),
                                   random_matrix(rng, pool, vars, depth - 1));
  }
}

/// Closed formula with arbitrarily nested quantifiers; exercises the parser,
/// printer and normalizer, not the oracle.
inline FormulaPtr random_formula(std::mt19937_64& rng, const SymbolPool& pool,
                                 std::vector<std::string> vars, int depth) {
  if (depth > 0 && rng() % 4 == 0) {
    std::string var = "v" + std::to_string(vars.size());
    vars.push_back(var);
    FormulaPtr body = random_formula(rng, pool, vars, depth - 1);
    return rng() % 2 ? Formula::forall(var, body) : Formula::exists(var, body);
  }
  return random_matrix(rng, pool, vars, depth);
}

/// Prefix-quantified formula. When exists_first, the prefix is E*A* (axiom
/// polarity); otherwise A*E* (conjecture polarity). Total prefix length <= 2.
inline FormulaPtr random_prefixed(std::mt19937_64& rng, const SymbolPool& pool,
                                  bool exists_first, int matrix_depth) {
  int n_ex = static_cast<int>(rng() % 2);
  int n_all = static_cast<int>(rng() % 2);
  if (n_ex + n_all == 0 && rng() % 2) n_all = 1;
  std::vector<std::string> vars;
  for (int i = 0; i < n_ex + n_all; ++i) vars.push_back("v" + std::to_string(i));
  FormulaPtr f = random_matrix(rng, pool, vars, matrix_depth);
  // innermost quantifier binds the last variable
  if (exists_first) {
    for (int i = n_all; i > 0; --i)
      f = Formula::forall(vars[n_ex + i - 1], f);
    for (int i = n_ex; i > 0; --i) f = Formula::exists(vars[i - 1], f);
  } else {
    for (int i = n_ex; i > 0; --i) f = Formula::exists(vars[n_all + i - 1], f);
    for (int i = n_all; i > 0; --i) f = Formula::forall(vars[i - 1], f);
  }
  return f;
}

/// A conjecture must not have an Exists scoping over a ForAll, or its
/// negation leaves the fragment (Skolem functions appear).
inline bool conjecture_safe(const FormulaPtr& f) {
  bool seen_exists = false;
  for (FormulaPtr cur = f; cur->is_quantifier(); cur = cur->left()) {
    if (cur->kind() == Formula::Kind::Exists)
      seen_exists = true;
    else if (seen_exists)
      return false;
  }
  return true;
}

struct Problem {
  SymbolPool pool;
  std::vector<FormulaPtr> axioms;
  FormulaPtr conjecture;
};

/// Function-free problem in the fragment where depth-0 grounding is complete
/// and the oracle is exact. About a third of the conjectures are sampled to
/// be entailed-leaning (an axiom or a weakening of one).
inline Problem random_problem(std::mt19937_64& rng) {
  Problem p;
  p.pool = small_pool(rng);
  const SymbolPool& pool = p.pool;
  int n_axioms = 1 + static_cast<int>(rng() % 6);
  for (int i = 0; i < n_axioms; ++i)
    p.axioms.push_back(random_prefixed(rng, pool, true, 2));
  switch (rng() % 3) {
    case 0:
      p.conjecture = random_prefixed(rng, pool, false, 2);
      break;
    case 1: {  // weakening of a quantifier-free axiom
      FormulaPtr ax = p.axioms[rng() % p.axioms.size()];
      if (ax->is_quantifier() && !conjecture_safe(ax)) {
        p.conjecture = random_prefixed(rng, pool, false, 2);
      } else if (ax->is_quantifier()) {
        p.conjecture = ax;
      } else {
        std::vector<std::string> no_vars;
        p.conjecture = Formula::disj(ax, random_matrix(rng, pool, no_vars, 1));
      }
      break;
    }
    default: {  // entailed-leaning: restate an axiom when safe
      FormulaPtr ax = p.axioms[rng() % p.axioms.size()];
      p.conjecture =
          conjecture_safe(ax) ? ax : random_prefixed(rng, pool, false, 2);
      break;
    }
  }
  return p;
}

}  // namespace gen
