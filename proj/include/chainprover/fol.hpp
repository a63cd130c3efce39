#pragma once

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace chainprover::fol {

// ---------------------------------------------------------------------------
// Errors

struct SyntaxError : std::runtime_error {
  SyntaxError(std::size_t offset, const std::string& expected)
      : std::runtime_error("syntax error at offset " + std::to_string(offset) +
                           ": expected " + expected),
        offset(offset),
        expected(expected) {}
  std::size_t offset;
  std::string expected;
};

struct FreeVariableError : std::runtime_error {
  explicit FreeVariableError(const std::string& name)
      : std::runtime_error("free variable: " + name), name(name) {}
  std::string name;
};

struct ArityMismatchError : std::runtime_error {
  ArityMismatchError(const std::string& pred, int a, int b)
      : std::runtime_error("arity mismatch for predicate '" + pred + "': " +
                           std::to_string(a) + " vs " + std::to_string(b)),
        predicate(pred) {}
  std::string predicate;
};

struct NameCollisionError : std::runtime_error {
  NameCollisionError(const std::string& a, const std::string& b,
                     const std::string& folded)
      : std::runtime_error("names '" + a + "' and '" + b +
                           "' both fold to '" + folded + "'") {}
};

// ---------------------------------------------------------------------------
// Abstract syntax

struct Term {
  enum class Kind { Constant, Variable };
  Kind kind;
  std::string name;

  static Term constant(std::string n) {
    return Term{Kind::Constant, std::move(n)};
  }
  static Term variable(std::string n) {
    return Term{Kind::Variable, std::move(n)};
  }
  bool operator==(const Term& o) const = default;
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable FOL formula node. Binary nodes use left/right; Not and the
/// quantifiers use left only; quantifiers store the bound variable in name.
class Formula {
 public:
  enum class Kind { Atom, Not, And, Or, Implies, Iff, Xor, ForAll, Exists };

  static FormulaPtr atom(std::string pred, std::vector<Term> args = {});
  static FormulaPtr negate(FormulaPtr f);
  static FormulaPtr conj(FormulaPtr l, FormulaPtr r);
  static FormulaPtr disj(FormulaPtr l, FormulaPtr r);
  static FormulaPtr implies(FormulaPtr l, FormulaPtr r);
  static FormulaPtr iff(FormulaPtr l, FormulaPtr r);
  static FormulaPtr exclusive_or(FormulaPtr l, FormulaPtr r);
  static FormulaPtr forall(std::string var, FormulaPtr body);
  static FormulaPtr exists(std::string var, FormulaPtr body);

  Kind kind() const { return kind_; }
  /// Predicate name for atoms, bound variable name for quantifiers.
  const std::string& name() const { return name_; }
  const std::vector<Term>& args() const { return args_; }
  const FormulaPtr& left() const { return left_; }
  const FormulaPtr& right() const { return right_; }

  bool is_binary() const {
    return kind_ == Kind::And || kind_ == Kind::Or || kind_ == Kind::Implies ||
           kind_ == Kind::Iff || kind_ == Kind::Xor;
  }
  bool is_quantifier() const {
    return kind_ == Kind::ForAll || kind_ == Kind::Exists;
  }

 private:
  Formula(Kind kind, std::string name, std::vector<Term> args, FormulaPtr left,
          FormulaPtr right)
      : kind_(kind),
        name_(std::move(name)),
        args_(std::move(args)),
        left_(std::move(left)),
        right_(std::move(right)) {}

  Kind kind_;
  std::string name_;
  std::vector<Term> args_;
  FormulaPtr left_;
  FormulaPtr right_;
};

/// Structural equality.
bool equal(const FormulaPtr& a, const FormulaPtr& b);

// ---------------------------------------------------------------------------
// Signature

struct Signature {
  std::map<std::string, int> predicates;  // name -> arity
  std::set<std::string> constants;

  bool operator==(const Signature&) const = default;
};

/// Union signature over a formula set; throws ArityMismatchError when the
/// same predicate occurs with different arities.
Signature signature_of(const std::vector<FormulaPtr>& formulas);

// ---------------------------------------------------------------------------
// Surface syntax

/// Parse a surface FOL string. Accepts Unicode connectives and ASCII aliases;
/// see docs/fol_grammar.md for the grammar and precedence table.
FormulaPtr parse_formula(const std::string& text);

/// Canonical fully-parenthesized Unicode rendering.
/// parse_formula(print_formula(f)) is structurally equal to f.
std::string print_formula(const FormulaPtr& f);

// ---------------------------------------------------------------------------
// Normalization

/// Eliminate Xor and Iff, fold predicate/constant names to lowercase ASCII.
/// Idempotent; throws NameCollisionError when two distinct source names fold
/// to the same target. When name_map is given, source -> folded names of
/// predicates and constants are recorded into it.
FormulaPtr normalize(const FormulaPtr& f,
                     std::map<std::string, std::string>* name_map = nullptr);

/// True when f contains no Xor and no Iff node.
bool is_normal_form(const FormulaPtr& f);

/// Collect the names of all quantifier-bound variables in f.
std::set<std::string> bound_variables(const FormulaPtr& f);

}  // namespace chainprover::fol
