#include <functional>

#include "chainprover/engine.hpp"

namespace chainprover::engine {

using fol::Formula;
using fol::FormulaPtr;
using fol::Term;

namespace {

// NNF node restricted to literals/and/or plus quantifiers.
FormulaPtr nnf(const FormulaPtr& f, bool negated) {
  using K = Formula::Kind;
  switch (f->kind()) {
    case K::Atom:
      return negated ? Formula::negate(f) : f;
    case K::Not:
      return nnf(f->left(), !negated);
    case K::And: {
      FormulaPtr l = nnf(f->left(), negated);
      FormulaPtr r = nnf(f->right(), negated);
      return negated ? Formula::disj(l, r) : Formula::conj(l, r);
    }
    case K::Or: {
      FormulaPtr l = nnf(f->left(), negated);
      FormulaPtr r = nnf(f->right(), negated);
      return negated ? Formula::conj(l, r) : Formula::disj(l, r);
    }
    case K::Implies: {
      FormulaPtr l = nnf(f->left(), !negated);
      FormulaPtr r = nnf(f->right(), negated);
      return negated ? Formula::conj(l, r) : Formula::disj(l, r);
    }
    case K::Iff: {
      // (a<->b) == (a->b) & (b->a); expand then recurse.
      FormulaPtr expanded =
          Formula::conj(Formula::implies(f->left(), f->right()),
                        Formula::implies(f->right(), f->left()));
      return nnf(expanded, negated);
    }
    case K::Xor: {
      FormulaPtr expanded = Formula::disj(
          Formula::conj(Formula::negate(f->left()), f->right()),
          Formula::conj(f->left(), Formula::negate(f->right())));
      return nnf(expanded, negated);
    }
    case K::ForAll: {
      FormulaPtr body = nnf(f->left(), negated);
      return negated ? Formula::exists(f->name(), body)
                     : Formula::forall(f->name(), body);
    }
    case K::Exists: {
      FormulaPtr body = nnf(f->left(), negated);
      return negated ? Formula::forall(f->name(), body)
                     : Formula::exists(f->name(), body);
    }
  }
  return f;
}

struct SkolemState {
  ClauseSet* out;
  int counter = 0;
  int var_counter = 0;
  int def_counter = 0;
};

// Matrix formula after Skolemization: literals over HTerms, And/Or only.
struct Matrix {
  enum class Kind { Lit, And, Or };
  Kind kind;
  Literal lit;
  std::vector<Matrix> children;
};

HTerm term_for(const Term& t,
               const std::map<std::string, HTerm>& substitution) {
  if (t.kind == Term::Kind::Variable) {
    auto it = substitution.find(t.name);
    if (it != substitution.end()) return it->second;
    return HTerm{t.name, {}, true};
  }
  return HTerm{t.name, {}, false};
}

Matrix skolemize(const FormulaPtr& f, std::map<std::string, HTerm>& subst,
                 std::vector<HTerm>& universals, SkolemState& st) {
  using K = Formula::Kind;
  switch (f->kind()) {
    case K::Atom: {
      Literal lit{true, f->name(), {}};
      for (const Term& t : f->args()) lit.args.push_back(term_for(t, subst));
      return Matrix{Matrix::Kind::Lit, std::move(lit), {}};
    }
    case K::Not: {
      Matrix m = skolemize(f->left(), subst, universals, st);
      m.lit.positive = false;  // NNF guarantees the child is an atom
      return m;
    }
    case K::And:
    case K::Or: {
      Matrix m{f->kind() == K::And ? Matrix::Kind::And : Matrix::Kind::Or,
               {},
               {}};
      m.children.push_back(skolemize(f->left(), subst, universals, st));
      m.children.push_back(skolemize(f->right(), subst, universals, st));
      return m;
    }
    case K::ForAll: {
      std::string fresh = "V" + std::to_string(++st.var_counter);
      HTerm var{fresh, {}, true};
      auto saved = subst.find(f->name()) != subst.end()
                       ? std::optional<HTerm>(subst[f->name()])
                       : std::nullopt;
      subst[f->name()] = var;
      universals.push_back(var);
      Matrix m = skolemize(f->left(), subst, universals, st);
      universals.pop_back();
      if (saved) subst[f->name()] = *saved; else subst.erase(f->name());
      return m;
    }
    case K::Exists: {
      std::string sk = "sk" + std::to_string(++st.counter);
      HTerm witness;
      if (universals.empty()) {
        witness = HTerm{sk, {}, false};
        st.out->skolem_constants.insert(sk);
      } else {
        witness = HTerm{sk, universals, false};
        st.out->skolem_functions[sk] = static_cast<int>(universals.size());
      }
      auto saved = subst.find(f->name()) != subst.end()
                       ? std::optional<HTerm>(subst[f->name()])
                       : std::nullopt;
      subst[f->name()] = witness;
      Matrix m = skolemize(f->left(), subst, universals, st);
      if (saved) subst[f->name()] = *saved; else subst.erase(f->name());
      return m;
    }
    default:
      throw EngineError("clausify: unexpected connective after NNF");
  }
}

std::vector<HTerm> free_vars(const Matrix& m) {
  std::vector<HTerm> out;
  std::set<std::string> seen;
  std::function<void(const HTerm&)> scan_term = [&](const HTerm& t) {
    if (t.is_var && seen.insert(t.name).second) out.push_back(t);
    for (const HTerm& a : t.args) scan_term(a);
  };
  std::function<void(const Matrix&)> scan = [&](const Matrix& n) {
    if (n.kind == Matrix::Kind::Lit) {
      for (const HTerm& a : n.lit.args) scan_term(a);
      return;
    }
    for (const Matrix& c : n.children) scan(c);
  };
  scan(m);
  return out;
}

std::vector<Clause> to_cnf(const Matrix& m, SkolemState& st);

// CNF of an Or node; switches to a definitional split when plain
// distribution would exceed 4x growth.
std::vector<Clause> or_cnf(const Matrix& m, SkolemState& st) {
  std::vector<Clause> left = to_cnf(m.children[0], st);
  std::vector<Clause> right = to_cnf(m.children[1], st);
  if (left.size() * right.size() > 4 * (left.size() + right.size())) {
    // Define the larger side with a fresh predicate over its free variables.
    const Matrix& big = left.size() >= right.size() ? m.children[0]
                                                    : m.children[1];
    std::vector<Clause>& big_cnf = left.size() >= right.size() ? left : right;
    std::vector<Clause>& small_cnf = left.size() >= right.size() ? right
                                                                 : left;
    std::vector<HTerm> vars = free_vars(big);
    std::string def = "def" + std::to_string(++st.def_counter);
    Literal def_pos{true, def, vars};
    Literal def_neg{false, def, vars};
    for (Clause& c : big_cnf) {
      c.literals.push_back(def_neg);  // def -> clause
      st.out->clauses.push_back(std::move(c));
    }
    std::vector<Clause> out;
    for (const Clause& c : small_cnf) {
      Clause merged = c;
      merged.literals.push_back(def_pos);
      out.push_back(std::move(merged));
    }
    return out;
  }
  std::vector<Clause> out;
  out.reserve(left.size() * right.size());
  for (const Clause& a : left) {
    for (const Clause& b : right) {
      Clause c = a;
      c.literals.insert(c.literals.end(), b.literals.begin(),
                        b.literals.end());
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<Clause> to_cnf(const Matrix& m, SkolemState& st) {
  switch (m.kind) {
    case Matrix::Kind::Lit:
      return {Clause{{m.lit}}};
    case Matrix::Kind::And: {
      std::vector<Clause> out = to_cnf(m.children[0], st);
      std::vector<Clause> rest = to_cnf(m.children[1], st);
      out.insert(out.end(), rest.begin(), rest.end());
      return out;
    }
    case Matrix::Kind::Or:
      return or_cnf(m, st);
  }
  return {};
}

}  // namespace

ClauseSet clausify(const std::vector<FormulaPtr>& formulas) {
  ClauseSet cs;
  SkolemState st{&cs};
  for (const FormulaPtr& f : formulas) {
    FormulaPtr in_nnf = nnf(f, false);
    std::map<std::string, HTerm> subst;
    std::vector<HTerm> universals;
    Matrix m = skolemize(in_nnf, subst, universals, st);
    for (Clause& c : to_cnf(m, st)) cs.clauses.push_back(std::move(c));
  }
  return cs;
}

}  // namespace chainprover::engine
