#include <cctype>

#include "chainprover/fol.hpp"

namespace chainprover::fol {

namespace {

// Lowercase ASCII fold; non-ASCII bytes and punctuation become underscores.
// A leading non-letter gets an "n" prefix so folded names stay valid functors.
std::string fold_name(const std::string& name) {
  std::string out;
  out.reserve(name.size());
  for (unsigned char c : name) {
    if (std::isalpha(c) && c < 0x80) {
      out += static_cast<char>(std::tolower(c));
    } else if (std::isdigit(c) || c == '_') {
      out += static_cast<char>(c);
    } else {
      out += '_';
    }
  }
  if (out.empty() || !std::isalpha(static_cast<unsigned char>(out[0])))
    out.insert(out.begin(), 'n');
  return out;
}

struct Folder {
  // folded -> source, per category, to detect collisions
  std::map<std::string, std::string> predicates;
  std::map<std::string, std::string> constants;
  std::map<std::string, std::string>* record;

  std::string fold(std::map<std::string, std::string>& seen,
                   const std::string& src) {
    std::string target = fold_name(src);
    auto [it, inserted] = seen.emplace(target, src);
    if (!inserted && it->second != src)
      throw NameCollisionError(it->second, src, target);
    if (record) record->emplace(src, target);
    return target;
  }
};

FormulaPtr eliminate(const FormulaPtr& f) {
  using K = Formula::Kind;
  switch (f->kind()) {
    case K::Atom:
      return f;
    case K::Not:
      return Formula::negate(eliminate(f->left()));
    case K::ForAll:
      return Formula::forall(f->name(), eliminate(f->left()));
    case K::Exists:
      return Formula::exists(f->name(), eliminate(f->left()));
    case K::Xor: {
      FormulaPtr a = eliminate(f->left());
      FormulaPtr b = eliminate(f->right());
      // A ⊕ B  =>  (¬A ∧ B) ∨ (A ∧ ¬B)
      return Formula::disj(Formula::conj(Formula::negate(a), b),
                           Formula::conj(a, Formula::negate(b)));
    }
    case K::Iff: {
      FormulaPtr a = eliminate(f->left());
      FormulaPtr b = eliminate(f->right());
      return Formula::conj(Formula::implies(a, b), Formula::implies(b, a));
    }
    case K::And:
      return Formula::conj(eliminate(f->left()), eliminate(f->right()));
    case K::Or:
      return Formula::disj(eliminate(f->left()), eliminate(f->right()));
    case K::Implies:
      return Formula::implies(eliminate(f->left()), eliminate(f->right()));
  }
  return f;
}

FormulaPtr fold_names(const FormulaPtr& f, Folder& folder,
                      const std::set<std::string>& taken) {
  using K = Formula::Kind;
  switch (f->kind()) {
    case K::Atom: {
      std::string pred = folder.fold(folder.predicates, f->name());
      std::vector<Term> args;
      args.reserve(f->args().size());
      for (const Term& t : f->args()) {
        if (t.kind == Term::Kind::Constant) {
          args.push_back(Term::constant(folder.fold(folder.constants, t.name)));
        } else {
          std::string v = fold_name(t.name);
          while (taken.count(v)) v += "_v";
          args.push_back(Term::variable(v));
        }
      }
      return Formula::atom(std::move(pred), std::move(args));
    }
    case K::Not:
      return Formula::negate(fold_names(f->left(), folder, taken));
    case K::ForAll:
    case K::Exists: {
      std::string v = fold_name(f->name());
      while (taken.count(v)) v += "_v";
      FormulaPtr body = fold_names(f->left(), folder, taken);
      return f->kind() == K::ForAll ? Formula::forall(v, std::move(body))
                                    : Formula::exists(v, std::move(body));
    }
    default: {
      FormulaPtr l = fold_names(f->left(), folder, taken);
      FormulaPtr r = fold_names(f->right(), folder, taken);
      switch (f->kind()) {
        case K::And:
          return Formula::conj(l, r);
        case K::Or:
          return Formula::disj(l, r);
        case K::Implies:
          return Formula::implies(l, r);
        default:
          return Formula::iff(l, r);  // unreachable after eliminate()
      }
    }
  }
}

void collect_folded_symbols(const FormulaPtr& f, std::set<std::string>& out) {
  if (!f) return;
  if (f->kind() == Formula::Kind::Atom) {
    out.insert(fold_name(f->name()));
    for (const Term& t : f->args())
      if (t.kind == Term::Kind::Constant) out.insert(fold_name(t.name));
    return;
  }
  collect_folded_symbols(f->left(), out);
  collect_folded_symbols(f->right(), out);
}

}  // namespace

FormulaPtr normalize(const FormulaPtr& f,
                     std::map<std::string, std::string>* name_map) {
  FormulaPtr structural = eliminate(f);
  // Variables must stay disjoint from folded predicate/constant names.
  std::set<std::string> taken;
  collect_folded_symbols(structural, taken);
  Folder folder{{}, {}, name_map};
  return fold_names(structural, folder, taken);
}

}  // namespace chainprover::fol
