#include "chainprover/fol.hpp"

namespace chainprover::fol {

namespace {

FormulaPtr wrap(Formula&& f) {
  return std::make_shared<const Formula>(std::move(f));
}

}  // namespace

FormulaPtr Formula::atom(std::string pred, std::vector<Term> args) {
  return wrap(
      Formula(Kind::Atom, std::move(pred), std::move(args), nullptr, nullptr));
}
FormulaPtr Formula::negate(FormulaPtr f) {
  return wrap(Formula(Kind::Not, {}, {}, std::move(f), nullptr));
}
FormulaPtr Formula::conj(FormulaPtr l, FormulaPtr r) {
  return wrap(Formula(Kind::And, {}, {}, std::move(l), std::move(r)));
}
FormulaPtr Formula::disj(FormulaPtr l, FormulaPtr r) {
  return wrap(Formula(Kind::Or, {}, {}, std::move(l), std::move(r)));
}
FormulaPtr Formula::implies(FormulaPtr l, FormulaPtr r) {
  return wrap(Formula(Kind::Implies, {}, {}, std::move(l), std::move(r)));
}
FormulaPtr Formula::iff(FormulaPtr l, FormulaPtr r) {
  return wrap(Formula(Kind::Iff, {}, {}, std::move(l), std::move(r)));
}
FormulaPtr Formula::exclusive_or(FormulaPtr l, FormulaPtr r) {
  return wrap(Formula(Kind::Xor, {}, {}, std::move(l), std::move(r)));
}
FormulaPtr Formula::forall(std::string var, FormulaPtr body) {
  return wrap(Formula(Kind::ForAll, std::move(var), {}, std::move(body), nullptr));
}
FormulaPtr Formula::exists(std::string var, FormulaPtr body) {
  return wrap(Formula(Kind::Exists, std::move(var), {}, std::move(body), nullptr));
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind() != b->kind()) return false;
  if (a->name() != b->name()) return false;
  if (a->args() != b->args()) return false;
  return equal(a->left(), b->left()) && equal(a->right(), b->right());
}

namespace {

void collect_signature(const FormulaPtr& f, Signature& sig) {
  if (!f) return;
  if (f->kind() == Formula::Kind::Atom) {
    int arity = static_cast<int>(f->args().size());
    auto [it, inserted] = sig.predicates.emplace(f->name(), arity);
    if (!inserted && it->second != arity)
      throw ArityMismatchError(f->name(), it->second, arity);
    for (const Term& t : f->args())
      if (t.kind == Term::Kind::Constant) sig.constants.insert(t.name);
    return;
  }
  collect_signature(f->left(), sig);
  collect_signature(f->right(), sig);
}

}  // namespace

Signature signature_of(const std::vector<FormulaPtr>& formulas) {
  Signature sig;
  for (const auto& f : formulas) collect_signature(f, sig);
  return sig;
}

std::set<std::string> bound_variables(const FormulaPtr& f) {
  std::set<std::string> out;
  if (!f) return out;
  if (f->is_quantifier()) out.insert(f->name());
  for (const auto& child : {f->left(), f->right()}) {
    for (auto& n : bound_variables(child)) out.insert(n);
  }
  return out;
}

bool is_normal_form(const FormulaPtr& f) {
  if (!f) return true;
  if (f->kind() == Formula::Kind::Xor || f->kind() == Formula::Kind::Iff)
    return false;
  return is_normal_form(f->left()) && is_normal_form(f->right());
}

}  // namespace chainprover::fol
