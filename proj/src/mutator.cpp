#include <random>
#include <set>

#include "chainprover/mutator.hpp"

namespace chainprover::mutator {

using fol::Formula;
using fol::FormulaPtr;
using fol::Term;
using verify::Instance;

const char* to_string(MutationKind kind) {
  switch (kind) {
    case MutationKind::T2:
      return "T2";
    case MutationKind::T3:
      return "T3";
    case MutationKind::T4:
      return "T4";
  }
  return "?";
}

MutationKind mutation_kind_from_string(const std::string& name) {
  if (name == "T2") return MutationKind::T2;
  if (name == "T3") return MutationKind::T3;
  if (name == "T4") return MutationKind::T4;
  throw NotMutableError("unknown mutation kind '" + name + "'");
}

namespace {

class NameGen {
 public:
  explicit NameGen(std::uint64_t seed) : rng_(seed) {}

  std::string fresh() {
    static const std::string consonants = "bdfgklmnprstvz";
    static const std::string vowels = "aeiou";
    for (;;) {
      std::string word;
      for (int s = 0; s < 3; ++s) {
        word += consonants[rng_() % consonants.size()];
        word += vowels[rng_() % vowels.size()];
      }
      if (used_.insert(word).second) return word;
    }
  }

 private:
  std::mt19937_64 rng_;
  std::set<std::string> used_;
};

FormulaPtr ladder_rung(const std::string& lower, const std::string& upper) {
  Term x = Term::variable("x");
  return Formula::forall(
      "x", Formula::implies(Formula::atom(lower, {x}),
                            Formula::atom(upper, {x})));
}

void refresh_text(Instance& inst) {
  inst.premises_text.clear();
  for (const FormulaPtr& p : inst.premises)
    inst.premises_text.push_back(fol::print_formula(p));
  inst.steps_text.clear();
  for (const FormulaPtr& s : inst.steps)
    inst.steps_text.push_back(fol::print_formula(s));
  inst.conclusion_text = fol::print_formula(inst.conclusion);
}

}  // namespace

Instance synthesize_gold(int depth, std::uint64_t seed) {
  if (depth < 2) throw NotMutableError("depth must be at least 2");
  NameGen names(seed);
  std::vector<std::string> preds;
  for (int i = 0; i <= depth; ++i) preds.push_back(names.fresh());
  std::string spare_pred = names.fresh();
  Term c = Term::constant(names.fresh());
  Term d = Term::constant(names.fresh());

  Instance inst;
  inst.id = "gold-" + std::to_string(seed) + "-d" + std::to_string(depth);
  inst.premises.push_back(Formula::atom(preds[0], {c}));
  for (int i = 0; i < depth; ++i)
    inst.premises.push_back(ladder_rung(preds[i], preds[i + 1]));
  inst.premises.push_back(Formula::atom(spare_pred, {d}));
  for (int i = 1; i <= depth; ++i)
    inst.steps.push_back(Formula::atom(preds[i], {c}));
  inst.conclusion = inst.steps.back();
  inst.label = true;
  inst.answer = true;
  refresh_text(inst);
  return inst;
}

Instance mutate(const Instance& chain, const MutationSpec& spec) {
  if (chain.steps.empty()) throw NotMutableError("no steps");
  if (!fol::equal(chain.steps.back(), chain.conclusion))
    throw NotMutableError("final step must restate the conclusion");
  if (chain.premises.size() < 2)
    throw NotMutableError("need at least two premises");

  std::mt19937_64 rng(spec.rng_seed);
  Instance out = chain;
  out.id += std::string("-") + to_string(spec.kind);

  bool drop_final =
      spec.kind == MutationKind::T3 || spec.kind == MutationKind::T4;
  bool insert_false =
      spec.kind == MutationKind::T2 || spec.kind == MutationKind::T4;

  if (drop_final) {
    // Without its final step the chain no longer derives the conclusion;
    // restating the unused spare premise keeps every remaining step True.
    out.steps.pop_back();
    out.steps.push_back(out.premises.back());
  }
  if (insert_false) {
    std::size_t premise_idx = rng() % out.premises.size();
    std::size_t at = rng() % out.steps.size();  // before the final step
    out.steps.insert(out.steps.begin() + at,
                     Formula::negate(out.premises[premise_idx]));
  }
  refresh_text(out);
  return out;
}

}  // namespace chainprover::mutator
