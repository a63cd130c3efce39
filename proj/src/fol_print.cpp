#include "chainprover/fol.hpp"

namespace chainprover::fol {

namespace {

const char* connective(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::And:
      return "∧";
    case Formula::Kind::Or:
      return "∨";
    case Formula::Kind::Implies:
      return "→";
    case Formula::Kind::Iff:
      return "↔";
    case Formula::Kind::Xor:
      return "⊕";
    default:
      return "?";
  }
}

void print(const FormulaPtr& f, std::string& out) {
  switch (f->kind()) {
    case Formula::Kind::Atom: {
      out += f->name();
      if (!f->args().empty()) {
        out += '(';
        for (std::size_t i = 0; i < f->args().size(); ++i) {
          if (i) out += ", ";
          out += f->args()[i].name;
        }
        out += ')';
      }
      return;
    }
    case Formula::Kind::Not:
      out += "¬";
      print(f->left(), out);
      return;
    case Formula::Kind::ForAll:
    case Formula::Kind::Exists:
      out += f->kind() == Formula::Kind::ForAll ? "∀" : "∃";
      out += f->name();
      out += ' ';
      print(f->left(), out);  // binary bodies bring their own parentheses
      return;
    default: {
      out += '(';
      print(f->left(), out);
      out += ' ';
      out += connective(f->kind());
      out += ' ';
      print(f->right(), out);
      out += ')';
      return;
    }
  }
}

}  // namespace

std::string print_formula(const FormulaPtr& f) {
  std::string out;
  print(f, out);
  return out;
}

}  // namespace chainprover::fol
