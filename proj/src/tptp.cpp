#include <cctype>
#include <map>
#include <sstream>

#include "chainprover/tptp.hpp"

namespace chainprover::tptp {

using fol::Formula;
using fol::FormulaPtr;
using fol::Term;

namespace {

bool is_lower_word(const std::string& s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0])))
    return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

// TPTP variables are upper_words. Variables keep their surface name
// uppercased; collisions within one formula get numeric suffixes.
class VarNames {
 public:
  std::string name_for(const std::string& var) {
    auto it = assigned_.find(var);
    if (it != assigned_.end()) return it->second;
    std::string base = var;
    for (char& c : base) c = static_cast<char>(std::toupper(
                             static_cast<unsigned char>(c)));
    if (base.empty() || !std::isupper(static_cast<unsigned char>(base[0])))
      base = "X" + base;
    std::string candidate = base;
    int k = 0;
    while (used_.count(candidate)) candidate = base + std::to_string(++k);
    used_.insert(candidate);
    assigned_.emplace(var, candidate);
    return candidate;
  }

 private:
  std::map<std::string, std::string> assigned_;
  std::set<std::string> used_;
};

void render(const FormulaPtr& f, VarNames& vars, std::string& out) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
      if (!is_lower_word(f->name())) throw InvalidNameError(f->name());
      out += f->name();
      if (!f->args().empty()) {
        out += '(';
        for (std::size_t i = 0; i < f->args().size(); ++i) {
          if (i) out += ",";
          const Term& t = f->args()[i];
          if (t.kind == Term::Kind::Variable) {
            out += vars.name_for(t.name);
          } else {
            if (!is_lower_word(t.name)) throw InvalidNameError(t.name);
            out += t.name;
          }
        }
        out += ')';
      }
      return;
    case Formula::Kind::Not:
      out += "~(";
      render(f->left(), vars, out);
      out += ')';
      return;
    case Formula::Kind::ForAll:
    case Formula::Kind::Exists:
      out += f->kind() == Formula::Kind::ForAll ? "![" : "?[";
      out += vars.name_for(f->name());
      out += "]: ";
      // binary bodies carry their own parentheses
      render(f->left(), vars, out);
      return;
    case Formula::Kind::Xor:
    case Formula::Kind::Iff:
      throw UnnormalizedFormulaError();
    default: {
      const char* op = f->kind() == Formula::Kind::And   ? " & "
                       : f->kind() == Formula::Kind::Or  ? " | "
                                                         : " => ";
      out += '(';
      render(f->left(), vars, out);
      out += op;
      render(f->right(), vars, out);
      out += ')';
      return;
    }
  }
}

}  // namespace

std::string to_fof_line(const std::string& name, Role role,
                        const FormulaPtr& f) {
  if (!is_lower_word(name)) throw InvalidNameError(name);
  if (!fol::is_normal_form(f)) throw UnnormalizedFormulaError();
  std::string out = "fof(" + name + ", ";
  out += role == Role::Axiom ? "axiom" : "conjecture";
  out += ", ";
  VarNames vars;
  render(f, vars, out);
  out += ").";
  return out;
}

TptpProblem make_problem(const std::vector<FormulaPtr>& premises,
                         const FormulaPtr& conclusion) {
  TptpProblem p;
  for (std::size_t i = 0; i < premises.size(); ++i)
    p.axioms.emplace_back("premise_" + std::to_string(i + 1), premises[i]);
  if (conclusion) p.conjecture = {"conclusion", conclusion};
  return p;
}

std::string emit_problem(const TptpProblem& p) {
  std::string out;
  for (const auto& [name, f] : p.axioms)
    out += to_fof_line(name, Role::Axiom, f) + "\n";
  if (p.has_conjecture())
    out += to_fof_line(p.conjecture.first, Role::Conjecture,
                       p.conjecture.second) +
           "\n";
  return out;
}

namespace {

bool parses(const std::string& s) {
  try {
    fol::parse_formula(s);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

void replace_all(std::string& s, const std::string& from,
                 const std::string& to) {
  std::size_t pos = 0;
  while ((pos = s.find(from, pos)) != std::string::npos) {
    s.replace(pos, from.size(), to);
    pos += to.size();
  }
}

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

std::string repair(const std::string& text, std::vector<std::string>* applied) {
  if (parses(text)) return text;
  std::string s = text;
  auto note = [&](const char* what) {
    if (applied) applied->push_back(what);
  };

  if (s.find("<=>") != std::string::npos) {
    replace_all(s, "<=>", "↔");
    note("rewrote '<=>' to '↔'");
  }
  if (s.find("&&") != std::string::npos) {
    replace_all(s, "&&", "&");
    note("collapsed '&&'");
  }
  if (s.find("||") != std::string::npos) {
    replace_all(s, "||", "|");
    note("collapsed '||'");
  }
  if (s.find('^') != std::string::npos) {
    replace_all(s, "^", "∧");
    note("rewrote '^' to '∧'");
  }
  // A lone 'v' between words is disjunction.
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != 'v') continue;
    bool left_ok = i > 0 && s[i - 1] == ' ';
    bool right_ok = i + 1 < s.size() && s[i + 1] == ' ';
    bool isolated = (i == 0 || !is_word_char(s[i - 1])) &&
                    (i + 1 >= s.size() || !is_word_char(s[i + 1]));
    if (left_ok && right_ok && isolated) {
      s.replace(i, 1, "∨");
      note("rewrote infix 'v' to '∨'");
      i += 2;
    }
  }

  // Balance parentheses, at most two appended or stripped.
  long depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
  }
  if (depth > 0 && depth <= 2) {
    s.append(static_cast<std::size_t>(depth), ')');
    note("appended trailing ')'");
  } else if (depth < 0 && depth >= -2) {
    long extra = -depth;
    while (extra > 0 && !s.empty() && s.back() == ')') {
      s.pop_back();
      --extra;
    }
    note("stripped trailing ')'");
  }
  return s;
}

SzsOutcome parse_szs(const std::string& output) {
  std::istringstream in(output);
  std::string line;
  static const std::pair<const char*, SzsStatus> kStatuses[] = {
      {"Theorem", SzsStatus::Theorem},
      {"CounterSatisfiable", SzsStatus::CounterSatisfiable},
      {"Satisfiable", SzsStatus::Satisfiable},
      {"Timeout", SzsStatus::Timeout},
      {"GaveUp", SzsStatus::GaveUp},
  };
  while (std::getline(in, line)) {
    std::size_t at = line.find("SZS status ");
    if (at == std::string::npos) continue;
    std::size_t start = at + 11;
    std::size_t end = start;
    while (end < line.size() && is_word_char(line[end])) ++end;
    std::string word = line.substr(start, end - start);
    for (const auto& [name, status] : kStatuses)
      if (word == name) return {status, line};
    return {SzsStatus::Error, line};
  }
  return {SzsStatus::Unparsed, ""};
}

}  // namespace chainprover::tptp
