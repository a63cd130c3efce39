#include <cctype>
#include <optional>

#include "chainprover/fol.hpp"

namespace chainprover::fol {

namespace {

enum class Tok {
  Ident,
  LParen,
  RParen,
  Comma,
  Not,
  And,
  Or,
  Xor,
  Implies,
  Iff,
  ForAll,
  Exists,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    std::size_t at = pos_;
    if (pos_ >= src_.size()) return {Tok::End, "", at};

    // Unicode connectives (UTF-8).
    static const struct {
      const char* bytes;
      Tok tok;
    } kUnicode[] = {
        {"∀", Tok::ForAll}, {"∃", Tok::Exists}, {"∧", Tok::And},
        {"∨", Tok::Or},     {"¬", Tok::Not},    {"→", Tok::Implies},
        {"↔", Tok::Iff},    {"⊕", Tok::Xor},
    };
    for (const auto& u : kUnicode) {
      std::size_t len = std::char_traits<char>::length(u.bytes);
      if (src_.compare(pos_, len, u.bytes) == 0) {
        pos_ += len;
        return {u.tok, u.bytes, at};
      }
    }

    char c = src_[pos_];
    switch (c) {
      case '(':
        ++pos_;
        return {Tok::LParen, "(", at};
      case ')':
        ++pos_;
        return {Tok::RParen, ")", at};
      case ',':
        ++pos_;
        return {Tok::Comma, ",", at};
      case '&':
        ++pos_;
        return {Tok::And, "&", at};
      case '|':
        ++pos_;
        return {Tok::Or, "|", at};
      case '~':
        ++pos_;
        return {Tok::Not, "~", at};
      case '-':
        if (src_.compare(pos_, 2, "->") == 0) {
          pos_ += 2;
          return {Tok::Implies, "->", at};
        }
        throw SyntaxError(at, "connective");
      case '<':
        if (src_.compare(pos_, 3, "<->") == 0) {
          pos_ += 3;
          return {Tok::Iff, "<->", at};
        }
        if (src_.compare(pos_, 3, "<~>") == 0) {
          pos_ += 3;
          return {Tok::Xor, "<~>", at};
        }
        throw SyntaxError(at, "'<->' or '<~>' (comparisons are not FOL)");
      case '=':
      case '>':
        throw SyntaxError(at,
                          "formula (equality/arithmetic is not supported)");
      default:
        break;
    }

    if (is_ident_char(c) || static_cast<unsigned char>(c) >= 0x80) {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (is_ident_char(src_[pos_]) ||
              static_cast<unsigned char>(src_[pos_]) >= 0x80))
        ++pos_;
      std::string word = src_.substr(start, pos_ - start);
      if (word == "forall") return {Tok::ForAll, word, at};
      if (word == "exists") return {Tok::Exists, word, at};
      if (word == "xor") return {Tok::Xor, word, at};
      return {Tok::Ident, word, at};
    }
    throw SyntaxError(at, "token");
  }

 private:
  const std::string& src_;
  std::size_t pos_ = 0;
};

// Precedence: Not > And > Or > Xor > Implies > Iff; Implies right-assoc.
// An unparenthesized quantifier scopes maximally rightward, so quantifiers
// recurse into the lowest-precedence level.
class Parser {
 public:
  explicit Parser(const std::string& src) : lex_(src) { advance(); }

  FormulaPtr parse() {
    FormulaPtr f = parse_iff();
    if (cur_.kind != Tok::End)
      throw SyntaxError(cur_.offset, "end of input");
    return f;
  }

 private:
  void advance() { cur_ = lex_.next(); }

  bool accept(Tok t) {
    if (cur_.kind != t) return false;
    advance();
    return true;
  }

  void expect(Tok t, const char* what) {
    if (!accept(t)) throw SyntaxError(cur_.offset, what);
  }

  FormulaPtr parse_iff() {
    FormulaPtr f = parse_implies();
    while (accept(Tok::Iff)) f = Formula::iff(f, parse_implies());
    return f;
  }

  FormulaPtr parse_implies() {
    FormulaPtr f = parse_xor();
    if (accept(Tok::Implies)) return Formula::implies(f, parse_implies());
    return f;
  }

  FormulaPtr parse_xor() {
    FormulaPtr f = parse_or();
    while (accept(Tok::Xor)) f = Formula::exclusive_or(f, parse_or());
    return f;
  }

  FormulaPtr parse_or() {
    FormulaPtr f = parse_and();
    while (accept(Tok::Or)) f = Formula::disj(f, parse_and());
    return f;
  }

  FormulaPtr parse_and() {
    FormulaPtr f = parse_unary();
    while (accept(Tok::And)) f = Formula::conj(f, parse_unary());
    return f;
  }

  FormulaPtr parse_unary() {
    if (accept(Tok::Not)) return Formula::negate(parse_unary());
    if (cur_.kind == Tok::ForAll || cur_.kind == Tok::Exists)
      return parse_quantifier();
    return parse_primary();
  }

  FormulaPtr parse_quantifier() {
    bool universal = cur_.kind == Tok::ForAll;
    advance();
    if (cur_.kind != Tok::Ident)
      throw SyntaxError(cur_.offset, "variable name");
    std::string var = cur_.text;
    advance();
    scope_.push_back(var);
    FormulaPtr body = parse_iff();  // maximal rightward scope
    scope_.pop_back();
    return universal ? Formula::forall(var, std::move(body))
                     : Formula::exists(var, std::move(body));
  }

  FormulaPtr parse_primary() {
    if (accept(Tok::LParen)) {
      FormulaPtr f = parse_iff();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (cur_.kind == Tok::Ident) {
      std::string name = cur_.text;
      advance();
      if (!accept(Tok::LParen)) return Formula::atom(name);
      std::vector<Term> args;
      args.push_back(parse_term());
      while (accept(Tok::Comma)) args.push_back(parse_term());
      expect(Tok::RParen, "')'");
      return Formula::atom(name, std::move(args));
    }
    throw SyntaxError(cur_.offset, "atom, negation, quantifier, or '('");
  }

  Term parse_term() {
    if (cur_.kind != Tok::Ident)
      throw SyntaxError(cur_.offset, "constant or variable");
    std::string name = cur_.text;
    std::size_t at = cur_.offset;
    advance();
    if (cur_.kind == Tok::LParen)
      throw SyntaxError(at, "term (function symbols are not supported)");
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (*it == name) return Term::variable(name);
    return Term::constant(name);
  }

  Lexer lex_;
  Token cur_;
  std::vector<std::string> scope_;
};

void check_well_formed(const FormulaPtr& f) {
  // No constant occurrence may share a name with a quantified variable;
  // that would be a free occurrence of the variable.
  std::set<std::string> bound = bound_variables(f);
  struct Walk {
    const std::set<std::string>& bound;
    void operator()(const FormulaPtr& g) const {
      if (!g) return;
      if (g->kind() == Formula::Kind::Atom) {
        for (const Term& t : g->args())
          if (t.kind == Term::Kind::Constant && bound.count(t.name))
            throw FreeVariableError(t.name);
        return;
      }
      (*this)(g->left());
      (*this)(g->right());
    }
  };
  Walk{bound}(f);
  signature_of({f});  // arity consistency
}

}  // namespace

FormulaPtr parse_formula(const std::string& text) {
  if (text.empty()) throw SyntaxError(0, "non-empty formula");
  Parser parser(text);
  FormulaPtr f = parser.parse();
  check_well_formed(f);
  return f;
}

}  // namespace chainprover::fol
