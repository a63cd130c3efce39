#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "chainprover/metrics.hpp"
#include "chainprover/nl2fol.hpp"
#include "chainprover/tptp.hpp"

namespace chainprover::nl2fol {

using fol::FormulaPtr;

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string lowercase(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

MissingIndexError::MissingIndexError(const std::vector<int>& gaps)
    : std::runtime_error([&] {
        std::string msg = "missing indices:";
        for (int g : gaps) msg += " " + std::to_string(g);
        return msg;
      }()),
      missing(gaps) {}

std::vector<std::string> split_steps(const std::string& reasoning_text) {
  std::vector<std::string> out;
  std::string current;
  auto flush = [&] {
    std::string s = trim(current);
    current.clear();
    if (!s.empty()) out.push_back(std::move(s));
  };

  std::size_t i = 0;
  while (i < reasoning_text.size()) {
    // numbered-list boundary: "<digits>)" at a word boundary
    if (std::isdigit(static_cast<unsigned char>(reasoning_text[i])) &&
        (i == 0 || !is_word_char(reasoning_text[i - 1]))) {
      std::size_t j = i;
      while (j < reasoning_text.size() &&
             std::isdigit(static_cast<unsigned char>(reasoning_text[j])))
        ++j;
      if (j < reasoning_text.size() && reasoning_text[j] == ')') {
        flush();
        i = j + 1;
        continue;
      }
    }
    char c = reasoning_text[i];
    current += c;
    if (c == '.' || c == '!' || c == '?') flush();
    ++i;
  }
  flush();
  return out;
}

const std::vector<std::string>& default_speculative_keywords() {
  static const std::vector<std::string> kKeywords = {
      "possible",     "possibly",  "perhaps",
      "might",        "may",       "contradict",
      "contradiction", "not necessarily", "uncertain",
      "unclear",      "cannot determine",
  };
  return kKeywords;
}

namespace {

bool contains_keyword(const std::string& sentence, const std::string& keyword) {
  std::string s = lowercase(sentence);
  std::size_t pos = 0;
  while ((pos = s.find(keyword, pos)) != std::string::npos) {
    bool left_ok = pos == 0 || !is_word_char(s[pos - 1]);
    std::size_t end = pos + keyword.size();
    bool right_ok = end >= s.size() || !is_word_char(s[end]);
    if (left_ok && right_ok) return true;
    ++pos;
  }
  return false;
}

}  // namespace

FilterResult filter_speculative(const std::vector<std::string>& sentences,
                                const std::vector<std::string>& keywords) {
  FilterResult res;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    bool drop = std::any_of(keywords.begin(), keywords.end(),
                            [&](const std::string& k) {
                              return contains_keyword(sentences[i],
                                                      lowercase(k));
                            });
    (drop ? res.dropped : res.kept).emplace_back(i, sentences[i]);
  }
  return res;
}

bool extract_answer(const std::string& response_text) {
  // last standalone True/False token wins
  std::string s = lowercase(response_text);
  std::optional<bool> answer;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0 && is_word_char(s[i - 1])) continue;
    for (const auto& [word, value] :
         {std::pair<std::string, bool>{"true", true}, {"false", false}}) {
      if (s.compare(i, word.size(), word) == 0) {
        std::size_t end = i + word.size();
        if (end >= s.size() || !is_word_char(s[end])) answer = value;
      }
    }
  }
  if (!answer) throw AnswerExtractionError();
  return *answer;
}

PromptTemplate PromptTemplate::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TemplateMissingError(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return PromptTemplate{buf.str()};
}

std::string build_prompt(const PromptTemplate& tpl,
                         const std::vector<std::string>& premises,
                         const std::vector<std::string>& steps,
                         const std::string& conclusion) {
  if (premises.empty())
    throw std::invalid_argument("build_prompt: premises must be non-empty");
  auto numbered = [](const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i) out += ' ';
      out += "(" + std::to_string(i + 1) + ") " + items[i];
    }
    return out;
  };
  std::vector<std::string> conclusions = steps;
  conclusions.push_back(conclusion);

  std::string prompt = tpl.text;
  auto substitute = [&](const std::string& key, const std::string& value) {
    std::size_t at = prompt.find(key);
    if (at == std::string::npos)
      throw TemplateMissingError("placeholder " + key);
    prompt.replace(at, key.size(), value);
  };
  substitute("{premises}", numbered(premises));
  substitute("{conclusions}", numbered(conclusions));
  return prompt;
}

std::string ScriptedLlmClient::complete(const std::string& prompt) {
  requests_.push_back(prompt);
  if (next_ >= responses_.size())
    throw TransportError("scripted client exhausted");
  return responses_[next_++];
}

std::map<int, FormulaPtr> parse_llm_output(const std::string& text,
                                           int expected_count) {
  std::map<int, FormulaPtr> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t sep = line.find(":::");
    if (sep == std::string::npos) continue;
    std::string fol_part = trim(line.substr(0, sep));
    std::string ref_part = line.substr(sep + 3);
    std::size_t open = ref_part.find('(');
    std::size_t close = ref_part.find(')', open);
    if (open == std::string::npos || close == std::string::npos) continue;
    int index = 0;
    try {
      index = std::stoi(ref_part.substr(open + 1, close - open - 1));
    } catch (const std::exception&) {
      continue;
    }
    std::string repaired = tptp::repair(fol_part);
    try {
      out[index] = fol::parse_formula(repaired);
    } catch (const std::exception& e) {
      throw UnparseableFormulaError(line, e.what());
    }
  }
  if (expected_count > 0) {
    std::vector<int> gaps;
    for (int k = 1; k <= expected_count; ++k)
      if (!out.count(k)) gaps.push_back(k);
    if (!gaps.empty()) throw MissingIndexError(gaps);
  }
  return out;
}

namespace {

// The scripted/HTTP response carries "Premises:" and "Conclusions:" blocks.
std::pair<std::string, std::string> split_blocks(const std::string& text) {
  std::size_t conc = text.find("Conclusions:");
  if (conc == std::string::npos) return {text, ""};
  std::size_t prem = text.find("Premises:");
  std::string premises = prem != std::string::npos && prem < conc
                             ? text.substr(prem + 9, conc - prem - 9)
                             : text.substr(0, conc);
  return {premises, text.substr(conc + 12)};
}

}  // namespace

TranslationResult translate(const NlTask& task, const PromptTemplate& tpl,
                            LlmClient& llm, const verify::VerifyOptions& opts) {
  std::string prompt =
      build_prompt(tpl, task.premises, task.steps, task.conclusion);
  int n_premises = static_cast<int>(task.premises.size());
  int n_conclusions = static_cast<int>(task.steps.size()) + 1;

  TranslationResult result;
  for (int attempt = 1; attempt <= kMaxTranslationAttempts; ++attempt) {
    result.attempts_used = attempt;
    std::string raw;
    try {
      raw = llm.complete(prompt);  // same prompt every attempt: no feedback
    } catch (const TransportError&) {
      continue;
    }
    result.raw_llm_outputs.push_back(raw);
    try {
      auto [prem_block, conc_block] = split_blocks(raw);
      std::map<int, FormulaPtr> premises =
          parse_llm_output(prem_block, n_premises);
      std::map<int, FormulaPtr> conclusions =
          parse_llm_output(conc_block, n_conclusions);

      std::vector<FormulaPtr> premise_fols, step_fols;
      for (int k = 1; k <= n_premises; ++k)
        premise_fols.push_back(fol::normalize(premises[k]));
      for (int k = 1; k < n_conclusions; ++k)
        step_fols.push_back(fol::normalize(conclusions[k]));
      FormulaPtr conclusion_fol = fol::normalize(conclusions[n_conclusions]);

      verify::TriLabel verdict =
          verify::verify_single_statement(premise_fols, conclusion_fol, opts);
      verify::TriLabel expected =
          task.label ? verify::TriLabel::True : verify::TriLabel::False;
      if (verdict != expected) continue;  // regeneration trigger

      result.premise_fols = std::move(premise_fols);
      result.step_fols = std::move(step_fols);
      result.conclusion_fol = std::move(conclusion_fol);
      return result;
    } catch (const std::exception&) {
      continue;  // execution error: regeneration trigger
    }
  }
  throw TranslationFailed(kMaxTranslationAttempts);
}

std::vector<std::size_t> dedup_steps(const std::vector<FormulaPtr>& steps,
                                     const verify::VerifyOptions& opts) {
  std::vector<std::size_t> kept;
  std::vector<FormulaPtr> representatives;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    bool duplicate = false;
    for (const FormulaPtr& rep : representatives) {
      if (metrics::logical_equivalence(steps[i], rep, opts.engine)) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) {
      kept.push_back(i);
      representatives.push_back(steps[i]);
    }
  }
  return kept;
}

}  // namespace chainprover::nl2fol
