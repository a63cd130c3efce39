#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>

#include "chainprover/metrics.hpp"

namespace chainprover::metrics {

using verify::Category;
using verify::TriLabel;

double execution_rate(const std::vector<ExecutionRecord>& batch) {
  if (batch.empty()) throw EmptyBatchError();
  std::size_t executed = 0;
  for (const ExecutionRecord& r : batch)
    if (r.executed) ++executed;
  return static_cast<double>(executed) / static_cast<double>(batch.size());
}

double execution_accuracy(const std::vector<ExecutionRecord>& batch) {
  std::size_t executed = 0, matched = 0;
  for (const ExecutionRecord& r : batch) {
    if (!r.executed) continue;
    ++executed;
    if (r.first_attempt_match) ++matched;
  }
  if (executed == 0) throw NoExecutedInstancesError();
  return static_cast<double>(matched) / static_cast<double>(executed);
}

std::vector<std::string> fol_tokens(const std::string& surface) {
  static const char* kSymbols[] = {"∀", "∃", "∧", "∨", "¬", "→", "↔", "⊕"};
  std::vector<std::string> out;
  std::size_t i = 0;
  auto is_ident = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  };
  while (i < surface.size()) {
    char c = surface[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    bool matched = false;
    for (const char* sym : kSymbols) {
      std::size_t len = std::char_traits<char>::length(sym);
      if (surface.compare(i, len, sym) == 0) {
        out.emplace_back(sym);
        i += len;
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (c == '(' || c == ')' || c == ',' || c == '&' || c == '|' || c == '~') {
      out.emplace_back(1, c);
      ++i;
      continue;
    }
    if (surface.compare(i, 3, "<->") == 0 || surface.compare(i, 3, "<~>") == 0) {
      out.push_back(surface.substr(i, 3));
      i += 3;
      continue;
    }
    if (surface.compare(i, 2, "->") == 0) {
      out.emplace_back("->");
      i += 2;
      continue;
    }
    if (is_ident(c)) {
      std::size_t start = i;
      while (i < surface.size() && is_ident(surface[i])) ++i;
      out.push_back(surface.substr(start, i - start));
      continue;
    }
    throw TokenizeError("unexpected character '" + std::string(1, c) +
                        "' at offset " + std::to_string(i));
  }
  return out;
}

double fol_bleu(const std::string& candidate, const std::string& reference) {
  std::vector<std::string> cand = fol_tokens(candidate);
  std::vector<std::string> ref = fol_tokens(reference);
  if (cand.empty() || ref.empty()) return cand.empty() && ref.empty() ? 1.0 : 0.0;

  double log_sum = 0.0;
  for (int n = 1; n <= 4; ++n) {
    std::map<std::vector<std::string>, int> ref_counts;
    for (std::size_t i = 0; i + n <= ref.size(); ++i)
      ++ref_counts[{ref.begin() + i, ref.begin() + i + n}];
    long total = static_cast<long>(cand.size()) - n + 1;
    if (total < 0) total = 0;
    long matches = 0;
    std::map<std::vector<std::string>, int> used;
    for (std::size_t i = 0; i + n <= cand.size(); ++i) {
      std::vector<std::string> gram(cand.begin() + i, cand.begin() + i + n);
      auto it = ref_counts.find(gram);
      if (it != ref_counts.end() && used[gram] < it->second) {
        ++used[gram];
        ++matches;
      }
    }
    double p;
    if (n == 1) {
      if (total == 0) return 0.0;
      p = static_cast<double>(matches) / static_cast<double>(total);
    } else {
      p = static_cast<double>(matches + 1) / static_cast<double>(total + 1);
    }
    if (p <= 0.0) return 0.0;
    log_sum += std::log(p) / 4.0;
  }
  double brevity = 1.0;
  if (cand.size() < ref.size())
    brevity = std::exp(1.0 - static_cast<double>(ref.size()) /
                                 static_cast<double>(cand.size()));
  return brevity * std::exp(log_sum);
}

bool logical_equivalence(const fol::FormulaPtr& f, const fol::FormulaPtr& g,
                         const engine::EngineConfig& cfg) {
  auto direction = [&](const fol::FormulaPtr& a, const fol::FormulaPtr& b) {
    engine::EntailmentOutcome out = engine::check_entailment({a}, b, cfg);
    switch (out.kind) {
      case engine::OutcomeKind::Entailed:
        return true;
      case engine::OutcomeKind::NotEntailed:
        return false;
      case engine::OutcomeKind::Indeterminate:
        throw EquivalenceUndecidedError(out.detail);
      case engine::OutcomeKind::EngineError:
        throw engine::EngineError(out.detail);
    }
    return false;
  };
  return direction(f, g) && direction(g, f);
}

double macro_f1(const std::vector<TriLabel>& predicted,
                const std::vector<TriLabel>& gold) {
  if (predicted.size() != gold.size() || gold.empty())
    throw LengthMismatchError(predicted.size(), gold.size());
  double sum = 0.0;
  int classes = 0;
  for (TriLabel cls : {TriLabel::True, TriLabel::False, TriLabel::Unknown}) {
    long tp = 0, fp = 0, fn = 0;
    for (std::size_t i = 0; i < gold.size(); ++i) {
      bool p = predicted[i] == cls;
      bool g = gold[i] == cls;
      if (p && g) ++tp;
      if (p && !g) ++fp;
      if (!p && g) ++fn;
    }
    if (tp + fp + fn == 0) continue;  // class absent from both sides
    ++classes;
    double denom = static_cast<double>(2 * tp + fp + fn);
    sum += denom > 0 ? 2.0 * static_cast<double>(tp) / denom : 0.0;
  }
  return classes ? sum / classes : 0.0;
}

ConfusionResult category_confusion(const std::vector<Category>& predicted,
                                   const std::vector<Category>& gold) {
  if (predicted.size() != gold.size() || gold.empty())
    throw LengthMismatchError(predicted.size(), gold.size());
  ConfusionResult res{};
  for (auto& row : res.matrix) row.fill(0);
  long agree = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    ++res.matrix[static_cast<int>(gold[i])][static_cast<int>(predicted[i])];
    if (gold[i] == predicted[i]) ++agree;
  }
  res.accuracy = static_cast<double>(agree) / static_cast<double>(gold.size());
  return res;
}

}  // namespace chainprover::metrics
