#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chainprover/engine.hpp"
#include "chainprover/fol.hpp"
#include "chainprover/verifier.hpp"

namespace chainprover::nl2fol {

struct TemplateMissingError : std::runtime_error {
  explicit TemplateMissingError(const std::string& path)
      : std::runtime_error("prompt template not found: " + path) {}
};

struct MissingIndexError : std::runtime_error {
  explicit MissingIndexError(const std::vector<int>& gaps);
  std::vector<int> missing;
};

struct UnparseableFormulaError : std::runtime_error {
  UnparseableFormulaError(const std::string& line, const std::string& why)
      : std::runtime_error("cannot parse formula in line '" + line +
                           "': " + why) {}
};

struct TranslationFailed : std::runtime_error {
  explicit TranslationFailed(int attempts)
      : std::runtime_error("translation failed after " +
                           std::to_string(attempts) + " attempts") {}
};

struct TransportError : std::runtime_error {
  explicit TransportError(const std::string& why)
      : std::runtime_error("LLM transport error: " + why) {}
};

struct AnswerExtractionError : std::runtime_error {
  AnswerExtractionError()
      : std::runtime_error("no terminal True/False verdict in response") {}
};

// ---------------------------------------------------------------------------
// Preprocessing

/// Split reasoning text into sentences on terminators and numbered-list
/// boundaries like "1)". Markers are stripped; empty fragments dropped.
std::vector<std::string> split_steps(const std::string& reasoning_text);

/// Default ambiguity keyword list for filter_speculative.
const std::vector<std::string>& default_speculative_keywords();

struct FilterResult {
  std::vector<std::pair<std::size_t, std::string>> kept;  // (original idx, s)
  std::vector<std::pair<std::size_t, std::string>> dropped;
};

FilterResult filter_speculative(
    const std::vector<std::string>& sentences,
    const std::vector<std::string>& keywords = default_speculative_keywords());

/// The final case-insensitive True/False token after the reasoning block.
bool extract_answer(const std::string& response_text);

// ---------------------------------------------------------------------------
// Prompting

struct PromptTemplate {
  std::string text;  // contains {premises} and {conclusions} placeholders

  static PromptTemplate load(const std::string& path);
};

/// Deterministic prompt assembly; steps plus the candidate conclusion fill
/// the Conclusions slot, conclusion last.
std::string build_prompt(const PromptTemplate& tpl,
                         const std::vector<std::string>& premises,
                         const std::vector<std::string>& steps,
                         const std::string& conclusion);

// ---------------------------------------------------------------------------
// LLM transport

struct LlmEndpointConfig {
  std::string base_url;
  std::string model_name;
  std::string api_key_env_var;
  double temperature = 0.0;
  int request_timeout_ms = 60000;
};

class LlmClient {
 public:
  virtual ~LlmClient() = default;
  virtual std::string complete(const std::string& prompt) = 0;
};

/// JSON chat-completion client over HTTP (POST /v1/chat/completions).
std::unique_ptr<LlmClient> make_http_client(const LlmEndpointConfig& cfg);

/// Deterministic scripted double; records every request body it would send.
class ScriptedLlmClient : public LlmClient {
 public:
  explicit ScriptedLlmClient(std::vector<std::string> responses)
      : responses_(std::move(responses)) {}
  std::string complete(const std::string& prompt) override;
  const std::vector<std::string>& requests() const { return requests_; }

 private:
  std::vector<std::string> responses_;
  std::vector<std::string> requests_;
  std::size_t next_ = 0;
};

// ---------------------------------------------------------------------------
// Output parsing

/// Parse "fol-formula ::: (index) reference" lines into indexed formulas.
/// The left side is repaired and parsed; indices must cover 1..expected_count
/// exactly once when expected_count > 0.
std::map<int, fol::FormulaPtr> parse_llm_output(const std::string& text,
                                                int expected_count = 0);

// ---------------------------------------------------------------------------
// Translation loop

struct NlTask {
  std::vector<std::string> premises;
  std::vector<std::string> steps;  // already filtered
  std::string conclusion;
  bool label;
};

struct TranslationResult {
  std::vector<fol::FormulaPtr> premise_fols;
  std::vector<fol::FormulaPtr> step_fols;
  fol::FormulaPtr conclusion_fol;
  int attempts_used = 0;
  std::vector<std::string> raw_llm_outputs;
};

inline constexpr int kMaxTranslationAttempts = 3;

/// Up to three identical-prompt attempts; an attempt fails on unparseable
/// output, an engine error, or a conclusion verdict contradicting the label.
TranslationResult translate(const NlTask& task, const PromptTemplate& tpl,
                            LlmClient& llm, const verify::VerifyOptions& opts);

/// Keep the first of each group of pairwise logically equivalent steps.
std::vector<std::size_t> dedup_steps(const std::vector<fol::FormulaPtr>& steps,
                                     const verify::VerifyOptions& opts);

}  // namespace chainprover::nl2fol
