#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chainprover/engine.hpp"
#include "chainprover/jsonio.hpp"
#include "chainprover/nl2fol.hpp"
#include "chainprover/verifier.hpp"

namespace chainprover::harness {

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& why)
      : std::runtime_error("config error: " + why) {}
};

struct RunConfig {
  engine::EngineConfig engine;
  std::optional<nl2fol::LlmEndpointConfig> llm;
  std::string input_path;
  std::string output_dir;
  int workers = 1;
  verify::Policy policy = verify::Policy::Lenient;
  std::optional<std::uint64_t> seed;
  std::string prompt_template_path = "data/nl2fol_prompt.txt";
};

/// Key/value config file: one "key = value" per line, '#' comments.
std::map<std::string, std::string> parse_config_file(const std::string& path);

/// Overlay CHAINPROVER_<KEY> environment variables (key lowercased).
void apply_env_overrides(std::map<std::string, std::string>& kv);

/// Fold a key/value map into a RunConfig; unknown keys are ConfigError.
RunConfig make_run_config(const std::map<std::string, std::string>& kv);

struct VerifyOutput {
  std::string reports_jsonl;  // one report object per input line, input order
  std::string summary_json;   // category counts
};

/// Verify every instance in the JSONL text. Instances with FOL fields bypass
/// translation; others go through the NL2FOL stage (llm, or an HTTP client
/// from cfg.llm). Per-instance failures become category Error.
VerifyOutput run_verify(const RunConfig& cfg, const std::string& input_jsonl,
                        nl2fol::LlmClient* llm = nullptr);

/// Synthesize count_per_kind fixtures per requested kind (T1 = unmutated
/// gold) at the given ladder depth, with gold_category and gold_step_labels
/// embedded. Deterministic in (kinds, count, seed, depth).
std::string run_mutate(const std::vector<std::string>& kinds,
                       int count_per_kind, std::uint64_t seed, int depth);

/// Score report JSONL against gold JSONL (aligned by id) into a MetricReport
/// JSON object.
std::string run_metrics(const std::string& reports_jsonl,
                        const std::string& gold_jsonl,
                        const engine::EngineConfig& engine);

struct ExportFile {
  std::string name;
  std::string contents;
};

/// TPTP problems for each instance: <id>.p for the conclusion plus
/// <id>.step<k>.pos.p / <id>.step<k>.neg.p for each step polarity query.
std::vector<ExportFile> run_tptp_export(const std::string& input_jsonl);

}  // namespace chainprover::harness
