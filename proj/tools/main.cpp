#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chainprover/chainprover.h"

namespace {

constexpr const char* kConfigKeys[] = {
    "engine",   "prover_cmd",   "timeout_ms",      "workers",
    "policy",   "seed",         "llm_endpoint",    "llm_model",
    "prompt_template", "input_path", "output_dir"};

int fail(cp_status st) {
  std::cerr << "error: " << cp_last_error() << "\n";
  return static_cast<int>(st);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw CLI::ValidationError("cannot write file: " + path);
  out << contents;
}

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { cp_string_free(ptr); }
  std::string str() const { return ptr ? ptr : ""; }
};

// Precedence: config file < CHAINPROVER_* environment < command-line flags.
int apply_config(cp_engine* engine, const std::string& config_path,
                 const std::vector<std::pair<std::string, std::string>>& flags) {
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "error: cannot open config file: " << config_path << "\n";
      return 2;
    }
    std::string line;
    while (std::getline(in, line)) {
      std::size_t start = line.find_first_not_of(" \t");
      if (start == std::string::npos || line[start] == '#') continue;
      std::size_t eq = line.find('=');
      if (eq == std::string::npos) {
        std::cerr << "error: bad config line: " << line << "\n";
        return 2;
      }
      auto trim = [](std::string s) {
        s.erase(0, s.find_first_not_of(" \t\r\n"));
        s.erase(s.find_last_not_of(" \t\r\n") + 1);
        if (s.size() >= 2 && s.front() == '"' && s.back() == '"')
          s = s.substr(1, s.size() - 2);
        return s;
      };
      cp_engine_set(engine, trim(line.substr(0, eq)).c_str(),
                    trim(line.substr(eq + 1)).c_str());
    }
  }
  for (const char* key : kConfigKeys) {
    std::string env_name = "CHAINPROVER_";
    for (const char* c = key; *c; ++c)
      env_name += static_cast<char>(std::toupper(static_cast<unsigned char>(*c)));
    if (const char* v = std::getenv(env_name.c_str()))
      cp_engine_set(engine, key, v);
  }
  for (const auto& [key, value] : flags) cp_engine_set(engine, key.c_str(), value.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chainprover: verification toolkit for deductive reasoning chains"};
  app.require_subcommand(1);

  std::string config_path, engine_kind, prover_cmd, policy, llm_endpoint,
      llm_model, out_path;
  std::optional<int> timeout_ms, workers;
  std::optional<unsigned long long> seed;

  app.add_option("--config", config_path, "key = value configuration file");
  app.add_option("--engine", engine_kind, "internal|external")
      ->check(CLI::IsMember({"internal", "external"}));
  app.add_option("--prover-cmd", prover_cmd,
                 "external prover command ({timeout_s} substituted)");
  app.add_option("--timeout-ms", timeout_ms, "per-query engine timeout");
  app.add_option("--workers", workers, "worker pool size");
  app.add_option("--policy", policy, "lenient|strict")
      ->check(CLI::IsMember({"lenient", "strict"}));
  app.add_option("--seed", seed, "RNG seed");
  app.add_option("--llm-endpoint", llm_endpoint, "chat-completion base URL");
  app.add_option("--llm-model", llm_model, "model name for the NL2FOL stage");
  app.add_option("--out", out_path, "output file (or directory for tptp-export)");

  std::string input_path, reports_path, gold_path;
  std::string kinds = "T1,T2,T3,T4";
  int count = 50, depth = 2;

  // Global flags remain usable after the subcommand name.
  CLI::App* verify = app.add_subcommand("verify", "verify a JSONL batch");
  verify->fallthrough();
  verify->add_option("input", input_path, "input JSONL file")->required();

  CLI::App* mutate = app.add_subcommand("mutate", "synthesize labeled fixtures");
  mutate->fallthrough();
  mutate->add_option("--kinds", kinds, "comma-separated subset of T1,T2,T3,T4");
  mutate->add_option("--count", count, "fixtures per kind");
  mutate->add_option("--depth", depth, "implication ladder depth");

  CLI::App* metrics = app.add_subcommand("metrics", "score reports against gold");
  metrics->fallthrough();
  metrics->add_option("reports", reports_path, "report JSONL file")->required();
  metrics->add_option("gold", gold_path, "gold JSONL file")->required();

  CLI::App* tptp_export =
      app.add_subcommand("tptp-export", "write TPTP problem files");
  tptp_export->fallthrough();
  tptp_export->add_option("input", input_path, "input JSONL file")->required();

  CLI11_PARSE(app, argc, argv);

  cp_engine* engine = cp_engine_new();
  struct EngineGuard {
    cp_engine* e;
    ~EngineGuard() { cp_engine_free(e); }
  } guard{engine};

  std::vector<std::pair<std::string, std::string>> flags;
  if (!engine_kind.empty()) flags.emplace_back("engine", engine_kind);
  if (!prover_cmd.empty()) flags.emplace_back("prover_cmd", prover_cmd);
  if (timeout_ms) flags.emplace_back("timeout_ms", std::to_string(*timeout_ms));
  if (workers) flags.emplace_back("workers", std::to_string(*workers));
  if (!policy.empty()) flags.emplace_back("policy", policy);
  if (seed) flags.emplace_back("seed", std::to_string(*seed));
  if (!llm_endpoint.empty()) flags.emplace_back("llm_endpoint", llm_endpoint);
  if (!llm_model.empty()) flags.emplace_back("llm_model", llm_model);
  if (int rc = apply_config(engine, config_path, flags)) return rc;

  try {
    if (verify->parsed()) {
      OwnedString reports, summary;
      cp_status st = cp_verify(engine, slurp(input_path).c_str(), &reports.ptr,
                               &summary.ptr);
      if (st != CP_OK) return fail(st);
      if (out_path.empty()) {
        std::cout << reports.str();
        std::cerr << summary.str();
      } else {
        write_file(out_path, reports.str());
        write_file(out_path + ".summary.json", summary.str());
      }
    } else if (mutate->parsed()) {
      OwnedString fixtures;
      cp_status st = cp_mutate(engine, kinds.c_str(), count,
                               seed.value_or(0), depth, &fixtures.ptr);
      if (st != CP_OK) return fail(st);
      if (out_path.empty())
        std::cout << fixtures.str();
      else
        write_file(out_path, fixtures.str());
    } else if (metrics->parsed()) {
      OwnedString report;
      cp_status st = cp_metrics(engine, slurp(reports_path).c_str(),
                                slurp(gold_path).c_str(), &report.ptr);
      if (st != CP_OK) return fail(st);
      if (out_path.empty())
        std::cout << report.str();
      else
        write_file(out_path, report.str());
    } else if (tptp_export->parsed()) {
      OwnedString manifest;
      std::string dir = out_path.empty() ? "." : out_path;
      cp_status st = cp_tptp_export(engine, slurp(input_path).c_str(),
                                    dir.c_str(), &manifest.ptr);
      if (st != CP_OK) return fail(st);
      std::cout << manifest.str();
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
