#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <string>

#include "chainprover/chainprover.h"
#include "chainprover/harness.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
cp_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return CP_OK;
  } catch (const chainprover::harness::ConfigError& e) {
    g_last_error = e.what();
    return CP_ERR_CONFIG;
  } catch (const chainprover::jsonio::SchemaError& e) {
    g_last_error = e.what();
    return CP_ERR_INPUT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CP_ERR_INTERNAL;
  }
}

}  // namespace

struct cp_engine {
  std::map<std::string, std::string> kv;
  std::mutex mutex;
};

extern "C" {

cp_engine* cp_engine_new(void) { return new cp_engine(); }

void cp_engine_free(cp_engine* engine) { delete engine; }

cp_status cp_engine_set(cp_engine* engine, const char* key,
                        const char* value) {
  if (!engine || !key || !value) {
    g_last_error = "null argument";
    return CP_ERR_CONFIG;
  }
  std::lock_guard<std::mutex> lock(engine->mutex);
  engine->kv[key] = value;
  g_last_error.clear();
  return CP_OK;
}

cp_status cp_verify(cp_engine* engine, const char* input_jsonl,
                    char** reports_jsonl, char** summary_json) {
  if (!engine || !input_jsonl) {
    g_last_error = "null argument";
    return CP_ERR_INPUT;
  }
  return guarded([&] {
    std::map<std::string, std::string> kv;
    {
      std::lock_guard<std::mutex> lock(engine->mutex);
      kv = engine->kv;
    }
    chainprover::harness::RunConfig cfg =
        chainprover::harness::make_run_config(kv);
    chainprover::harness::VerifyOutput out =
        chainprover::harness::run_verify(cfg, input_jsonl);
    if (reports_jsonl) *reports_jsonl = dup_string(out.reports_jsonl);
    if (summary_json) *summary_json = dup_string(out.summary_json);
  });
}

cp_status cp_mutate(cp_engine* engine, const char* kinds_csv,
                    int count_per_kind, unsigned long long seed, int depth,
                    char** fixtures_jsonl) {
  if (!engine || !kinds_csv || !fixtures_jsonl) {
    g_last_error = "null argument";
    return CP_ERR_INPUT;
  }
  return guarded([&] {
    std::vector<std::string> kinds;
    std::istringstream in(kinds_csv);
    std::string kind;
    while (std::getline(in, kind, ','))
      if (!kind.empty()) kinds.push_back(kind);
    if (kinds.empty())
      throw chainprover::harness::ConfigError("no mutation kinds given");
    *fixtures_jsonl = dup_string(
        chainprover::harness::run_mutate(kinds, count_per_kind, seed, depth));
  });
}

cp_status cp_metrics(cp_engine* engine, const char* reports_jsonl,
                     const char* gold_jsonl, char** metric_report_json) {
  if (!engine || !reports_jsonl || !gold_jsonl || !metric_report_json) {
    g_last_error = "null argument";
    return CP_ERR_INPUT;
  }
  return guarded([&] {
    std::map<std::string, std::string> kv;
    {
      std::lock_guard<std::mutex> lock(engine->mutex);
      kv = engine->kv;
    }
    chainprover::harness::RunConfig cfg =
        chainprover::harness::make_run_config(kv);
    *metric_report_json = dup_string(chainprover::harness::run_metrics(
        reports_jsonl, gold_jsonl, cfg.engine));
  });
}

cp_status cp_tptp_export(cp_engine* engine, const char* input_jsonl,
                         const char* output_dir, char** manifest) {
  if (!engine || !input_jsonl || !output_dir) {
    g_last_error = "null argument";
    return CP_ERR_INPUT;
  }
  return guarded([&] {
    std::vector<chainprover::harness::ExportFile> files =
        chainprover::harness::run_tptp_export(input_jsonl);
    std::filesystem::create_directories(output_dir);
    std::string names;
    for (const chainprover::harness::ExportFile& f : files) {
      std::ofstream out(std::filesystem::path(output_dir) / f.name);
      if (!out)
        throw std::runtime_error("cannot write " + f.name + " in " +
                                 output_dir);
      out << f.contents;
      names += f.name + "\n";
    }
    if (manifest) *manifest = dup_string(names);
  });
}

cp_status cp_parse_formula(const char* surface, char** canonical) {
  if (!surface || !canonical) {
    g_last_error = "null argument";
    return CP_ERR_INPUT;
  }
  cp_status st = guarded([&] {
    *canonical = dup_string(
        chainprover::fol::print_formula(chainprover::fol::parse_formula(surface)));
  });
  return st == CP_ERR_INTERNAL ? CP_ERR_INPUT : st;
}

const char* cp_last_error(void) { return g_last_error.c_str(); }

void cp_string_free(char* s) { std::free(s); }

const char* cp_version(void) { return "0.1.0"; }

}  // extern "C"
