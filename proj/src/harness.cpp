#include <atomic>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "chainprover/harness.hpp"
#include "chainprover/metrics.hpp"
#include "chainprover/mutator.hpp"
#include "chainprover/tptp.hpp"

namespace chainprover::harness {

using jsonio::InstanceRecord;
using jsonio::SchemaError;
using nlohmann::json;
using verify::TriLabel;

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> nonempty_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!trim(line).empty()) out.push_back(line);
  return out;
}

std::vector<InstanceRecord> parse_records(const std::string& jsonl) {
  std::vector<InstanceRecord> records;
  std::size_t lineno = 0;
  for (const std::string& line : nonempty_lines(jsonl)) {
    ++lineno;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded())
      throw SchemaError("line " + std::to_string(lineno) + " is not JSON");
    records.push_back(jsonio::record_from_json(j));
  }
  return records;
}

}  // namespace

std::map<std::string, std::string> parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    std::size_t eq = s.find('=');
    if (eq == std::string::npos)
      throw ConfigError("bad config line: " + line);
    std::string value = trim(s.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
      value = value.substr(1, value.size() - 2);
    kv[trim(s.substr(0, eq))] = value;
  }
  return kv;
}

void apply_env_overrides(std::map<std::string, std::string>& kv) {
  static const char* keys[] = {"engine",   "prover_cmd", "timeout_ms",
                               "workers",  "policy",     "seed",
                               "llm_endpoint", "llm_model", "prompt_template"};
  for (const char* key : keys) {
    std::string env_name = "CHAINPROVER_";
    for (const char* c = key; *c; ++c)
      env_name += static_cast<char>(std::toupper(static_cast<unsigned char>(*c)));
    if (const char* v = std::getenv(env_name.c_str())) kv[key] = v;
  }
}

RunConfig make_run_config(const std::map<std::string, std::string>& kv) {
  RunConfig cfg;
  for (const auto& [key, value] : kv) {
    if (key == "engine") {
      if (value == "internal")
        cfg.engine.backend = engine::Backend::Internal;
      else if (value == "external")
        cfg.engine.backend = engine::Backend::External;
      else
        throw ConfigError("engine must be internal or external, got " + value);
    } else if (key == "prover_cmd") {
      cfg.engine.prover_command = value;
    } else if (key == "timeout_ms") {
      cfg.engine.timeout_ms = std::stoi(value);
      if (cfg.engine.timeout_ms <= 0) throw ConfigError("timeout_ms must be positive");
    } else if (key == "workers") {
      cfg.workers = std::stoi(value);
      if (cfg.workers < 1) throw ConfigError("workers must be >= 1");
    } else if (key == "policy") {
      if (value == "lenient")
        cfg.policy = verify::Policy::Lenient;
      else if (value == "strict")
        cfg.policy = verify::Policy::Strict;
      else
        throw ConfigError("policy must be lenient or strict, got " + value);
    } else if (key == "seed") {
      cfg.seed = std::stoull(value);
    } else if (key == "llm_endpoint") {
      if (!cfg.llm) cfg.llm.emplace();
      cfg.llm->base_url = value;
    } else if (key == "llm_model") {
      if (!cfg.llm) cfg.llm.emplace();
      cfg.llm->model_name = value;
    } else if (key == "prompt_template") {
      cfg.prompt_template_path = value;
    } else if (key == "input_path") {
      cfg.input_path = value;
    } else if (key == "output_dir") {
      cfg.output_dir = value;
    } else {
      throw ConfigError("unknown config key: " + key);
    }
  }
  if (cfg.engine.backend == engine::Backend::External &&
      cfg.engine.prover_command.empty())
    throw ConfigError("external engine requires prover_cmd");
  return cfg;
}

VerifyOutput run_verify(const RunConfig& cfg, const std::string& input_jsonl,
                        nl2fol::LlmClient* llm) {
  std::vector<InstanceRecord> records = parse_records(input_jsonl);

  bool needs_llm = false;
  for (const InstanceRecord& r : records)
    if (!r.has_fol()) needs_llm = true;

  std::unique_ptr<nl2fol::LlmClient> owned_llm;
  std::optional<nl2fol::PromptTemplate> tpl;
  if (needs_llm) {
    if (!llm) {
      if (!cfg.llm) throw ConfigError("input lacks FOL fields and no LLM endpoint is configured");
      owned_llm = nl2fol::make_http_client(*cfg.llm);
      llm = owned_llm.get();
    }
    tpl = nl2fol::PromptTemplate::load(cfg.prompt_template_path);
  }

  verify::VerifyOptions opts{cfg.engine, cfg.policy};
  std::vector<json> reports(records.size());
  std::mutex llm_mutex;

  auto process = [&](std::size_t i) {
    const InstanceRecord& r = records[i];
    try {
      verify::Instance inst;
      InstanceRecord effective = r;
      if (r.has_fol()) {
        inst = jsonio::to_instance(r);
      } else {
        nl2fol::NlTask task{r.premises, r.steps, r.conclusion,
                            r.label == "True"};
        nl2fol::TranslationResult tr;
        {
          std::lock_guard<std::mutex> lock(llm_mutex);
          tr = nl2fol::translate(task, *tpl, *llm, opts);
        }
        inst.id = r.id;
        inst.premises = tr.premise_fols;
        inst.steps = tr.step_fols;
        inst.conclusion = tr.conclusion_fol;
        inst.label = r.label == "True";
        inst.answer = r.answer == "True";
        inst.premises_text = r.premises;
        inst.conclusion_text = r.conclusion;
        inst.steps_text = r.steps;
        InstanceRecord filled = jsonio::from_instance(inst);
        effective.premises_fol = filled.premises_fol;
        effective.conclusion_fol = filled.conclusion_fol;
        effective.steps_fol = filled.steps_fol;
      }
      reports[i] = jsonio::report_to_json(effective, verify::verify_instance(inst, opts));
    } catch (const std::exception& e) {
      verify::VerificationReport err;
      err.category = verify::Category::Error;
      err.diagnostics.emplace_back("instance_error", e.what());
      reports[i] = jsonio::report_to_json(r, err);
    }
  };

  std::size_t workers =
      std::min<std::size_t>(std::max(cfg.workers, 1), records.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < records.size(); ++i) process(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < records.size();
             i = next.fetch_add(1))
          process(i);
      });
    for (std::thread& t : pool) t.join();
  }

  VerifyOutput out;
  std::map<std::string, int> counts;
  for (const json& rep : reports) {
    out.reports_jsonl += rep.dump() + "\n";
    ++counts[rep["category"].get<std::string>()];
  }
  json summary{{"total", records.size()}, {"categories", json::object()}};
  for (const char* cat : {"T1", "T2", "T3", "T4", "F1", "F2", "Error"})
    summary["categories"][cat] = counts.count(cat) ? counts[cat] : 0;
  out.summary_json = summary.dump(2) + "\n";
  return out;
}

std::string run_mutate(const std::vector<std::string>& kinds,
                       int count_per_kind, std::uint64_t seed, int depth) {
  if (count_per_kind < 1) throw ConfigError("count must be >= 1");
  for (const std::string& kind : kinds)
    if (kind != "T1" && kind != "T2" && kind != "T3" && kind != "T4")
      throw ConfigError("unknown mutation kind: " + kind);

  std::string out;
  for (std::size_t k = 0; k < kinds.size(); ++k) {
    const std::string& kind = kinds[k];
    for (int i = 0; i < count_per_kind; ++i) {
      std::uint64_t item_seed =
          seed + 1000003ULL * static_cast<std::uint64_t>(i) + 7919ULL * k;
      verify::Instance inst = mutator::synthesize_gold(depth, item_seed);
      if (kind != "T1")
        inst = mutator::mutate(
            inst, {mutator::mutation_kind_from_string(kind), item_seed});

      std::vector<std::string> labels;
      for (const fol::FormulaPtr& step : inst.steps) {
        bool negated_premise = false;
        for (const fol::FormulaPtr& p : inst.premises)
          if (fol::equal(step, fol::Formula::negate(p))) negated_premise = true;
        labels.push_back(negated_premise ? "False" : "True");
      }
      InstanceRecord rec = jsonio::from_instance(inst);
      rec.gold_category = kind;
      rec.gold_step_labels = labels;
      out += jsonio::record_to_json(rec).dump() + "\n";
    }
  }
  return out;
}

std::string run_metrics(const std::string& reports_jsonl,
                        const std::string& gold_jsonl,
                        const engine::EngineConfig& engine_cfg) {
  std::vector<InstanceRecord> gold = parse_records(gold_jsonl);
  if (gold.empty()) throw SchemaError("empty gold file");
  std::map<std::string, const InstanceRecord*> gold_by_id;
  for (const InstanceRecord& g : gold) gold_by_id[g.id] = &g;

  std::vector<json> reports;
  for (const std::string& line : nonempty_lines(reports_jsonl)) {
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("id"))
      throw SchemaError("bad report line");
    reports.push_back(std::move(j));
  }
  if (reports.empty()) throw SchemaError("empty reports file");

  std::vector<metrics::ExecutionRecord> execution;
  std::vector<verify::Category> predicted_cats, gold_cats;
  std::vector<TriLabel> predicted_steps, gold_steps;
  std::vector<double> bleu_scores;
  int le_checked = 0, le_equivalent = 0;

  auto category_from = [](const std::string& s) {
    for (int c = 0; c < 7; ++c)
      if (s == verify::to_string(static_cast<verify::Category>(c)))
        return static_cast<verify::Category>(c);
    throw SchemaError("bad category \"" + s + "\"");
  };

  for (const json& rep : reports) {
    std::string id = rep["id"].get<std::string>();
    auto it = gold_by_id.find(id);
    if (it == gold_by_id.end())
      throw SchemaError("report id '" + id + "' not in gold file");
    const InstanceRecord& g = *it->second;

    std::string cat = rep["category"].get<std::string>();
    bool engine_failed = false, label_mismatch = false;
    if (rep.contains("diagnostics"))
      for (const json& d : rep["diagnostics"]) {
        std::string code = d.value("code", "");
        if (code == "engine_error" || code == "instance_error")
          engine_failed = true;
        if (code == "label_mismatch") label_mismatch = true;
      }
    bool executed = !engine_failed;
    execution.push_back({executed, executed && !label_mismatch});

    if (g.gold_category) {
      predicted_cats.push_back(category_from(cat));
      gold_cats.push_back(category_from(*g.gold_category));
    }
    if (g.gold_step_labels && rep.contains("step_labels") &&
        rep["step_labels"].size() == g.gold_step_labels->size()) {
      for (const json& l : rep["step_labels"])
        predicted_steps.push_back(
            jsonio::trilabel_from_string(l.get<std::string>()));
      for (const std::string& l : *g.gold_step_labels)
        gold_steps.push_back(jsonio::trilabel_from_string(l));
    }
    if (g.conclusion_fol && rep.contains("conclusion_fol")) {
      std::string cand = rep["conclusion_fol"].get<std::string>();
      try {
        bleu_scores.push_back(metrics::fol_bleu(cand, *g.conclusion_fol));
        ++le_checked;
        if (metrics::logical_equivalence(
                fol::normalize(fol::parse_formula(cand)),
                fol::normalize(fol::parse_formula(*g.conclusion_fol)),
                engine_cfg))
          ++le_equivalent;
      } catch (const std::exception&) {
        // unscorable pair: counts toward neither numerator
      }
    }
  }

  json out;
  out["execution_rate"] = metrics::execution_rate(execution);
  try {
    out["execution_accuracy"] = metrics::execution_accuracy(execution);
  } catch (const metrics::NoExecutedInstancesError&) {
    out["execution_accuracy"] = nullptr;
  }
  out["fol_bleu"] =
      bleu_scores.empty()
          ? json(nullptr)
          : json(std::accumulate(bleu_scores.begin(), bleu_scores.end(), 0.0) /
                 static_cast<double>(bleu_scores.size()));
  out["logical_equivalence_rate"] =
      le_checked == 0 ? json(nullptr)
                      : json(static_cast<double>(le_equivalent) / le_checked);
  out["macro_f1"] = predicted_steps.empty()
                        ? json(nullptr)
                        : json(metrics::macro_f1(predicted_steps, gold_steps));
  if (!predicted_cats.empty()) {
    metrics::ConfusionResult conf =
        metrics::category_confusion(predicted_cats, gold_cats);
    out["classification_accuracy"] = conf.accuracy;
    json matrix = json::array();
    for (const auto& row : conf.matrix) matrix.push_back(row);
    out["confusion"] = matrix;
    out["confusion_labels"] = {"T1", "T2", "T3", "T4", "F1", "F2", "Error"};
  } else {
    out["classification_accuracy"] = nullptr;
    out["confusion"] = nullptr;
  }
  return out.dump(2) + "\n";
}

std::vector<ExportFile> run_tptp_export(const std::string& input_jsonl) {
  std::vector<ExportFile> files;
  for (const InstanceRecord& r : parse_records(input_jsonl)) {
    if (!r.has_fol())
      throw SchemaError("instance '" + r.id + "' lacks FOL fields");
    verify::Instance inst = jsonio::to_instance(r);
    files.push_back({inst.id + ".p",
                     tptp::emit_problem(
                         tptp::make_problem(inst.premises, inst.conclusion))});
    for (std::size_t k = 0; k < inst.steps.size(); ++k) {
      std::string stem = inst.id + ".step" + std::to_string(k + 1);
      files.push_back(
          {stem + ".pos.p",
           tptp::emit_problem(tptp::make_problem(inst.premises, inst.steps[k]))});
      files.push_back(
          {stem + ".neg.p",
           tptp::emit_problem(tptp::make_problem(
               inst.premises, fol::Formula::negate(inst.steps[k])))});
    }
  }
  return files;
}

}  // namespace chainprover::harness
