#ifndef CHAINPROVER_H
#define CHAINPROVER_H

/* C interface to the chainprover verification toolkit. All functions are
 * thread-safe; cp_last_error() is per-thread. Strings returned through out
 * parameters are heap-allocated and must be released with cp_string_free(). */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cp_status {
  CP_OK = 0,
  CP_ERR_CONFIG = 2,
  CP_ERR_INPUT = 3,
  CP_ERR_INTERNAL = 4
} cp_status;

/* Opaque configuration/engine handle. */
typedef struct cp_engine cp_engine;

cp_engine* cp_engine_new(void);
void cp_engine_free(cp_engine* engine);

/* Set a configuration key (engine, prover_cmd, timeout_ms, workers, policy,
 * seed, llm_endpoint, llm_model, prompt_template, input_path, output_dir).
 * Values are validated when an operation runs. */
cp_status cp_engine_set(cp_engine* engine, const char* key, const char* value);

/* Verify a batch of JSONL instances. *reports_jsonl receives one report per
 * input line in input order; *summary_json receives category counts. Either
 * out pointer may be NULL to skip it. */
cp_status cp_verify(cp_engine* engine, const char* input_jsonl,
                    char** reports_jsonl, char** summary_json);

/* Synthesize labeled fixtures. kinds_csv is a comma-separated subset of
 * T1,T2,T3,T4. */
cp_status cp_mutate(cp_engine* engine, const char* kinds_csv,
                    int count_per_kind, unsigned long long seed, int depth,
                    char** fixtures_jsonl);

/* Score verification reports against gold fixtures into a metric report. */
cp_status cp_metrics(cp_engine* engine, const char* reports_jsonl,
                     const char* gold_jsonl, char** metric_report_json);

/* Write TPTP problem files for each instance into output_dir (created if
 * missing). *manifest receives the newline-separated file names. */
cp_status cp_tptp_export(cp_engine* engine, const char* input_jsonl,
                         const char* output_dir, char** manifest);

/* Parse and normalize one surface FOL formula; *canonical receives the
 * canonical rendering. Exposed for interface-level smoke checks. */
cp_status cp_parse_formula(const char* surface, char** canonical);

/* Message from the most recent failing call on this thread ("" if none). */
const char* cp_last_error(void);

void cp_string_free(char* s);

const char* cp_version(void);

#ifdef __cplusplus
}
#endif

#endif /* CHAINPROVER_H */
