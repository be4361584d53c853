/* Copyright 2026 The SI-RNN Toolkit Authors. Apache 2.0 License. */

/* C interface to the addressee/response selection toolkit.
 *
 * Every function returns a status code; on failure a description is available
 * from sirnn_last_error() on the same thread until the next failing call.
 * Strings returned through char** are owned by the caller and released with
 * sirnn_string_free(). Configuration is passed as flat JSON objects; keys a
 * function does not use are ignored. */

#ifndef SIRNN_SIRNN_H_
#define SIRNN_SIRNN_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SIRNN_API __declspec(dllexport)
#else
#define SIRNN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sirnn_status {
  SIRNN_OK = 0,
  SIRNN_INVALID_ARGUMENT = 1,
  SIRNN_SHAPE = 2,
  SIRNN_NUMERIC = 3,
  SIRNN_PARSE = 4,
  SIRNN_IO = 5,
  SIRNN_STATE = 6,
  SIRNN_INTERNAL = 7
} sirnn_status;

typedef enum sirnn_report_format {
  SIRNN_REPORT_JSON = 0,
  SIRNN_REPORT_TABLE = 1,
  SIRNN_REPORT_CSV = 2
} sirnn_report_format;

typedef struct sirnn_dataset sirnn_dataset;
typedef struct sirnn_model sirnn_model;
typedef struct sirnn_report sirnn_report;

SIRNN_API const char* sirnn_version(void);
SIRNN_API const char* sirnn_last_error(void);
SIRNN_API const char* sirnn_status_name(sirnn_status status);
SIRNN_API void sirnn_string_free(char* text);

/* Raw logs to samples. Options: input_dir, output_dir, context_length,
 * res_cand, seed, and optionally split_manifest, a JSON file mapping "train",
 * "dev" and "test" to lists of file names. Without a manifest every document
 * goes to train. Writes {train,dev,test}.jsonl, tfidf.json and stats.json;
 * the stats are also returned. */
SIRNN_API sirnn_status sirnn_prepare(const char* options_json, char** stats_json);

/* Datasets: lists of selection samples. */
SIRNN_API sirnn_status sirnn_dataset_load(const char* jsonl_path, sirnn_dataset** out);
/* Spec keys: n_speakers, n_subconversations, context_length, n_samples,
 * res_cand, vocab_size, topic_tokens, distance_weights, blank_rate, seed. */
SIRNN_API sirnn_status sirnn_dataset_synthesize(const char* spec_json, sirnn_dataset** out);
SIRNN_API sirnn_status sirnn_dataset_from_jsonl(const char* text, sirnn_dataset** out);
SIRNN_API sirnn_status sirnn_dataset_save(const sirnn_dataset* dataset, const char* jsonl_path);
SIRNN_API size_t sirnn_dataset_size(const sirnn_dataset* dataset);
SIRNN_API void sirnn_dataset_free(sirnn_dataset* dataset);

/* Models. Config keys: model (sirnn, dynamic, recent_tfidf,
 * direct_recent_tfidf, chance), word_dim, speaker_dim, utterance_dim,
 * use_biases, shared_igrus, joint_selection, joint_rule (sum, logmean),
 * seed, init_range, embedding_range, word_vectors (path), tfidf (path).
 * The vocabulary, or the TF-IDF statistics when no tfidf path is given, come
 * from `source`. */
SIRNN_API sirnn_status sirnn_model_create(const char* config_json, const sirnn_dataset* source,
                                          sirnn_model** out);
SIRNN_API sirnn_status sirnn_model_load(const char* dir, sirnn_model** out);
/* Writes model.json and, for neural models, params.bin into `dir`. */
SIRNN_API sirnn_status sirnn_model_save(const sirnn_model* model, const char* dir);
SIRNN_API sirnn_status sirnn_model_config(const sirnn_model* model, char** config_json);
/* Train keys: learning_rate, adam_beta1, adam_beta2, adam_eps, l2,
 * batch_size, max_epochs, patience, seed, workers. Each epoch is appended to
 * `log_path` as one JSON line when it is non-null. Returns {best_epoch,
 * best_dev_adr_res, epochs}. Only neural models can be trained. */
SIRNN_API sirnn_status sirnn_model_train(sirnn_model* model, const char* train_config_json,
                                         const sirnn_dataset* train, const sirnn_dataset* dev,
                                         const char* log_path, char** result_json);
SIRNN_API sirnn_status sirnn_model_evaluate(const sirnn_model* model,
                                            const sirnn_dataset* samples, size_t workers,
                                            sirnn_report** out);
/* One sample as JSON in, the chosen pair with its probabilities out. */
SIRNN_API sirnn_status sirnn_model_select(const sirnn_model* model, const char* sample_json,
                                          char** pair_json);
SIRNN_API void sirnn_model_free(sirnn_model* model);

SIRNN_API sirnn_status sirnn_report_render(const sirnn_report* report,
                                           sirnn_report_format format, char** text);
SIRNN_API double sirnn_report_adr(const sirnn_report* report);
SIRNN_API double sirnn_report_res(const sirnn_report* report);
SIRNN_API double sirnn_report_adr_res(const sirnn_report* report);
SIRNN_API void sirnn_report_free(sirnn_report* report);

#ifdef __cplusplus
}
#endif

#endif /* SIRNN_SIRNN_H_ */
