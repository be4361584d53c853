// Copyright 2026 The SI-RNN Toolkit Authors. Apache 2.0 License.

#include "sirnn/sirnn.h"

#include <algorithm>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "json.hpp"
#include "sirnn/baselines/baselines.hpp"
#include "sirnn/corpus/log.hpp"
#include "sirnn/corpus/sample.hpp"
#include "sirnn/corpus/vocab.hpp"
#include "sirnn/evalkit/evalkit.hpp"
#include "sirnn/model/model.hpp"
#include "sirnn/trainer/trainer.hpp"

using nlohmann::json;
using nlohmann::ordered_json;
namespace fs = std::filesystem;

struct sirnn_dataset {
  std::vector<sirnn::corpus::SelectionSample> samples;
};

struct sirnn_report {
  sirnn::evalkit::EvalReport report;
};

struct sirnn_model {
  std::string kind;
  ordered_json config;
  sirnn::ModelConfig model_config;
  std::shared_ptr<const sirnn::corpus::Vocab> vocab;
  std::unique_ptr<sirnn::SelectionModel<float>> neural;
  sirnn::baselines::TfIdfModel tfidf;
  std::uint64_t seed = 0;

  std::unique_ptr<sirnn::Selector> selector() const {
    if (neural) return std::make_unique<sirnn::NeuralSelector>(*neural);
    if (kind == "chance") return std::make_unique<sirnn::baselines::ChanceSelector>(seed);
    if (kind == "recent_tfidf") {
      return std::make_unique<sirnn::baselines::RecentTfIdfSelector>(tfidf, seed);
    }
    return std::make_unique<sirnn::baselines::DirectRecentTfIdfSelector>(tfidf, seed);
  }
};

namespace {

constexpr const char* kModelFormat = "sirnn-model";
constexpr int kModelFormatVersion = 1;
constexpr const char* kEmbeddingsName = "vocab.embeddings";

thread_local std::string last_error;

sirnn_status to_status(sirnn::ErrorCode code) {
  switch (code) {
    case sirnn::ErrorCode::kInvalidArgument: return SIRNN_INVALID_ARGUMENT;
    case sirnn::ErrorCode::kShape: return SIRNN_SHAPE;
    case sirnn::ErrorCode::kNumeric: return SIRNN_NUMERIC;
    case sirnn::ErrorCode::kParse: return SIRNN_PARSE;
    case sirnn::ErrorCode::kIo: return SIRNN_IO;
    case sirnn::ErrorCode::kState: return SIRNN_STATE;
    case sirnn::ErrorCode::kInternal: return SIRNN_INTERNAL;
  }
  return SIRNN_INTERNAL;
}

template <typename Fn>
sirnn_status guarded(Fn&& fn) {
  try {
    fn();
    return SIRNN_OK;
  } catch (const sirnn::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const json::exception& e) {
    last_error = std::string("json: ") + e.what();
    return SIRNN_PARSE;
  } catch (const fs::filesystem_error& e) {
    last_error = e.what();
    return SIRNN_IO;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SIRNN_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SIRNN_INTERNAL;
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) throw sirnn::Error(sirnn::ErrorCode::kInvalidArgument, what);
}

char* copy_out(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

json parse_object(const char* text, const char* what) {
  require(text != nullptr, std::string(what) + " is null");
  json j = json::parse(text);
  require(j.is_object(), std::string(what) + " must be a JSON object");
  return j;
}

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return fallback;
  return it->get<T>();
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw sirnn::Error(sirnn::ErrorCode::kIo, "cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw sirnn::Error(sirnn::ErrorCode::kIo, "cannot write " + path.string());
  out << text;
  if (!out) throw sirnn::Error(sirnn::ErrorCode::kIo, "failed writing " + path.string());
}

bool is_neural(const std::string& kind) { return kind == "sirnn" || kind == "dynamic"; }

// Fills defaults and checks every model key, so the stored config is complete.
ordered_json resolve_model_config(const json& in) {
  ordered_json c;
  c["model"] = get_or<std::string>(in, "model", "sirnn");
  const std::string kind = c["model"];
  static const std::set<std::string> kinds = {"sirnn", "dynamic", "recent_tfidf",
                                              "direct_recent_tfidf", "chance"};
  require(kinds.count(kind) > 0, "unknown model '" + kind + "'");
  c["seed"] = get_or<std::uint64_t>(in, "seed", 0);
  if (is_neural(kind)) {
    c["word_dim"] = get_or<std::size_t>(in, "word_dim", 300);
    c["speaker_dim"] = get_or<std::size_t>(in, "speaker_dim", 50);
    c["utterance_dim"] = get_or<std::size_t>(in, "utterance_dim", 50);
    c["use_biases"] = get_or<bool>(in, "use_biases", false);
    c["shared_igrus"] = get_or<bool>(in, "shared_igrus", false);
    c["joint_selection"] = get_or<bool>(in, "joint_selection", true);
    c["joint_rule"] = get_or<std::string>(in, "joint_rule", "sum");
    c["init_range"] = get_or<double>(in, "init_range", 0.01);
    c["embedding_range"] = get_or<double>(in, "embedding_range", 0.5);
    for (const char* k : {"word_dim", "speaker_dim", "utterance_dim"}) {
      require(c[k].get<std::size_t>() > 0, std::string(k) + " must be positive");
    }
    require(c["init_range"].get<double>() > 0, "init_range must be positive");
    require(c["embedding_range"].get<double>() > 0, "embedding_range must be positive");
    require(kind == "sirnn" || !c["shared_igrus"].get<bool>(),
            "shared_igrus applies to the sirnn model only");
    sirnn::parse_joint_rule(c["joint_rule"].get<std::string>());
  }
  return c;
}

sirnn::ModelConfig model_config_from(const ordered_json& c) {
  sirnn::ModelConfig m;
  m.encoder = sirnn::parse_encoder_kind(c["model"].get<std::string>());
  m.word_dim = c["word_dim"];
  m.speaker_dim = c["speaker_dim"];
  m.utterance_dim = c["utterance_dim"];
  m.use_biases = c["use_biases"];
  m.shared_igrus = c["shared_igrus"];
  m.joint_selection = c["joint_selection"];
  m.joint_rule = sirnn::parse_joint_rule(c["joint_rule"].get<std::string>());
  return m;
}

sirnn::trainer::TrainConfig train_config_from(const json& in) {
  sirnn::trainer::TrainConfig t;
  t.learning_rate = get_or(in, "learning_rate", t.learning_rate);
  t.adam_beta1 = get_or(in, "adam_beta1", t.adam_beta1);
  t.adam_beta2 = get_or(in, "adam_beta2", t.adam_beta2);
  t.adam_eps = get_or(in, "adam_eps", t.adam_eps);
  t.l2 = get_or(in, "l2", t.l2);
  t.batch_size = get_or(in, "batch_size", t.batch_size);
  t.max_epochs = get_or(in, "max_epochs", t.max_epochs);
  t.patience = get_or(in, "patience", t.patience);
  t.init_range = get_or(in, "init_range", t.init_range);
  t.seed = get_or(in, "seed", t.seed);
  t.workers = std::max<std::size_t>(1, get_or(in, "workers", t.workers));
  sirnn::trainer::validate(t);
  return t;
}

sirnn::evalkit::SynthSpec synth_spec_from(const json& in) {
  sirnn::evalkit::SynthSpec s;
  s.n_speakers = get_or(in, "n_speakers", s.n_speakers);
  s.n_subconversations = get_or(in, "n_subconversations", s.n_subconversations);
  s.context_length = get_or(in, "context_length", s.context_length);
  s.n_samples = get_or(in, "n_samples", s.n_samples);
  s.res_cand = get_or(in, "res_cand", s.res_cand);
  s.vocab_size = get_or(in, "vocab_size", s.vocab_size);
  s.topic_tokens = get_or(in, "topic_tokens", s.topic_tokens);
  s.distance_weights = get_or(in, "distance_weights", s.distance_weights);
  s.blank_rate = get_or(in, "blank_rate", s.blank_rate);
  s.seed = get_or(in, "seed", s.seed);
  return s;
}

std::vector<sirnn::corpus::SelectionSample> parse_jsonl(const std::string& text) {
  std::vector<sirnn::corpus::SelectionSample> out;
  std::istringstream in(text);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(sirnn::corpus::sample_from_json(line));
    } catch (const sirnn::Error& e) {
      throw sirnn::Error(e.code(), "line " + std::to_string(n) + ": " + e.what());
    }
  }
  return out;
}

ordered_json scored_pair_json(const sirnn::corpus::SelectionSample& sample,
                              const sirnn::Prediction& p) {
  ordered_json j;
  j["addressee"] = p.addressee;
  j["response"] = p.response;
  j["response_tokens"] = sample.candidates.at(p.response);
  if (p.scored) {
    j["p_addressee"] = p.scored->p_addressee;
    j["p_response"] = p.scored->p_response;
    if (p.scored->p_addressee_given_response) {
      j["p_addressee_given_response"] = *p.scored->p_addressee_given_response;
    }
    if (p.scored->p_response_given_addressee) {
      j["p_response_given_addressee"] = *p.scored->p_response_given_addressee;
    }
    if (p.scored->joint_score) j["joint_score"] = *p.scored->joint_score;
  }
  j["fallback"] = p.fallback;
  return j;
}

struct SplitStats {
  std::size_t docs = 0;
  std::size_t utterances = 0;
  std::size_t samples = 0;
  std::size_t warnings = 0;
};

ordered_json prepare(const json& opts) {
  require(opts.contains("input_dir"), "prepare needs input_dir");
  require(opts.contains("output_dir"), "prepare needs output_dir");
  const fs::path input = opts["input_dir"].get<std::string>();
  const fs::path output = opts["output_dir"].get<std::string>();
  if (!fs::is_directory(input)) {
    throw sirnn::Error(sirnn::ErrorCode::kIo, "input directory not found: " + input.string());
  }
  sirnn::corpus::ExtractOptions extract;
  extract.context_length = get_or(opts, "context_length", extract.context_length);
  extract.n_candidates = get_or(opts, "res_cand", extract.n_candidates);
  const auto seed = get_or<std::uint64_t>(opts, "seed", 0);
  require(extract.context_length > 0, "context_length must be positive");
  require(extract.n_candidates > 0, "res_cand must be positive");

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(input)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  static const char* const kSplits[] = {"train", "dev", "test"};
  std::map<std::string, std::string> assignment;
  const std::string manifest = get_or<std::string>(opts, "split_manifest", "");
  if (manifest.empty()) {
    for (const auto& f : files) assignment[f.filename().string()] = "train";
  } else {
    const json m = json::parse(read_file(manifest));
    require(m.is_object(), "split manifest must be a JSON object");
    for (const auto& [split, names] : m.items()) {
      require(split == "train" || split == "dev" || split == "test",
              "unknown split '" + split + "' in manifest");
      for (const auto& name : names) {
        const std::string n = name.get<std::string>();
        require(assignment.emplace(n, split).second, "'" + n + "' listed twice in manifest");
        if (!fs::is_regular_file(input / n)) {
          throw sirnn::Error(sirnn::ErrorCode::kIo,
                             "manifest names a missing file: " + (input / n).string());
        }
      }
    }
  }

  std::map<std::string, SplitStats> stats;
  std::map<std::string, std::vector<sirnn::corpus::SelectionSample>> samples;
  std::vector<std::vector<sirnn::corpus::Tokens>> train_docs;
  std::size_t unassigned = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    auto it = assignment.find(files[i].filename().string());
    if (it == assignment.end()) {
      ++unassigned;
      continue;
    }
    sirnn::corpus::ParsedDocument doc;
    try {
      doc = sirnn::corpus::parse_document(read_file(files[i]));
    } catch (const sirnn::Error& e) {
      throw sirnn::Error(e.code(), files[i].string() + ": " + e.what());
    }
    auto& s = stats[it->second];
    ++s.docs;
    s.utterances += doc.lines.size();
    s.warnings += doc.warnings.size();
    extract.seed = seed + i;
    extract.doc_id = files[i].stem().string();
    auto extracted = sirnn::corpus::extract_samples(doc.lines, extract);
    s.samples += extracted.size();
    auto& dst = samples[it->second];
    dst.insert(dst.end(), extracted.begin(), extracted.end());
    if (it->second == "train") {
      std::vector<sirnn::corpus::Tokens> utterances;
      for (const auto& line : sirnn::corpus::annotate_document(doc.lines)) {
        utterances.push_back(line.tokens);
      }
      train_docs.push_back(std::move(utterances));
    }
  }

  fs::create_directories(output);
  ordered_json out;
  SplitStats total;
  for (const char* split : kSplits) {
    sirnn::corpus::write_samples(output / (std::string(split) + ".jsonl"), samples[split]);
    const auto& s = stats[split];
    out[split] = {{"docs", s.docs}, {"utterances", s.utterances}, {"samples", s.samples}};
    total.docs += s.docs;
    total.utterances += s.utterances;
    total.samples += s.samples;
    total.warnings += s.warnings;
  }
  out["total"] = {{"docs", total.docs},
                  {"utterances", total.utterances},
                  {"samples", total.samples}};
  out["malformed_lines"] = total.warnings;
  out["unassigned_files"] = unassigned;
  write_file(output / "tfidf.json", sirnn::baselines::TfIdfModel::fit(train_docs).to_json());
  write_file(output / "stats.json", out.dump(2) + "\n");
  return out;
}

}  // namespace

extern "C" {

const char* sirnn_version(void) { return "1.0.0"; }

const char* sirnn_last_error(void) { return last_error.c_str(); }

const char* sirnn_status_name(sirnn_status status) {
  switch (status) {
    case SIRNN_OK: return "ok";
    case SIRNN_INVALID_ARGUMENT: return "invalid argument";
    case SIRNN_SHAPE: return "shape mismatch";
    case SIRNN_NUMERIC: return "numeric error";
    case SIRNN_PARSE: return "parse error";
    case SIRNN_IO: return "i/o error";
    case SIRNN_STATE: return "invalid state";
    case SIRNN_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void sirnn_string_free(char* text) { std::free(text); }

sirnn_status sirnn_prepare(const char* options_json, char** stats_json) {
  return guarded([&] {
    const auto stats = prepare(parse_object(options_json, "prepare options"));
    if (stats_json) *stats_json = copy_out(stats.dump(2));
  });
}

sirnn_status sirnn_dataset_load(const char* jsonl_path, sirnn_dataset** out) {
  return guarded([&] {
    require(jsonl_path && out, "null argument");
    auto d = std::make_unique<sirnn_dataset>();
    d->samples = sirnn::corpus::read_samples(jsonl_path);
    *out = d.release();
  });
}

sirnn_status sirnn_dataset_synthesize(const char* spec_json, sirnn_dataset** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    auto d = std::make_unique<sirnn_dataset>();
    d->samples = sirnn::evalkit::generate_synthetic(
        synth_spec_from(parse_object(spec_json, "synth spec")));
    *out = d.release();
  });
}

sirnn_status sirnn_dataset_from_jsonl(const char* text, sirnn_dataset** out) {
  return guarded([&] {
    require(text && out, "null argument");
    auto d = std::make_unique<sirnn_dataset>();
    d->samples = parse_jsonl(text);
    *out = d.release();
  });
}

sirnn_status sirnn_dataset_save(const sirnn_dataset* dataset, const char* jsonl_path) {
  return guarded([&] {
    require(dataset && jsonl_path, "null argument");
    sirnn::corpus::write_samples(jsonl_path, dataset->samples);
  });
}

size_t sirnn_dataset_size(const sirnn_dataset* dataset) {
  return dataset ? dataset->samples.size() : 0;
}

void sirnn_dataset_free(sirnn_dataset* dataset) { delete dataset; }

sirnn_status sirnn_model_create(const char* config_json, const sirnn_dataset* source,
                                sirnn_model** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    const json in = parse_object(config_json, "model config");
    auto m = std::make_unique<sirnn_model>();
    m->config = resolve_model_config(in);
    m->kind = m->config["model"];
    m->seed = m->config["seed"];
    if (is_neural(m->kind)) {
      require(source != nullptr && !source->samples.empty(),
              "a neural model needs a non-empty dataset for its vocabulary");
      m->model_config = model_config_from(m->config);
      sirnn::corpus::Vocab::Options vo;
      vo.dim = m->model_config.word_dim;
      vo.seed = m->seed;
      vo.random_range = static_cast<float>(m->config["embedding_range"].get<double>());
      const std::string vectors = get_or<std::string>(in, "word_vectors", "");
      if (vectors.empty()) {
        m->vocab = std::make_shared<const sirnn::corpus::Vocab>(
            sirnn::corpus::Vocab::build(source->samples, vo));
      } else {
        const auto wv = sirnn::corpus::load_word_vectors(vectors);
        m->vocab = std::make_shared<const sirnn::corpus::Vocab>(
            sirnn::corpus::Vocab::build(source->samples, vo, &wv));
      }
      m->neural = std::make_unique<sirnn::SelectionModel<float>>(
          m->model_config,
          sirnn::trainer::init_params<float>(m->model_config, m->seed,
                                             m->config["init_range"].get<double>()),
          m->vocab);
    } else if (m->kind != "chance") {
      const std::string tfidf = get_or<std::string>(in, "tfidf", "");
      if (!tfidf.empty()) {
        m->tfidf = sirnn::baselines::TfIdfModel::from_json(read_file(tfidf));
      } else {
        require(source != nullptr, "a tfidf model needs a dataset or a tfidf path");
        m->tfidf = sirnn::baselines::TfIdfModel::fit_samples(source->samples);
      }
    }
    *out = m.release();
  });
}

sirnn_status sirnn_model_save(const sirnn_model* model, const char* dir) {
  return guarded([&] {
    require(model && dir, "null argument");
    const fs::path path = dir;
    fs::create_directories(path);
    ordered_json j;
    j["format"] = kModelFormat;
    j["version"] = kModelFormatVersion;
    j["config"] = model->config;
    if (model->neural) {
      j["vocab"] = model->vocab->tokens();
      auto entries = sirnn::to_named_tensors(model->neural->parameters());
      entries.push_back({kEmbeddingsName, model->vocab->embeddings()});
      sirnn::numkit::save_checkpoint(path / "params.bin", entries);
    } else if (model->kind != "chance") {
      j["tfidf"] = json::parse(model->tfidf.to_json());
    }
    write_file(path / "model.json", j.dump(2) + "\n");
  });
}

sirnn_status sirnn_model_load(const char* dir, sirnn_model** out) {
  return guarded([&] {
    require(dir && out, "null argument");
    const fs::path path = dir;
    const json j = json::parse(read_file(path / "model.json"));
    if (j.value("format", "") != kModelFormat || j.value("version", 0) != kModelFormatVersion) {
      throw sirnn::Error(sirnn::ErrorCode::kParse,
                         (path / "model.json").string() + " is not a version 1 model file");
    }
    auto m = std::make_unique<sirnn_model>();
    m->config = resolve_model_config(j.at("config"));
    m->kind = m->config["model"];
    m->seed = m->config["seed"];
    if (is_neural(m->kind)) {
      m->model_config = model_config_from(m->config);
      auto entries = sirnn::numkit::load_checkpoint(path / "params.bin");
      auto emb = std::find_if(entries.begin(), entries.end(),
                              [](const auto& e) { return e.name == kEmbeddingsName; });
      if (emb == entries.end()) {
        throw sirnn::Error(sirnn::ErrorCode::kParse, "checkpoint has no word embeddings");
      }
      auto embeddings = std::move(emb->tensor);
      entries.erase(emb);
      m->vocab = std::make_shared<const sirnn::corpus::Vocab>(
          j.at("vocab").get<std::vector<std::string>>(), std::move(embeddings));
      m->neural = std::make_unique<sirnn::SelectionModel<float>>(
          m->model_config, sirnn::from_named_tensors(entries, m->model_config), m->vocab);
    } else if (m->kind != "chance") {
      m->tfidf = sirnn::baselines::TfIdfModel::from_json(j.at("tfidf").dump());
    }
    *out = m.release();
  });
}

sirnn_status sirnn_model_config(const sirnn_model* model, char** config_json) {
  return guarded([&] {
    require(model && config_json, "null argument");
    *config_json = copy_out(model->config.dump(2));
  });
}

sirnn_status sirnn_model_train(sirnn_model* model, const char* train_config_json,
                               const sirnn_dataset* train, const sirnn_dataset* dev,
                               const char* log_path, char** result_json) {
  return guarded([&] {
    require(model && train && dev, "null argument");
    if (!model->neural) {
      throw sirnn::Error(sirnn::ErrorCode::kState,
                         "model '" + model->kind + "' has no trainable parameters");
    }
    const auto config = train_config_from(parse_object(train_config_json, "train config"));
    std::ofstream log;
    if (log_path) {
      log.open(log_path, std::ios::binary);
      if (!log) throw sirnn::Error(sirnn::ErrorCode::kIo, std::string("cannot write ") + log_path);
    }
    const auto result = sirnn::trainer::train(
        *model->neural, config, train->samples, dev->samples,
        [&](const sirnn::trainer::EpochLog& e) {
          if (log) log << sirnn::trainer::epoch_log_json(e) << "\n" << std::flush;
        });
    if (result_json) {
      ordered_json r;
      r["best_epoch"] = result.best_epoch;
      r["best_dev_adr_res"] = result.best_dev_adr_res;
      r["epochs"] = result.log.size();
      *result_json = copy_out(r.dump(2));
    }
  });
}

sirnn_status sirnn_model_evaluate(const sirnn_model* model, const sirnn_dataset* samples,
                                  size_t workers, sirnn_report** out) {
  return guarded([&] {
    require(model && samples && out, "null argument");
    for (std::size_t i = 0; i < samples->samples.size(); ++i) {
      try {
        sirnn::corpus::validate_sample(samples->samples[i]);
      } catch (const sirnn::Error& e) {
        throw sirnn::Error(e.code(), "sample " + std::to_string(i) + ": " + e.what());
      }
    }
    auto r = std::make_unique<sirnn_report>();
    r->report = sirnn::evalkit::evaluate(*model->selector(), samples->samples,
                                         std::max<std::size_t>(1, workers));
    *out = r.release();
  });
}

sirnn_status sirnn_model_select(const sirnn_model* model, const char* sample_json,
                                char** pair_json) {
  return guarded([&] {
    require(model && sample_json && pair_json, "null argument");
    const auto sample = sirnn::corpus::sample_from_json(sample_json);
    sirnn::corpus::validate_sample(sample);
    const auto prediction = model->selector()->predict(sample, 0);
    *pair_json = copy_out(scored_pair_json(sample, prediction).dump(2));
  });
}

void sirnn_model_free(sirnn_model* model) { delete model; }

sirnn_status sirnn_report_render(const sirnn_report* report, sirnn_report_format format,
                                 char** text) {
  return guarded([&] {
    require(report && text, "null argument");
    switch (format) {
      case SIRNN_REPORT_JSON: *text = copy_out(sirnn::evalkit::report_to_json(report->report)); return;
      case SIRNN_REPORT_TABLE: *text = copy_out(sirnn::evalkit::report_to_table(report->report)); return;
      case SIRNN_REPORT_CSV: *text = copy_out(sirnn::evalkit::bins_to_csv(report->report)); return;
    }
    require(false, "unknown report format");
  });
}

double sirnn_report_adr(const sirnn_report* report) { return report ? report->report.adr_acc : 0; }
double sirnn_report_res(const sirnn_report* report) { return report ? report->report.res_acc : 0; }
double sirnn_report_adr_res(const sirnn_report* report) {
  return report ? report->report.adr_res_acc : 0;
}

void sirnn_report_free(sirnn_report* report) { delete report; }

}  // extern "C"
