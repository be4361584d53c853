// Copyright 2026 The SI-RNN Toolkit Authors. Apache 2.0 License.
//
// sirnn: prepare, synth, train, eval and select from one entry point.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "sirnn/sirnn.h"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

struct Failure {
  int exit_code;
  std::string message;
};

void check(sirnn_status status, const std::string& during) {
  if (status != SIRNN_OK) {
    throw Failure{1, during + ": " + sirnn_status_name(status) + ": " + sirnn_last_error()};
  }
}

std::string take(char* text) {
  std::string out = text ? text : "";
  sirnn_string_free(text);
  return out;
}

// Keys accepted in a config file. Flags map onto the same names.
const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      // run
      "seed", "workers", "context_length", "res_cand", "model",
      // model
      "word_dim", "speaker_dim", "utterance_dim", "use_biases", "shared_igrus",
      "joint_selection", "joint_rule", "init_range", "embedding_range",
      // training
      "learning_rate", "adam_beta1", "adam_beta2", "adam_eps", "l2", "batch_size",
      "max_epochs", "patience",
      // synthetic data
      "n_speakers", "n_subconversations", "n_samples", "vocab_size", "topic_tokens",
      "distance_weights", "blank_rate",
      // paths
      "input_dir", "output_dir", "split_manifest", "train", "dev", "data", "checkpoint",
      "out", "report_dir", "word_vectors", "tfidf", "sample"};
  return keys;
}

ordered_json load_config(const std::string& path) {
  if (path.empty()) return ordered_json::object();
  std::ifstream in(path);
  if (!in) throw Failure{1, "config file not found: " + path};
  ordered_json j;
  try {
    j = ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Failure{1, "config " + path + ": " + e.what()};
  }
  if (!j.is_object()) throw Failure{1, "config " + path + " must be a JSON object"};
  for (const auto& [key, _] : j.items()) {
    if (!known_keys().count(key)) throw Failure{1, "config " + path + ": unknown key '" + key + "'"};
  }
  return j;
}

std::string need_path(const ordered_json& cfg, const char* key, const char* flag) {
  if (!cfg.contains(key) || cfg[key].get<std::string>().empty()) {
    throw Failure{1, std::string("missing ") + flag};
  }
  return cfg[key].get<std::string>();
}

std::string need_existing(const ordered_json& cfg, const char* key, const char* flag) {
  std::string path = need_path(cfg, key, flag);
  if (!fs::exists(path)) throw Failure{1, std::string(flag) + " path not found: " + path};
  return path;
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{1, "cannot write " + path.string()};
  out << text;
}

void echo_config(const fs::path& dir, const ordered_json& cfg) {
  write_text(dir / "config.json", cfg.dump(2) + "\n");
}

struct Dataset {
  sirnn_dataset* handle = nullptr;
  Dataset() = default;
  Dataset(const Dataset&) = delete;
  ~Dataset() { sirnn_dataset_free(handle); }
};

struct Model {
  sirnn_model* handle = nullptr;
  Model() = default;
  Model(const Model&) = delete;
  ~Model() { sirnn_model_free(handle); }
};

struct Report {
  sirnn_report* handle = nullptr;
  Report() = default;
  Report(const Report&) = delete;
  ~Report() { sirnn_report_free(handle); }
};

void load_dataset(Dataset& d, const std::string& path) {
  check(sirnn_dataset_load(path.c_str(), &d.handle), "loading " + path);
}

bool is_neural(const ordered_json& cfg) {
  const std::string m = cfg.value("model", "sirnn");
  return m == "sirnn" || m == "dynamic";
}

void cmd_prepare(ordered_json cfg) {
  need_existing(cfg, "input_dir", "--input");
  const std::string out = need_path(cfg, "output_dir", "--output");
  if (cfg.contains("split_manifest")) need_existing(cfg, "split_manifest", "--split-manifest");
  char* stats = nullptr;
  check(sirnn_prepare(cfg.dump().c_str(), &stats), "prepare");
  const auto s = ordered_json::parse(take(stats));
  echo_config(out, cfg);
  std::printf("split   docs  utterances  samples\n");
  for (const char* split : {"train", "dev", "test", "total"}) {
    std::printf("%-6s %5zu  %10zu  %7zu\n", split, s[split]["docs"].get<std::size_t>(),
                s[split]["utterances"].get<std::size_t>(), s[split]["samples"].get<std::size_t>());
  }
  std::printf("malformed lines: %zu\n", s["malformed_lines"].get<std::size_t>());
}

void cmd_synth(ordered_json cfg) {
  const std::string out = need_path(cfg, "out", "--out");
  Dataset d;
  check(sirnn_dataset_synthesize(cfg.dump().c_str(), &d.handle), "synth");
  fs::path path = out;
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  check(sirnn_dataset_save(d.handle, out.c_str()), "writing " + out);
  echo_config(path.has_parent_path() ? path.parent_path() : fs::path("."), cfg);
  std::printf("wrote %zu samples to %s\n", sirnn_dataset_size(d.handle), out.c_str());
}

void cmd_train(ordered_json cfg) {
  const std::string out = need_path(cfg, "out", "--out");
  Dataset train;
  load_dataset(train, need_existing(cfg, "train", "--train"));
  Model model;
  check(sirnn_model_create(cfg.dump().c_str(), train.handle, &model.handle), "creating model");
  if (is_neural(cfg)) {
    Dataset dev;
    load_dataset(dev, need_existing(cfg, "dev", "--dev"));
    fs::create_directories(out);
    const std::string log = (fs::path(out) / "train_log.jsonl").string();
    char* result = nullptr;
    check(sirnn_model_train(model.handle, cfg.dump().c_str(), train.handle, dev.handle,
                            log.c_str(), &result),
          "training");
    std::printf("%s\n", take(result).c_str());
  }
  check(sirnn_model_save(model.handle, out.c_str()), "saving model");
  echo_config(out, cfg);
}

// A checkpoint when given, otherwise a freshly built baseline.
void open_model(Model& model, const ordered_json& cfg) {
  if (cfg.contains("checkpoint")) {
    const std::string dir = need_existing(cfg, "checkpoint", "--checkpoint");
    check(sirnn_model_load(dir.c_str(), &model.handle), "loading " + dir);
    return;
  }
  if (is_neural(cfg)) throw Failure{1, "neural models need --checkpoint"};
  Dataset source;
  if (cfg.value("model", "") != "chance" && !cfg.contains("tfidf")) {
    load_dataset(source, need_existing(cfg, "train", "--train (or --tfidf)"));
  }
  if (cfg.contains("tfidf")) need_existing(cfg, "tfidf", "--tfidf");
  check(sirnn_model_create(cfg.dump().c_str(), source.handle, &model.handle), "creating model");
}

void cmd_eval(ordered_json cfg) {
  Model model;
  open_model(model, cfg);
  Dataset data;
  load_dataset(data, need_existing(cfg, "data", "--data"));
  Report report;
  check(sirnn_model_evaluate(model.handle, data.handle, cfg.value("workers", std::size_t{1}),
                             &report.handle),
        "evaluating");
  char* table = nullptr;
  check(sirnn_report_render(report.handle, SIRNN_REPORT_TABLE, &table), "rendering");
  std::printf("%s", take(table).c_str());
  if (cfg.contains("report_dir")) {
    const fs::path dir = cfg["report_dir"].get<std::string>();
    char* text = nullptr;
    check(sirnn_report_render(report.handle, SIRNN_REPORT_JSON, &text), "rendering");
    write_text(dir / "report.json", take(text) + "\n");
    check(sirnn_report_render(report.handle, SIRNN_REPORT_TABLE, &text), "rendering");
    write_text(dir / "report.txt", take(text));
    check(sirnn_report_render(report.handle, SIRNN_REPORT_CSV, &text), "rendering");
    write_text(dir / "bins.csv", take(text));
    echo_config(dir, cfg);
  }
}

void cmd_select(ordered_json cfg) {
  Model model;
  open_model(model, cfg);
  const std::string path = need_path(cfg, "sample", "--sample");
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw Failure{1, "--sample path not found: " + path};
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  char* pair = nullptr;
  check(sirnn_model_select(model.handle, text.c_str(), &pair), "selecting");
  std::printf("%s\n", take(pair).c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Addressee and response selection for multi-party conversations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", sirnn_version());

  std::string config_path;
  std::uint64_t seed = 0;
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::size_t context_length = 0, res_cand = 0;
  std::string model_name;
  bool shared_igrus = false, no_joint = false;

  // Flags that map to config keys: name -> setter applied when given.
  std::map<std::string, std::function<void(ordered_json&)>> overrides;
  auto shared = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON config with flat keys; flags override it")
        ->check(CLI::ExistingFile);
    sub->add_option("--seed", seed, "Seed for every random choice");
    sub->add_option("--workers", workers, "Worker threads (default: available CPUs)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--context-length", context_length, "Context turns T")
        ->check(CLI::IsMember({5, 10, 15}));
    sub->add_option("--res-cand", res_cand, "Candidate responses per sample")
        ->check(CLI::IsMember({2, 10}));
    sub->add_option("--model", model_name, "Selector")
        ->check(CLI::IsMember({"sirnn", "dynamic", "recent_tfidf", "direct_recent_tfidf",
                               "chance"}));
    sub->add_flag("--shared-igrus", shared_igrus, "One set of IGRU weights for all roles");
    sub->add_flag("--no-joint-selection", no_joint, "Select addressee and response separately");
  };
  auto path_option = [&](CLI::App* sub, const std::string& flag, const std::string& key,
                         const std::string& help) {
    auto value = std::make_shared<std::string>();
    sub->add_option(flag, *value, help);
    overrides[sub->get_name() + key] = [value, key](ordered_json& cfg) {
      if (!value->empty()) cfg[key] = *value;
    };
  };

  auto* prepare = app.add_subcommand("prepare", "Raw chat logs to train/dev/test samples");
  shared(prepare);
  path_option(prepare, "--input", "input_dir", "Directory of raw logs");
  path_option(prepare, "--output", "output_dir", "Directory for the prepared samples");
  path_option(prepare, "--split-manifest", "split_manifest",
              "JSON mapping train/dev/test to file names");

  auto* synth = app.add_subcommand("synth", "Generate a synthetic corpus");
  shared(synth);
  path_option(synth, "--out", "out", "Output JSONL path");
  std::size_t n_samples = 0, n_speakers = 0;
  auto* n_samples_opt = synth->add_option("--n-samples", n_samples, "Number of samples");
  auto* n_speakers_opt = synth->add_option("--n-speakers", n_speakers, "Number of speakers");

  auto* train = app.add_subcommand("train", "Train a selector and save it");
  shared(train);
  path_option(train, "--train", "train", "Training samples (JSONL)");
  path_option(train, "--dev", "dev", "Development samples (JSONL)");
  path_option(train, "--out", "out", "Checkpoint directory");
  path_option(train, "--word-vectors", "word_vectors", "Pretrained vectors, text format");
  path_option(train, "--tfidf", "tfidf", "TF-IDF statistics from prepare");

  auto* eval = app.add_subcommand("eval", "Evaluate a selector");
  shared(eval);
  path_option(eval, "--checkpoint", "checkpoint", "Checkpoint directory");
  path_option(eval, "--data", "data", "Samples to evaluate (JSONL)");
  path_option(eval, "--train", "train", "Training samples for TF-IDF statistics");
  path_option(eval, "--tfidf", "tfidf", "TF-IDF statistics from prepare");
  path_option(eval, "--report-dir", "report_dir", "Directory for report.json/txt, bins.csv");

  auto* select = app.add_subcommand("select", "Pick the pair for one sample");
  shared(select);
  path_option(select, "--checkpoint", "checkpoint", "Checkpoint directory");
  path_option(select, "--sample", "sample", "One sample as JSON, or - for stdin");
  path_option(select, "--train", "train", "Training samples for TF-IDF statistics");
  path_option(select, "--tfidf", "tfidf", "TF-IDF statistics from prepare");

  CLI11_PARSE(app, argc, argv);

  CLI::App* sub = app.get_subcommands().front();
  try {
    ordered_json cfg = load_config(config_path);
    if (sub->count("--seed")) cfg["seed"] = seed;
    if (sub->count("--workers") || !cfg.contains("workers")) cfg["workers"] = workers;
    if (sub->count("--context-length")) cfg["context_length"] = context_length;
    if (sub->count("--res-cand")) cfg["res_cand"] = res_cand;
    if (sub->count("--model")) cfg["model"] = model_name;
    if (shared_igrus) cfg["shared_igrus"] = true;
    if (no_joint) cfg["joint_selection"] = false;
    if (n_samples_opt->count()) cfg["n_samples"] = n_samples;
    if (n_speakers_opt->count()) cfg["n_speakers"] = n_speakers;
    for (auto& [key, apply] : overrides) {
      if (key.rfind(sub->get_name(), 0) == 0) apply(cfg);
    }
    if (!cfg.contains("model")) cfg["model"] = "sirnn";
    if (!cfg.contains("seed")) cfg["seed"] = 0;

    const std::string name = sub->get_name();
    if (name == "prepare") cmd_prepare(cfg);
    if (name == "synth") cmd_synth(cfg);
    if (name == "train") cmd_train(cfg);
    if (name == "eval") cmd_eval(cfg);
    if (name == "select") cmd_select(cfg);
  } catch (const Failure& f) {
    std::fprintf(stderr, "error: %s\n", f.message.c_str());
    return f.exit_code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
