// Copyright 2026 The SI-RNN Toolkit Authors. Apache 2.0 License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "sirnn/sirnn.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Takes ownership of a returned string.
std::string take(char* text) {
  std::string out = text ? text : "";
  sirnn_string_free(text);
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path fresh_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

sirnn_dataset* synth(std::size_t n, std::uint64_t seed) {
  sirnn_dataset* ds = nullptr;
  const json spec = {{"n_samples", n}, {"n_speakers", 4}, {"context_length", 5},
                     {"distance_weights", {1, 1}}, {"vocab_size", 12}, {"seed", seed}};
  REQUIRE(sirnn_dataset_synthesize(spec.dump().c_str(), &ds) == SIRNN_OK);
  return ds;
}

void write_log(const fs::path& path, int salt) {
  const char* names[] = {"ann", "ben", "cat", "dan"};
  std::ofstream out(path);
  for (int i = 0; i < 30; ++i) {
    out << i << '\t' << names[(i + salt) % 4] << '\t';
    if (i >= 4 && i % 3 == 0) out << names[(i + salt + 1) % 4] << ": ";
    out << "message " << i << " from doc " << salt << '\n';
  }
}

}  // namespace

TEST_CASE("errors and status names") {
  CHECK(std::string(sirnn_version()) == "1.0.0");
  CHECK(std::string(sirnn_status_name(SIRNN_PARSE)) == "parse error");
  sirnn_dataset* ds = nullptr;
  CHECK(sirnn_dataset_synthesize("{not json", &ds) == SIRNN_PARSE);
  CHECK(ds == nullptr);
  CHECK(std::string(sirnn_last_error()).size() > 0);
  CHECK(sirnn_dataset_synthesize("{\"n_speakers\": 1}", &ds) == SIRNN_INVALID_ARGUMENT);
  CHECK(sirnn_dataset_synthesize("{}", nullptr) == SIRNN_INVALID_ARGUMENT);
  CHECK(sirnn_dataset_load("/nonexistent/file.jsonl", &ds) != SIRNN_OK);
  sirnn_model* m = nullptr;
  CHECK(sirnn_model_create("{\"model\": \"transformer\"}", nullptr, &m) ==
        SIRNN_INVALID_ARGUMENT);
  CHECK(sirnn_model_load("/nonexistent/dir", &m) != SIRNN_OK);
  sirnn_dataset_free(nullptr);
  sirnn_model_free(nullptr);
  sirnn_report_free(nullptr);
}

TEST_CASE("dataset round trip") {
  sirnn_dataset* ds = synth(20, 1);
  CHECK(sirnn_dataset_size(ds) == 20);
  const auto path = fs::temp_directory_path() / "sirnn_capi_ds.jsonl";
  REQUIRE(sirnn_dataset_save(ds, path.string().c_str()) == SIRNN_OK);
  sirnn_dataset* back = nullptr;
  REQUIRE(sirnn_dataset_load(path.string().c_str(), &back) == SIRNN_OK);
  CHECK(sirnn_dataset_size(back) == 20);
  sirnn_dataset* text = nullptr;
  REQUIRE(sirnn_dataset_from_jsonl(slurp(path).c_str(), &text) == SIRNN_OK);
  CHECK(sirnn_dataset_size(text) == 20);
  fs::remove(path);
  sirnn_dataset_free(ds);
  sirnn_dataset_free(back);
  sirnn_dataset_free(text);
}

TEST_CASE("baseline evaluation and selection") {
  sirnn_dataset* ds = synth(200, 2);
  sirnn_model* chance = nullptr;
  REQUIRE(sirnn_model_create("{\"model\": \"chance\", \"seed\": 3}", ds, &chance) == SIRNN_OK);
  sirnn_report* r = nullptr;
  REQUIRE(sirnn_model_evaluate(chance, ds, 2, &r) == SIRNN_OK);
  CHECK(sirnn_report_adr_res(r) <= sirnn_report_adr(r));
  char* text = nullptr;
  REQUIRE(sirnn_report_render(r, SIRNN_REPORT_JSON, &text) == SIRNN_OK);
  const auto j = json::parse(take(text));
  CHECK(j.at("n_samples").get<int>() == 200);
  CHECK(j.at("selector").get<std::string>() == "chance");
  REQUIRE(sirnn_report_render(r, SIRNN_REPORT_CSV, &text) == SIRNN_OK);
  CHECK(take(text).find("speaker_bin") == 0);
  sirnn_report_free(r);

  sirnn_model* direct = nullptr;
  REQUIRE(sirnn_model_create("{\"model\": \"direct_recent_tfidf\"}", ds, &direct) == SIRNN_OK);
  REQUIRE(sirnn_model_evaluate(direct, ds, 1, &r) == SIRNN_OK);
  CHECK(sirnn_report_adr(r) == 1.0);  // the synthetic rule is exactly this heuristic
  sirnn_report_free(r);

  const std::string one =
      R"({"context":[["a","b",["hi"]]],"responder":"b",)"
      R"("candidates":[["hello"]],"truth_addressee":"a","truth_response_index":0})";
  char* pair = nullptr;
  REQUIRE(sirnn_model_select(chance, one.c_str(), &pair) == SIRNN_OK);
  const auto p = json::parse(take(pair));
  CHECK(p.at("addressee").get<std::string>() == "a");
  CHECK(p.at("response").get<int>() == 0);
  CHECK(sirnn_model_select(chance, "{}", &pair) != SIRNN_OK);

  sirnn_model_free(chance);
  sirnn_model_free(direct);
  sirnn_dataset_free(ds);
}

TEST_CASE("neural model train, save, load") {
  sirnn_dataset* train = synth(40, 5);
  sirnn_dataset* dev = synth(20, 6);
  const json config = {{"model", "sirnn"}, {"word_dim", 8}, {"speaker_dim", 6},
                       {"utterance_dim", 6}, {"seed", 1}};
  sirnn_model* m = nullptr;
  REQUIRE(sirnn_model_create(config.dump().c_str(), train, &m) == SIRNN_OK);
  const auto dir = fresh_dir("sirnn_capi_model");
  const auto log = dir / "log.jsonl";
  char* result = nullptr;
  REQUIRE(sirnn_model_train(m, R"({"max_epochs": 2, "patience": 0, "batch_size": 8, "l2": 0})",
                            train, dev, log.string().c_str(), &result) == SIRNN_OK);
  const auto res = json::parse(take(result));
  CHECK(res.at("epochs").get<int>() == 2);
  std::ifstream lines(log);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    CHECK(json::parse(line).contains("train_loss"));
    ++count;
  }
  CHECK(count == 2);

  REQUIRE(sirnn_model_save(m, dir.string().c_str()) == SIRNN_OK);
  CHECK(fs::exists(dir / "model.json"));
  CHECK(fs::exists(dir / "params.bin"));
  sirnn_model* loaded = nullptr;
  REQUIRE(sirnn_model_load(dir.string().c_str(), &loaded) == SIRNN_OK);
  char* cfg = nullptr;
  REQUIRE(sirnn_model_config(loaded, &cfg) == SIRNN_OK);
  CHECK(json::parse(take(cfg)).at("speaker_dim").get<int>() == 6);

  sirnn_report *r1 = nullptr, *r2 = nullptr;
  REQUIRE(sirnn_model_evaluate(m, dev, 1, &r1) == SIRNN_OK);
  REQUIRE(sirnn_model_evaluate(loaded, dev, 1, &r2) == SIRNN_OK);
  CHECK(sirnn_report_adr(r1) == sirnn_report_adr(r2));
  CHECK(sirnn_report_res(r1) == sirnn_report_res(r2));
  CHECK(sirnn_report_adr_res(r1) == sirnn_report_adr_res(r2));
  CHECK(sirnn_report_adr_res(r1) == res.at("best_dev_adr_res").get<double>());

  // Saving the loaded model reproduces the same bytes.
  const auto again = fresh_dir("sirnn_capi_model_again");
  REQUIRE(sirnn_model_save(loaded, again.string().c_str()) == SIRNN_OK);
  CHECK(slurp(dir / "params.bin") == slurp(again / "params.bin"));
  CHECK(slurp(dir / "model.json") == slurp(again / "model.json"));

  sirnn_model* baseline = nullptr;
  REQUIRE(sirnn_model_create("{\"model\": \"recent_tfidf\"}", train, &baseline) == SIRNN_OK);
  CHECK(sirnn_model_train(baseline, "{}", train, dev, nullptr, &result) == SIRNN_STATE);

  sirnn_report_free(r1);
  sirnn_report_free(r2);
  sirnn_model_free(m);
  sirnn_model_free(loaded);
  sirnn_model_free(baseline);
  sirnn_dataset_free(train);
  sirnn_dataset_free(dev);
  fs::remove_all(dir);
  fs::remove_all(again);
}

TEST_CASE("prepare") {
  const auto in = fresh_dir("sirnn_capi_logs");
  for (int d = 0; d < 3; ++d) write_log(in / ("day" + std::to_string(d) + ".tsv"), d);
  {
    std::ofstream manifest(in.parent_path() / "sirnn_capi_manifest.json");
    manifest << R"({"train": ["day0.tsv"], "dev": ["day1.tsv"], "test": ["day2.tsv"]})";
  }
  const auto out = fresh_dir("sirnn_capi_prepared");
  const json options = {{"input_dir", in.string()},
                        {"output_dir", out.string()},
                        {"context_length", 5},
                        {"res_cand", 2},
                        {"seed", 0},
                        {"split_manifest", (in.parent_path() / "sirnn_capi_manifest.json").string()}};
  char* stats = nullptr;
  REQUIRE(sirnn_prepare(options.dump().c_str(), &stats) == SIRNN_OK);
  const auto s = json::parse(take(stats));
  CHECK(s.at("train").at("docs").get<int>() == 1);
  CHECK(s.at("test").at("samples").get<int>() > 0);
  for (const char* f : {"train.jsonl", "dev.jsonl", "test.jsonl", "tfidf.json", "stats.json"}) {
    CHECK(fs::exists(out / f));
  }
  const std::string first = slurp(out / "train.jsonl");
  REQUIRE(sirnn_prepare(options.dump().c_str(), &stats) == SIRNN_OK);
  sirnn_string_free(stats);
  CHECK(slurp(out / "train.jsonl") == first);

  json missing = options;
  missing["input_dir"] = "/nonexistent/logs";
  CHECK(sirnn_prepare(missing.dump().c_str(), &stats) == SIRNN_IO);

  fs::remove_all(in);
  fs::remove_all(out);
  fs::remove(in.parent_path() / "sirnn_capi_manifest.json");
}
