// Copyright 2026 The SI-RNN Toolkit Authors. Apache 2.0 License.

#include "sirnn/corpus/sample.hpp"

#include <algorithm>
#include <fstream>
#include <random>

#include "json.hpp"
#include "sirnn/error.hpp"

namespace sirnn::corpus {

using nlohmann::json;

namespace {

void push_unique(std::vector<std::string>& out, const std::string& id) {
  if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
}

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorCode::kInvalidArgument, "invalid sample: " + what);
}

}  // namespace

std::vector<std::string> DialogContext::speakers() const {
  std::vector<std::string> out;
  for (const Turn& t : turns) {
    push_unique(out, t.sender);
    if (t.addressee) push_unique(out, *t.addressee);
  }
  return out;
}

std::vector<std::string> SelectionSample::speaker_table_order() const {
  std::vector<std::string> out = context.speakers();
  push_unique(out, responder);
  return out;
}

std::vector<std::string> SelectionSample::candidate_addressees() const {
  std::vector<std::string> out = context.speakers();
  std::erase(out, responder);
  return out;
}

void validate_sample(const SelectionSample& s, std::size_t max_context_length) {
  if (s.context.turns.empty()) invalid("empty context");
  if (max_context_length && s.context.turns.size() > max_context_length) {
    invalid("context has " + std::to_string(s.context.turns.size()) +
            " turns, maximum is " + std::to_string(max_context_length));
  }
  for (const Turn& t : s.context.turns) {
    if (t.sender.empty()) invalid("turn with empty sender");
    if (t.addressee && *t.addressee == t.sender) {
      invalid("turn where '" + t.sender + "' addresses itself");
    }
  }
  if (s.responder.empty()) invalid("empty responder");
  if (s.truth_addressee == s.responder) invalid("addressee equals responder");
  const auto speakers = s.context.speakers();
  if (std::find(speakers.begin(), speakers.end(), s.truth_addressee) ==
      speakers.end()) {
    invalid("addressee '" + s.truth_addressee + "' not in context speakers");
  }
  if (s.candidates.empty()) invalid("no candidate responses");
  if (s.truth_response_index >= s.candidates.size()) {
    invalid("truth_response_index out of range");
  }
}

std::vector<AnnotatedLine> annotate_document(const std::vector<LogLine>& doc) {
  std::vector<AnnotatedLine> out;
  out.reserve(doc.size());
  std::vector<std::string> known;
  for (const LogLine& line : doc) {
    AnnotatedLine a{line, {}};
    a.line.addressee = detect_addressee(line, known);
    a.tokens = tokenize_truncate(a.line.addressee ? strip_mention(line.text)
                                                  : std::string_view(line.text));
    push_unique(known, line.sender);
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<SelectionSample> extract_samples(const std::vector<LogLine>& doc,
                                             const ExtractOptions& options) {
  if (options.n_candidates < 1) {
    throw Error(ErrorCode::kInvalidArgument, "n_candidates must be positive");
  }
  if (options.context_length < 1) {
    throw Error(ErrorCode::kInvalidArgument, "context_length must be positive");
  }
  std::vector<SelectionSample> samples;
  if (doc.size() < 2) return samples;

  const auto lines = annotate_document(doc);
  std::seed_seq seq{options.seed};
  std::mt19937_64 rng(seq);
  const std::size_t n_negatives = options.n_candidates - 1;

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const LogLine& target = lines[i].line;
    if (!target.addressee) continue;

    SelectionSample s;
    const std::size_t begin = i > options.context_length ? i - options.context_length : 0;
    for (std::size_t j = begin; j < i; ++j) {
      s.context.turns.push_back(
          {lines[j].line.sender, lines[j].line.addressee, lines[j].tokens});
    }
    const auto speakers = s.context.speakers();
    if (std::find(speakers.begin(), speakers.end(), *target.addressee) ==
        speakers.end()) {
      continue;
    }
    if (lines.size() - 1 < n_negatives) continue;

    // Partial Fisher-Yates over the other lines of the document.
    std::vector<std::size_t> pool;
    pool.reserve(lines.size() - 1);
    for (std::size_t j = 0; j < lines.size(); ++j) {
      if (j != i) pool.push_back(j);
    }
    for (std::size_t k = 0; k < n_negatives; ++k) {
      std::uniform_int_distribution<std::size_t> pick(k, pool.size() - 1);
      std::swap(pool[k], pool[pick(rng)]);
    }
    s.candidates.push_back(lines[i].tokens);
    for (std::size_t k = 0; k < n_negatives; ++k) {
      s.candidates.push_back(lines[pool[k]].tokens);
    }
    std::vector<std::size_t> order(s.candidates.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Tokens> shuffled;
    shuffled.reserve(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
      shuffled.push_back(std::move(s.candidates[order[k]]));
      if (order[k] == 0) s.truth_response_index = k;
    }
    s.candidates = std::move(shuffled);
    s.responder = target.sender;
    s.truth_addressee = *target.addressee;
    s.doc_id = options.doc_id;
    s.time = target.time;
    samples.push_back(std::move(s));
  }
  return samples;
}

std::string sample_to_json(const SelectionSample& s) {
  json context = json::array();
  for (const Turn& t : s.context.turns) {
    context.push_back(json::array(
        {t.sender, t.addressee ? json(*t.addressee) : json(nullptr), t.tokens}));
  }
  json j = {{"context", std::move(context)},
            {"responder", s.responder},
            {"candidates", s.candidates},
            {"truth_addressee", s.truth_addressee},
            {"truth_response_index", s.truth_response_index},
            {"doc_id", s.doc_id},
            {"time", s.time}};
  return j.dump();
}

SelectionSample sample_from_json(const std::string& line) {
  SelectionSample s;
  try {
    const json j = json::parse(line);
    for (const json& t : j.at("context")) {
      if (!t.is_array() || t.size() != 3) {
        throw Error(ErrorCode::kParse, "context turn must be [sender, addressee, tokens]");
      }
      Turn turn;
      turn.sender = t[0].get<std::string>();
      if (!t[1].is_null()) turn.addressee = t[1].get<std::string>();
      turn.tokens = t[2].get<Tokens>();
      s.context.turns.push_back(std::move(turn));
    }
    s.responder = j.at("responder").get<std::string>();
    s.candidates = j.at("candidates").get<std::vector<Tokens>>();
    s.truth_addressee = j.at("truth_addressee").get<std::string>();
    s.truth_response_index = j.at("truth_response_index").get<std::size_t>();
    s.doc_id = j.value("doc_id", std::string());
    s.time = j.value("time", std::int64_t{0});
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("bad sample JSON: ") + e.what());
  }
  return s;
}

std::vector<SelectionSample> read_samples(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::vector<SelectionSample> out;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(sample_from_json(line));
    } catch (const Error& e) {
      throw Error(e.code(), path.string() + ":" + std::to_string(n) + ": " + e.what());
    }
  }
  return out;
}

void write_samples(const std::filesystem::path& path,
                   const std::vector<SelectionSample>& samples) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  for (const auto& s : samples) out << sample_to_json(s) << '\n';
  if (!out) throw Error(ErrorCode::kIo, "short write to " + path.string());
}

}  // namespace sirnn::corpus
