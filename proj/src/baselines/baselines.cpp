// Copyright 2026 The SI-RNN Toolkit Authors. Apache 2.0 License.

#include "sirnn/baselines/baselines.hpp"

#include <cmath>
#include <random>
#include <set>

#include "json.hpp"

namespace sirnn::baselines {

TfIdfModel::TfIdfModel(std::size_t n_docs, std::map<std::string, std::size_t> df)
    : n_docs_(n_docs), df_(std::move(df)) {
  if (n_docs_ == 0) throw Error(ErrorCode::kInvalidArgument, "tf-idf model over zero documents");
  for (const auto& [token, count] : df_) {
    if (count > n_docs_) {
      throw Error(ErrorCode::kInvalidArgument, "df of '" + token + "' exceeds document count");
    }
  }
}

TfIdfModel TfIdfModel::fit(std::span<const std::vector<corpus::Tokens>> documents) {
  std::map<std::string, std::size_t> df;
  for (const auto& doc : documents) {
    std::set<std::string> seen;
    for (const auto& utterance : doc) seen.insert(utterance.begin(), utterance.end());
    for (const auto& t : seen) ++df[t];
  }
  return TfIdfModel(documents.size(), std::move(df));
}

TfIdfModel TfIdfModel::fit_samples(std::span<const corpus::SelectionSample> samples) {
  std::map<std::string, std::set<std::string>> docs;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    auto& seen = docs[s.doc_id.empty() ? "#" + std::to_string(i) : s.doc_id];
    for (const auto& t : s.context.turns) seen.insert(t.tokens.begin(), t.tokens.end());
    for (const auto& c : s.candidates) seen.insert(c.begin(), c.end());
  }
  std::map<std::string, std::size_t> df;
  for (const auto& [_, seen] : docs) {
    for (const auto& t : seen) ++df[t];
  }
  return TfIdfModel(docs.size(), std::move(df));
}

double TfIdfModel::idf(const std::string& token) const {
  auto it = df_.find(token);
  const double df = it == df_.end() ? 0.0 : static_cast<double>(it->second);
  return std::log(static_cast<double>(n_docs_) / (1.0 + df)) + 1.0;
}

std::unordered_map<std::string, double> TfIdfModel::vectorize(const corpus::Tokens& tokens) const {
  std::unordered_map<std::string, double> v;
  for (const auto& t : tokens) v[t] += 1.0;
  double norm = 0.0;
  for (auto& [t, w] : v) {
    w *= idf(t);
    norm += w * w;
  }
  norm = std::sqrt(norm);
  if (norm > 0) {
    for (auto& [_, w] : v) w /= norm;
  }
  return v;
}

double TfIdfModel::cosine(const corpus::Tokens& a, const corpus::Tokens& b) const {
  const auto va = vectorize(a);
  const auto vb = vectorize(b);
  double s = 0.0;
  for (const auto& [t, w] : va) {
    auto it = vb.find(t);
    if (it != vb.end()) s += w * it->second;
  }
  return s;
}

std::string TfIdfModel::to_json() const {
  nlohmann::json j = {{"n_docs", n_docs_}, {"df", df_}};
  return j.dump();
}

TfIdfModel TfIdfModel::from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    return TfIdfModel(j.at("n_docs").get<std::size_t>(),
                      j.at("df").get<std::map<std::string, std::size_t>>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("bad tf-idf model: ") + e.what());
  }
}

std::size_t tfidf_response(const TfIdfModel& model, const corpus::SelectionSample& sample) {
  corpus::Tokens context;
  for (const auto& t : sample.context.turns) {
    context.insert(context.end(), t.tokens.begin(), t.tokens.end());
  }
  std::size_t best = 0;
  double best_score = -1.0;
  for (std::size_t i = 0; i < sample.candidates.size(); ++i) {
    const double s = model.cosine(sample.candidates[i], context);
    if (s > best_score) {
      best_score = s;
      best = i;
    }
  }
  return best;
}

namespace {

std::mt19937_64 sample_rng(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{seed, static_cast<std::uint64_t>(index)};
  return std::mt19937_64(seq);
}

std::size_t uniform(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

std::vector<std::string> addressee_candidates(const corpus::SelectionSample& sample) {
  auto c = sample.candidate_addressees();
  if (c.empty()) throw Error(ErrorCode::kInvalidArgument, "empty addressee candidate set");
  return c;
}

}  // namespace

Prediction ChanceSelector::predict(const corpus::SelectionSample& sample,
                                   std::size_t index) const {
  const auto candidates = addressee_candidates(sample);
  if (sample.candidates.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty response candidate set");
  }
  auto rng = sample_rng(seed_, index);
  Prediction p;
  p.addressee = candidates[uniform(rng, candidates.size())];
  p.response = uniform(rng, sample.candidates.size());
  return p;
}

Prediction RecentTfIdfSelector::recent(const corpus::SelectionSample& sample,
                                       std::size_t index) const {
  Prediction p;
  p.response = tfidf_response(model_, sample);
  const auto& turns = sample.context.turns;
  for (auto it = turns.rbegin(); it != turns.rend(); ++it) {
    if (it->sender != sample.responder) {
      p.addressee = it->sender;
      return p;
    }
  }
  const auto candidates = addressee_candidates(sample);
  auto rng = sample_rng(seed_, index);
  p.addressee = candidates[uniform(rng, candidates.size())];
  p.fallback = true;
  return p;
}

Prediction RecentTfIdfSelector::predict(const corpus::SelectionSample& sample,
                                        std::size_t index) const {
  return recent(sample, index);
}

Prediction DirectRecentTfIdfSelector::predict(const corpus::SelectionSample& sample,
                                              std::size_t index) const {
  Prediction p = recent(sample, index);
  const auto& turns = sample.context.turns;
  const std::size_t window = std::min(kWindow, turns.size());
  for (std::size_t k = 0; k < window; ++k) {
    const auto& turn = turns[turns.size() - 1 - k];
    if (turn.addressee && *turn.addressee == sample.responder) {
      p.addressee = turn.sender;
      p.fallback = false;
      break;
    }
  }
  return p;
}

}  // namespace sirnn::baselines
