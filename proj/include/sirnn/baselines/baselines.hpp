// Copyright 2026 The SI-RNN Toolkit Authors. Apache 2.0 License.
//
// Non-neural reference selectors.

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sirnn/selector/prediction.hpp"

namespace sirnn::baselines {

/// Document frequencies over training documents. tf is the raw count and
/// idf(t) = ln(N / (1 + df(t))) + 1; vectors are L2-normalised.
class TfIdfModel {
 public:
  TfIdfModel() = default;
  TfIdfModel(std::size_t n_docs, std::map<std::string, std::size_t> df);

  /// Each document is a list of utterances.
  static TfIdfModel fit(std::span<const std::vector<corpus::Tokens>> documents);
  /// Groups sample text by doc_id (samples without one count as their own
  /// document).
  static TfIdfModel fit_samples(std::span<const corpus::SelectionSample> samples);

  std::size_t n_docs() const { return n_docs_; }
  const std::map<std::string, std::size_t>& document_frequency() const { return df_; }

  double idf(const std::string& token) const;
  std::unordered_map<std::string, double> vectorize(const corpus::Tokens& tokens) const;
  double cosine(const corpus::Tokens& a, const corpus::Tokens& b) const;

  /// {"n_docs": N, "df": {token: count}}
  std::string to_json() const;
  static TfIdfModel from_json(const std::string& text);

 private:
  std::size_t n_docs_ = 0;
  std::map<std::string, std::size_t> df_;
};

/// Index of the candidate most similar to the concatenated context; ties keep
/// the lowest index.
std::size_t tfidf_response(const TfIdfModel& model, const corpus::SelectionSample& sample);

/// Uniform addressee over A(C)\{responder} and uniform response.
class ChanceSelector : public Selector {
 public:
  explicit ChanceSelector(std::uint64_t seed) : seed_(seed) {}
  Prediction predict(const corpus::SelectionSample& sample, std::size_t index) const override;
  std::string name() const override { return "chance"; }

 private:
  std::uint64_t seed_;
};

/// Most recent context sender other than the responder.
class RecentTfIdfSelector : public Selector {
 public:
  RecentTfIdfSelector(TfIdfModel model, std::uint64_t seed)
      : model_(std::move(model)), seed_(seed) {}
  Prediction predict(const corpus::SelectionSample& sample, std::size_t index) const override;
  std::string name() const override { return "recent_tfidf"; }

 protected:
  Prediction recent(const corpus::SelectionSample& sample, std::size_t index) const;
  TfIdfModel model_;
  std::uint64_t seed_;
};

/// Most recent sender who explicitly addressed the responder within the last
/// `window` turns, falling back to the most recent sender.
class DirectRecentTfIdfSelector : public RecentTfIdfSelector {
 public:
  static constexpr std::size_t kWindow = 15;

  using RecentTfIdfSelector::RecentTfIdfSelector;
  Prediction predict(const corpus::SelectionSample& sample, std::size_t index) const override;
  std::string name() const override { return "direct_recent_tfidf"; }
};

}  // namespace sirnn::baselines
