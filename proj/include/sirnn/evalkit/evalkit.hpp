// Copyright 2026 The SI-RNN Toolkit Authors. Apache 2.0 License.

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sirnn/selector/prediction.hpp"

namespace sirnn::evalkit {

struct BinStat {
  std::size_t n = 0;
  std::size_t adr_correct = 0;
  double adr_acc() const { return n ? static_cast<double>(adr_correct) / n : 0.0; }
};

struct EvalReport {
  std::string selector;
  std::size_t n_samples = 0;
  double adr_acc = 0;
  double res_acc = 0;
  double adr_res_acc = 0;
  /// Fixed bins "2", "3", "4", "5", "6-10", "11+", always all present.
  std::vector<std::pair<std::string, BinStat>> bins_by_speaker_count;
  /// Distance in turns; context length + 1 marks an addressee that never
  /// spoke in the context.
  std::map<std::size_t, BinStat> bins_by_distance;
  /// Samples where the selector reported joint scores for both selection
  /// rules, how many of those the joint pick scored strictly higher, and how
  /// many violated joint >= separate.
  std::size_t joint_compared = 0;
  std::size_t joint_strictly_better = 0;
  std::size_t joint_violations = 0;
  std::size_t fallbacks = 0;

  double joint_strictly_better_fraction() const {
    return joint_compared ? static_cast<double>(joint_strictly_better) / joint_compared : 0.0;
  }
};

/// Number of distinct speakers including the responder.
std::size_t speaker_count(const corpus::SelectionSample& sample);
std::string speaker_count_bin(std::size_t speakers);

/// Turns between the end of the context and the ground-truth addressee's
/// latest utterance (1 = the last turn); context length + 1 when the
/// addressee never speaks in the context.
std::size_t addressing_distance(const corpus::SelectionSample& sample);

EvalReport evaluate(const Selector& selector, std::span<const corpus::SelectionSample> samples,
                    std::size_t workers = 1);

std::string report_to_json(const EvalReport& report);
std::string report_to_table(const EvalReport& report);
/// Two CSV sections: `bin,n,adr_acc` for speaker counts, then distances.
std::string bins_to_csv(const EvalReport& report);

/// Synthetic multi-party dialogs in which the ground-truth addressee is
/// always the last speaker who addressed the responder.
struct SynthSpec {
  std::size_t n_speakers = 6;
  std::size_t n_subconversations = 2;
  std::size_t context_length = 10;
  std::size_t n_samples = 1000;
  std::size_t res_cand = 2;
  /// Size of the topic vocabulary, split evenly across sub-conversations.
  std::size_t vocab_size = 60;
  std::size_t topic_tokens = 3;
  /// Weights for addressing distance 1, 2, ... (length <= context_length).
  std::vector<double> distance_weights = {1, 1, 1, 1};
  /// Probability that a filler turn carries no addressee.
  double blank_rate = 0.0;
  std::uint64_t seed = 0;
};

void validate(const SynthSpec& spec);
std::vector<corpus::SelectionSample> generate_synthetic(const SynthSpec& spec);

}  // namespace sirnn::evalkit
