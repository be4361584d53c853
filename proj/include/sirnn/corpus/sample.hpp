// Copyright 2026 The SI-RNN Toolkit Authors. Apache 2.0 License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sirnn/corpus/log.hpp"

namespace sirnn::corpus {

struct Turn {
  std::string sender;
  std::optional<std::string> addressee;
  Tokens tokens;

  bool operator==(const Turn&) const = default;
};

struct DialogContext {
  std::vector<Turn> turns;

  /// A(C) in order of first appearance, senders and addressees alike.
  std::vector<std::string> speakers() const;

  bool operator==(const DialogContext&) const = default;
};

struct SelectionSample {
  DialogContext context;
  std::string responder;
  std::vector<Tokens> candidates;
  std::string truth_addressee;
  std::size_t truth_response_index = 0;
  std::string doc_id;
  std::int64_t time = 0;

  /// A(C) with the responder appended when it never appears in the context.
  std::vector<std::string> speaker_table_order() const;
  /// A(C) \ {responder}, in first-appearance order.
  std::vector<std::string> candidate_addressees() const;

  bool operator==(const SelectionSample&) const = default;
};

/// Throws kInvalidArgument naming the first violated invariant.
void validate_sample(const SelectionSample& sample,
                     std::size_t max_context_length = 0);

struct ExtractOptions {
  std::size_t context_length = 15;
  std::size_t n_candidates = 2;
  std::uint64_t seed = 0;
  std::string doc_id;
};

/// A log line after addressee detection, with the mention token removed.
struct AnnotatedLine {
  LogLine line;
  Tokens tokens;
};

/// Detects addressees against the senders seen earlier in the document.
std::vector<AnnotatedLine> annotate_document(const std::vector<LogLine>& doc);

/// One sample per line with an explicit addressee and at least one earlier
/// line. Samples whose addressee is outside the context window, or which
/// cannot draw n_candidates-1 distinct negatives, are dropped.
std::vector<SelectionSample> extract_samples(const std::vector<LogLine>& doc,
                                             const ExtractOptions& options);

std::string sample_to_json(const SelectionSample& sample);
SelectionSample sample_from_json(const std::string& line);

std::vector<SelectionSample> read_samples(const std::filesystem::path& path);
void write_samples(const std::filesystem::path& path,
                   const std::vector<SelectionSample>& samples);

}  // namespace sirnn::corpus
