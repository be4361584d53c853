// Copyright 2026 The SI-RNN Toolkit Authors. Apache 2.0 License.
//
// Raw chat logs: one file per document, one `<time>\t<sender>\t<utterance>`
// record per line.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sirnn::corpus {

using Tokens = std::vector<std::string>;

inline constexpr std::size_t kMaxUtteranceTokens = 20;

struct LogLine {
  std::int64_t time = 0;
  std::string sender;
  std::optional<std::string> addressee;
  std::string text;

  bool operator==(const LogLine&) const = default;
};

struct ParseWarning {
  std::size_t line_number = 0;  // 1-based
  std::string message;
};

struct ParsedDocument {
  std::vector<LogLine> lines;
  std::vector<ParseWarning> warnings;
};

/// Throws kParse on invalid UTF-8 or a document with no records. Malformed
/// records are skipped and reported as warnings; blank lines are ignored.
ParsedDocument parse_document(std::string_view text);

bool is_valid_utf8(std::string_view text);

/// ASCII-lowercases, splits on whitespace and keeps the first `max_tokens`.
Tokens tokenize_truncate(std::string_view text,
                         std::size_t max_tokens = kMaxUtteranceTokens);

/// Returns the canonical id of the speaker named by the first token of the
/// utterance, if any. The token matches when, after dropping one trailing ':'
/// or ',', it equals a known speaker case-insensitively and that speaker is
/// not the sender.
std::optional<std::string> detect_addressee(
    const LogLine& line, std::span<const std::string> known_speakers);

/// Utterance text with the leading mention token removed.
std::string_view strip_mention(std::string_view text);

}  // namespace sirnn::corpus
