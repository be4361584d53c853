// Copyright 2026 The SI-RNN Toolkit Authors. Apache 2.0 License.

#include "sirnn/corpus/log.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>

#include "sirnn/error.hpp"

namespace sirnn::corpus {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::string_view first_token(std::string_view text) {
  std::size_t b = 0;
  while (b < text.size() && is_space(text[b])) ++b;
  std::size_t e = b;
  while (e < text.size() && !is_space(text[e])) ++e;
  return text.substr(b, e - b);
}

}  // namespace

bool is_valid_utf8(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size()) {
    const auto c = static_cast<unsigned char>(text[i]);
    std::size_t extra;
    std::uint32_t cp;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      extra = 1;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      extra = 2;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      extra = 3;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (i + extra >= text.size()) return false;
    for (std::size_t k = 1; k <= extra; ++k) {
      const auto cc = static_cast<unsigned char>(text[i + k]);
      if ((cc & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cc & 0x3F);
    }
    // Overlong forms, surrogates and out-of-range code points.
    if ((extra == 1 && cp < 0x80) || (extra == 2 && cp < 0x800) ||
        (extra == 3 && cp < 0x10000) || cp > 0x10FFFF ||
        (cp >= 0xD800 && cp <= 0xDFFF)) {
      return false;
    }
    i += extra + 1;
  }
  return true;
}

ParsedDocument parse_document(std::string_view text) {
  if (!is_valid_utf8(text)) {
    throw Error(ErrorCode::kParse, "document is not valid UTF-8");
  }
  ParsedDocument doc;
  std::size_t line_number = 0;
  std::size_t non_blank = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (std::all_of(line.begin(), line.end(), is_space)) continue;
    ++non_blank;

    const std::size_t t1 = line.find('\t');
    const std::size_t t2 =
        t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string_view::npos) {
      doc.warnings.push_back({line_number, "expected 3 tab-separated fields"});
      continue;
    }
    const std::string_view time_field = line.substr(0, t1);
    LogLine rec;
    const auto [ptr, ec] = std::from_chars(
        time_field.data(), time_field.data() + time_field.size(), rec.time);
    if (ec != std::errc() || ptr != time_field.data() + time_field.size() ||
        time_field.empty()) {
      doc.warnings.push_back({line_number, "time field is not an integer"});
      continue;
    }
    rec.sender = std::string(line.substr(t1 + 1, t2 - t1 - 1));
    if (rec.sender.empty()) {
      doc.warnings.push_back({line_number, "empty sender"});
      continue;
    }
    rec.text = std::string(line.substr(t2 + 1));
    doc.lines.push_back(std::move(rec));
  }
  if (non_blank == 0) throw Error(ErrorCode::kParse, "empty document");
  return doc;
}

Tokens tokenize_truncate(std::string_view text, std::size_t max_tokens) {
  Tokens tokens;
  std::size_t i = 0;
  while (i < text.size() && tokens.size() < max_tokens) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t b = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    if (i > b) tokens.push_back(ascii_lower(text.substr(b, i - b)));
  }
  return tokens;
}

std::optional<std::string> detect_addressee(
    const LogLine& line, std::span<const std::string> known_speakers) {
  std::string_view token = first_token(line.text);
  if (!token.empty() && (token.back() == ':' || token.back() == ',')) {
    token.remove_suffix(1);
  }
  if (token.empty()) return std::nullopt;
  const std::string wanted = ascii_lower(token);
  const std::string sender = ascii_lower(line.sender);
  if (wanted == sender) return std::nullopt;
  for (const std::string& speaker : known_speakers) {
    if (ascii_lower(speaker) == wanted) return speaker;
  }
  return std::nullopt;
}

std::string_view strip_mention(std::string_view text) {
  std::size_t b = 0;
  while (b < text.size() && is_space(text[b])) ++b;
  while (b < text.size() && !is_space(text[b])) ++b;
  while (b < text.size() && is_space(text[b])) ++b;
  return text.substr(b);
}

}  // namespace sirnn::corpus
