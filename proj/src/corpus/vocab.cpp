// Copyright 2026 The SI-RNN Toolkit Authors. Apache 2.0 License.

#include "sirnn/corpus/vocab.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "sirnn/error.hpp"

namespace sirnn::corpus {

WordVectors load_word_vectors(const std::filesystem::path& path,
                              const std::unordered_set<std::string>* keep) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  WordVectors wv;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    std::istringstream fields(line);
    std::string token;
    if (!(fields >> token)) continue;
    if (keep && !keep->contains(token)) continue;
    std::vector<float> values;
    float v;
    while (fields >> v) values.push_back(v);
    if (!fields.eof()) {
      throw Error(ErrorCode::kParse,
                  path.string() + ":" + std::to_string(n) + ": non-numeric value");
    }
    if (values.empty() || (wv.dim && values.size() != wv.dim)) {
      throw Error(ErrorCode::kParse, path.string() + ":" + std::to_string(n) +
                                         ": expected " + std::to_string(wv.dim) +
                                         " values");
    }
    wv.dim = values.size();
    wv.vectors.emplace(std::move(token), std::move(values));
  }
  return wv;
}

Vocab::Vocab(std::vector<std::string> tokens, numkit::Tensor<float> embeddings)
    : tokens_(std::move(tokens)), embeddings_(std::move(embeddings)) {
  if (embeddings_.rank() != 2 || embeddings_.rows() != tokens_.size() + 1) {
    throw Error(ErrorCode::kShape,
                "embedding matrix " + numkit::shape_string(embeddings_.shape()) +
                    " does not fit " + std::to_string(tokens_.size()) +
                    " tokens plus UNK");
  }
  for (std::size_t i = 0; i < tokens_.size(); ++i) index_.emplace(tokens_[i], i + 1);
}

Vocab Vocab::build(std::span<const SelectionSample> samples, const Options& options,
                   const WordVectors* pretrained) {
  std::set<std::string> seen;
  for (const auto& s : samples) {
    for (const auto& t : s.context.turns) seen.insert(t.tokens.begin(), t.tokens.end());
    for (const auto& c : s.candidates) seen.insert(c.begin(), c.end());
  }
  const std::size_t dim = pretrained ? pretrained->dim : options.dim;
  if (dim == 0) throw Error(ErrorCode::kInvalidArgument, "word vector dimension is zero");

  std::vector<std::string> tokens;
  for (const auto& t : seen) {
    if (!pretrained || pretrained->vectors.contains(t)) tokens.push_back(t);
  }

  std::seed_seq seq{options.seed};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<float> unk(-options.unk_range, options.unk_range);
  std::uniform_real_distribution<float> random(-options.random_range, options.random_range);

  std::vector<float> data;
  data.reserve((tokens.size() + 1) * dim);
  for (std::size_t k = 0; k < dim; ++k) data.push_back(unk(rng));
  for (const auto& t : tokens) {
    if (pretrained) {
      const auto& v = pretrained->vectors.at(t);
      data.insert(data.end(), v.begin(), v.end());
    } else {
      for (std::size_t k = 0; k < dim; ++k) data.push_back(random(rng));
    }
  }
  numkit::Tensor<float> matrix({tokens.size() + 1, dim}, std::move(data));
  return Vocab(std::move(tokens), std::move(matrix));
}

std::size_t Vocab::index(std::string_view token) const {
  auto it = index_.find(std::string(token));
  return it == index_.end() ? 0 : it->second;
}

}  // namespace sirnn::corpus
