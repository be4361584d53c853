// Copyright 2026 The SI-RNN Toolkit Authors. Apache 2.0 License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sirnn/corpus/sample.hpp"
#include "sirnn/numkit/tensor.hpp"

namespace sirnn::corpus {

struct WordVectors {
  std::size_t dim = 0;
  std::unordered_map<std::string, std::vector<float>> vectors;
};

/// Text format: `token v1 v2 ... vd` per line. When `keep` is given, other
/// tokens are skipped while reading.
WordVectors load_word_vectors(const std::filesystem::path& path,
                              const std::unordered_set<std::string>* keep = nullptr);

/// Frozen token -> row lookup. Row 0 is the shared UNK vector; lookups never
/// fail.
class Vocab {
 public:
  struct Options {
    std::size_t dim = 300;
    std::uint64_t seed = 0;
    float unk_range = 0.01f;
    /// Range of the random vectors given to every token when no pretrained
    /// vectors are supplied.
    float random_range = 0.5f;
  };

  Vocab() = default;
  Vocab(std::vector<std::string> tokens, numkit::Tensor<float> embeddings);

  /// Collects every token of the samples (sorted, deduplicated). With
  /// pretrained vectors, tokens lacking one map to UNK.
  static Vocab build(std::span<const SelectionSample> samples, const Options& options,
                     const WordVectors* pretrained = nullptr);

  std::size_t index(std::string_view token) const;
  std::size_t rows() const { return embeddings_.rows(); }
  std::size_t dim() const { return embeddings_.cols(); }
  const std::vector<std::string>& tokens() const { return tokens_; }
  const numkit::Tensor<float>& embeddings() const { return embeddings_; }

  template <typename T>
  numkit::Tensor<T> row(std::size_t index) const {
    const float* p = embeddings_.raw() + index * dim();
    return numkit::Tensor<T>({dim()}, std::vector<T>(p, p + dim()));
  }

 private:
  std::vector<std::string> tokens_;  // tokens_[i] owns row i + 1
  std::unordered_map<std::string, std::size_t> index_;
  numkit::Tensor<float> embeddings_;
};

}  // namespace sirnn::corpus
