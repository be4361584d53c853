// Copyright 2026 The SI-RNN Toolkit Authors. Apache 2.0 License.
//
// Checkpoint container, format version 1. All integers are little-endian.
//
//   offset  size  field
//   0       8     magic "SIRNNCKP"
//   8       4     u32 format version (1)
//   12      4     u32 entry count N
//   then N entries, each:
//           4     u32 name length L
//           L     name bytes (UTF-8, no terminator)
//           4     u32 rank R
//           4*R   u32 dimensions, outermost first
//           4*P   IEEE-754 binary32 values, row-major, P = product(dims)
//
// Entries appear in the order they were written; readers must not assume
// sorting. Trailing bytes after the last entry are an error.

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "sirnn/numkit/tensor.hpp"

namespace sirnn::numkit {

inline constexpr std::uint32_t kCheckpointVersion = 1;

struct NamedTensor {
  std::string name;
  Tensor<float> tensor;

  bool operator==(const NamedTensor&) const = default;
};

std::string encode_checkpoint(const std::vector<NamedTensor>& entries);
std::vector<NamedTensor> decode_checkpoint(const std::string& bytes);

void save_checkpoint(const std::filesystem::path& path,
                     const std::vector<NamedTensor>& entries);
std::vector<NamedTensor> load_checkpoint(const std::filesystem::path& path);

}  // namespace sirnn::numkit
