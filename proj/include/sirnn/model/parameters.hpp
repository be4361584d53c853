// Copyright 2026 The SI-RNN Toolkit Authors. Apache 2.0 License.

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sirnn/numkit/checkpoint.hpp"
#include "sirnn/numkit/tensor.hpp"

namespace sirnn {

enum class EncoderKind { kSirnn, kDynamic };
enum class JointRule { kSum, kLogMean };

std::string to_string(EncoderKind kind);
std::string to_string(JointRule rule);
EncoderKind parse_encoder_kind(std::string_view name);
JointRule parse_joint_rule(std::string_view name);

struct ModelConfig {
  EncoderKind encoder = EncoderKind::kSirnn;
  std::size_t word_dim = 300;
  std::size_t speaker_dim = 50;
  std::size_t utterance_dim = 50;
  bool use_biases = false;
  /// Ablation: one set of IGRU weights for sender, addressee and observer.
  bool shared_igrus = false;
  /// Ablation off-switch: select addressee and response independently.
  bool joint_selection = true;
  JointRule joint_rule = JointRule::kSum;

  bool has_conditional_heads() const { return encoder == EncoderKind::kSirnn; }
};

/// (name, shape) of every trainable tensor the configuration needs, sorted by
/// name.
std::vector<std::pair<std::string, numkit::Shape>> parameter_shapes(
    const ModelConfig& config);

/// Named trainable arrays, iterated in name order.
template <typename T>
class ParameterStore {
 public:
  using Map = std::map<std::string, numkit::Tensor<T>, std::less<>>;

  void set(std::string name, numkit::Tensor<T> value) {
    values_.insert_or_assign(std::move(name), std::move(value));
  }

  bool contains(std::string_view name) const { return values_.find(name) != values_.end(); }

  const numkit::Tensor<T>& at(std::string_view name) const {
    auto it = values_.find(name);
    if (it == values_.end()) {
      throw Error(ErrorCode::kInvalidArgument, "no parameter named '" + std::string(name) + "'");
    }
    return it->second;
  }
  numkit::Tensor<T>& at(std::string_view name) {
    return const_cast<numkit::Tensor<T>&>(std::as_const(*this).at(name));
  }

  std::size_t size() const { return values_.size(); }
  std::size_t scalar_count() const {
    std::size_t n = 0;
    for (const auto& [_, t] : values_) n += t.size();
    return n;
  }
  const Map& values() const { return values_; }
  Map& values() { return values_; }

  template <typename U>
  ParameterStore<U> cast() const {
    ParameterStore<U> out;
    for (const auto& [name, t] : values_) out.set(name, t.template cast<U>());
    return out;
  }

  bool operator==(const ParameterStore&) const = default;

 private:
  Map values_;
};

std::vector<numkit::NamedTensor> to_named_tensors(const ParameterStore<float>& store);
ParameterStore<float> from_named_tensors(const std::vector<numkit::NamedTensor>& entries,
                                         const ModelConfig& config);

}  // namespace sirnn
