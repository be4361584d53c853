// Copyright 2026 The SI-RNN Toolkit Authors. Apache 2.0 License.

#include "sirnn/model/parameters.hpp"

#include <algorithm>

namespace sirnn {

std::string to_string(EncoderKind kind) {
  return kind == EncoderKind::kSirnn ? "sirnn" : "dynamic";
}

std::string to_string(JointRule rule) {
  return rule == JointRule::kSum ? "sum" : "logmean";
}

EncoderKind parse_encoder_kind(std::string_view name) {
  if (name == "sirnn") return EncoderKind::kSirnn;
  if (name == "dynamic") return EncoderKind::kDynamic;
  throw Error(ErrorCode::kInvalidArgument, "unknown encoder '" + std::string(name) + "'");
}

JointRule parse_joint_rule(std::string_view name) {
  if (name == "sum") return JointRule::kSum;
  if (name == "logmean") return JointRule::kLogMean;
  throw Error(ErrorCode::kInvalidArgument, "unknown joint rule '" + std::string(name) + "'");
}

namespace {

using Shapes = std::vector<std::pair<std::string, numkit::Shape>>;

void add_gru(Shapes& out, const std::string& prefix, std::size_t in, std::size_t hidden,
             bool biases) {
  for (const char* g : {"r", "z", ""}) {
    const std::string suffix = *g ? std::string("_") + g : "";
    out.emplace_back(prefix + ".W" + suffix, numkit::Shape{hidden, in});
    out.emplace_back(prefix + ".U" + suffix, numkit::Shape{hidden, hidden});
    if (biases) out.emplace_back(prefix + ".b" + suffix, numkit::Shape{hidden});
  }
}

void add_igru(Shapes& out, const std::string& prefix, std::size_t in, std::size_t hidden,
              bool biases) {
  for (const char* g : {"r", "p", "z", ""}) {
    const std::string suffix = *g ? std::string("_") + g : "";
    out.emplace_back(prefix + ".W" + suffix, numkit::Shape{hidden, in});
    out.emplace_back(prefix + ".U" + suffix, numkit::Shape{hidden, hidden});
    out.emplace_back(prefix + ".V" + suffix, numkit::Shape{hidden, hidden});
    if (biases) out.emplace_back(prefix + ".b" + suffix, numkit::Shape{hidden});
  }
}

}  // namespace

std::vector<std::pair<std::string, numkit::Shape>> parameter_shapes(const ModelConfig& c) {
  if (c.word_dim == 0 || c.speaker_dim == 0 || c.utterance_dim == 0) {
    throw Error(ErrorCode::kInvalidArgument, "model dimensions must be positive");
  }
  const std::size_t ds = c.speaker_dim, du = c.utterance_dim;
  Shapes out;
  add_gru(out, "utterance", c.word_dim, du, c.use_biases);
  out.emplace_back("selector.W_a", numkit::Shape{2 * ds, ds});
  out.emplace_back("selector.W_r", numkit::Shape{2 * ds, du});
  if (c.encoder == EncoderKind::kSirnn) {
    add_igru(out, "sender", ds + du, ds, c.use_biases);
    if (!c.shared_igrus) {
      add_igru(out, "addressee", ds + du, ds, c.use_biases);
      add_gru(out, "observer", ds + du, ds, c.use_biases);
    }
    out.emplace_back("selector.W_ar", numkit::Shape{2 * ds + du, ds});
    out.emplace_back("selector.W_ra", numkit::Shape{3 * ds, du});
  } else {
    add_gru(out, "speaker", du, ds, c.use_biases);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<numkit::NamedTensor> to_named_tensors(const ParameterStore<float>& store) {
  std::vector<numkit::NamedTensor> out;
  for (const auto& [name, t] : store.values()) out.push_back({name, t});
  return out;
}

ParameterStore<float> from_named_tensors(const std::vector<numkit::NamedTensor>& entries,
                                         const ModelConfig& config) {
  ParameterStore<float> store;
  for (const auto& [name, shape] : parameter_shapes(config)) {
    auto it = std::find_if(entries.begin(), entries.end(),
                           [&](const auto& e) { return e.name == name; });
    if (it == entries.end()) {
      throw Error(ErrorCode::kParse, "checkpoint lacks parameter '" + name + "'");
    }
    if (it->tensor.shape() != shape) {
      throw Error(ErrorCode::kShape, "checkpoint parameter '" + name + "' has shape " +
                                         numkit::shape_string(it->tensor.shape()) +
                                         ", expected " + numkit::shape_string(shape));
    }
    store.set(name, it->tensor);
  }
  return store;
}

}  // namespace sirnn
