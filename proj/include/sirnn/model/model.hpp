// Copyright 2026 The SI-RNN Toolkit Authors. Apache 2.0 License.

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sirnn/corpus/vocab.hpp"
#include "sirnn/encoders/dialog.hpp"
#include "sirnn/model/parameters.hpp"
#include "sirnn/selector/prediction.hpp"
#include "sirnn/selector/selector.hpp"

namespace sirnn {

/// Neural selector: a dialog encoder (SI-RNN or Dynamic-RNN) plus the
/// probability heads, over a frozen vocabulary.
template <typename T>
class SelectionModel {
 public:
  struct Pass {
    encoders::SpeakerStateTable<T> states;
    selector::Heads<T> heads;
    selector::EncodedSample<T> encoded;
    std::vector<std::string> addressee_ids;
  };

  SelectionModel(ModelConfig config, ParameterStore<T> params,
                 std::shared_ptr<const corpus::Vocab> vocab);

  const ModelConfig& config() const { return config_; }
  const ParameterStore<T>& parameters() const { return params_; }
  ParameterStore<T>& parameters() { return params_; }
  const corpus::Vocab& vocab() const { return *vocab_; }
  std::shared_ptr<const corpus::Vocab> shared_vocab() const { return vocab_; }

  /// Encodes the context and the candidates of one sample on `tape`.
  Pass forward(numkit::Tape<T>& tape, const corpus::SelectionSample& sample) const;

  /// Training loss of one sample; the heads used depend on the encoder.
  numkit::Var<T> loss(numkit::Tape<T>& tape, const corpus::SelectionSample& sample) const;

  selector::ProbabilityTables score(const corpus::SelectionSample& sample) const;

  /// Joint selection for SI-RNN unless disabled, separate selection otherwise.
  Prediction predict(const corpus::SelectionSample& sample) const;

 private:
  ModelConfig config_;
  ParameterStore<T> params_;
  std::shared_ptr<const corpus::Vocab> vocab_;
};

/// Selector adapter over a 32-bit model.
class NeuralSelector : public Selector {
 public:
  explicit NeuralSelector(const SelectionModel<float>& model) : model_(model) {}
  Prediction predict(const corpus::SelectionSample& sample, std::size_t) const override {
    return model_.predict(sample);
  }
  std::string name() const override;

 private:
  const SelectionModel<float>& model_;
};

}  // namespace sirnn
