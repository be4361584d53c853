// Copyright 2026 The SI-RNN Toolkit Authors. Apache 2.0 License.

#include "sirnn/model/model.hpp"

#include <algorithm>

namespace sirnn {

template <typename T>
SelectionModel<T>::SelectionModel(ModelConfig config, ParameterStore<T> params,
                                  std::shared_ptr<const corpus::Vocab> vocab)
    : config_(config), params_(std::move(params)), vocab_(std::move(vocab)) {
  if (!vocab_) throw Error(ErrorCode::kInvalidArgument, "model needs a vocabulary");
  if (vocab_->dim() != config_.word_dim) {
    throw Error(ErrorCode::kShape, "vocabulary dimension " + std::to_string(vocab_->dim()) +
                                       " does not match word_dim " +
                                       std::to_string(config_.word_dim));
  }
  for (const auto& [name, shape] : parameter_shapes(config_)) {
    if (!params_.contains(name) || params_.at(name).shape() != shape) {
      throw Error(ErrorCode::kShape, "parameter '" + name + "' missing or not shaped " +
                                         numkit::shape_string(shape));
    }
  }
}

template <typename T>
typename SelectionModel<T>::Pass SelectionModel<T>::forward(
    numkit::Tape<T>& tape, const corpus::SelectionSample& sample) const {
  const auto utterance = encoders::GruUnit<T>::bind(tape, params_, "utterance");
  const auto order = sample.speaker_table_order();
  auto states = config_.encoder == EncoderKind::kSirnn
                    ? encoders::encode_dialog_sirnn(
                          tape, encoders::SirnnUnits<T>::bind(tape, params_, config_.shared_igrus),
                          utterance, *vocab_, sample.context, order)
                    : encoders::encode_dialog_dynamic(
                          tape, encoders::GruUnit<T>::bind(tape, params_, "speaker"), utterance,
                          *vocab_, sample.context, order);

  Pass pass{std::move(states), selector::Heads<T>::bind(tape, params_), {}, {}};
  auto& enc = pass.encoded;
  enc.responder = pass.states.state(sample.responder);
  enc.context = selector::summarize_context(pass.states);
  pass.addressee_ids = sample.candidate_addressees();
  if (pass.addressee_ids.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty addressee candidate set");
  }
  for (const auto& id : pass.addressee_ids) enc.addressees.push_back(pass.states.state(id));
  for (const auto& c : sample.candidates) {
    enc.responses.push_back(encoders::encode_utterance(tape, utterance, *vocab_, c));
  }
  auto truth = std::find(pass.addressee_ids.begin(), pass.addressee_ids.end(),
                         sample.truth_addressee);
  enc.truth_addressee = truth == pass.addressee_ids.end()
                            ? pass.addressee_ids.size()
                            : static_cast<std::size_t>(truth - pass.addressee_ids.begin());
  enc.truth_response = sample.truth_response_index;
  return pass;
}

template <typename T>
numkit::Var<T> SelectionModel<T>::loss(numkit::Tape<T>& tape,
                                       const corpus::SelectionSample& sample) const {
  const Pass pass = forward(tape, sample);
  return selector::compute_loss(pass.heads, pass.encoded,
                                config_.encoder == EncoderKind::kSirnn
                                    ? selector::LossMode::kSirnn
                                    : selector::LossMode::kDynamic);
}

template <typename T>
selector::ProbabilityTables SelectionModel<T>::score(
    const corpus::SelectionSample& sample) const {
  numkit::Tape<T> tape;
  const Pass pass = forward(tape, sample);
  return selector::score_tables(pass.heads, pass.encoded, config_.has_conditional_heads());
}

template <typename T>
Prediction SelectionModel<T>::predict(const corpus::SelectionSample& sample) const {
  const auto tables = score(sample);
  const auto candidates = sample.candidate_addressees();
  const auto separate = selector::select_separate(tables);
  Prediction out;
  if (config_.has_conditional_heads()) {
    const auto joint = selector::select_joint(tables, config_.joint_rule);
    out.joint = JointComparison{
        *joint.joint_score,
        selector::joint_score(tables, separate.addressee, separate.response, config_.joint_rule)};
    out.scored = config_.joint_selection ? joint : separate;
    if (!config_.joint_selection) {
      out.scored->joint_score = out.joint->separate_pick;
    }
  } else {
    out.scored = separate;
  }
  out.addressee = candidates[out.scored->addressee];
  out.response = out.scored->response;
  return out;
}

std::string NeuralSelector::name() const {
  const auto& c = model_.config();
  std::string n = to_string(c.encoder);
  if (c.shared_igrus) n += "+shared_igrus";
  if (c.encoder == EncoderKind::kSirnn && !c.joint_selection) n += "+no_joint_selection";
  return n;
}

template class SelectionModel<float>;
template class SelectionModel<double>;

}  // namespace sirnn
