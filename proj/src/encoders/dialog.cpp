// Copyright 2026 The SI-RNN Toolkit Authors. Apache 2.0 License.

#include "sirnn/encoders/dialog.hpp"

#include <algorithm>

namespace sirnn::encoders {

template <typename T>
SpeakerStateTable<T>::SpeakerStateTable(Tape<T>& tape, std::span<const std::string> ids,
                                        std::size_t dim)
    : ids_(ids.begin(), ids.end()), dim_(dim) {
  states_.reserve(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) states_.push_back(tape.zeros(dim));
}

template <typename T>
std::size_t SpeakerStateTable<T>::index_of(std::string_view id) const {
  auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) {
    throw Error(ErrorCode::kInternal, "speaker '" + std::string(id) + "' missing from state table");
  }
  return static_cast<std::size_t>(it - ids_.begin());
}

template <typename T>
Var<T> encode_utterance(Tape<T>& tape, const GruUnit<T>& unit, const corpus::Vocab& vocab,
                        const corpus::Tokens& tokens) {
  Var<T> h = tape.zeros(unit.hidden_dim());
  for (const auto& token : tokens) {
    h = gru_step(unit, h, tape.constant(vocab.row<T>(vocab.index(token))));
  }
  return h;
}

template <typename T>
SpeakerStateTable<T> encode_dialog_sirnn(Tape<T>& tape, const SirnnUnits<T>& units,
                                         const GruUnit<T>& utterance_unit,
                                         const corpus::Vocab& vocab,
                                         const corpus::DialogContext& context,
                                         std::span<const std::string> table_ids) {
  SpeakerStateTable<T> table(tape, table_ids, units.sender.hidden_dim());
  const Var<T> zero = tape.zeros(table.dim());
  for (const corpus::Turn& turn : context.turns) {
    const std::size_t sdr = table.index_of(turn.sender);
    const std::size_t adr = turn.addressee ? table.index_of(*turn.addressee) : sdr;
    const auto& prev = table.states();

    const Var<T> utterance = encode_utterance(tape, utterance_unit, vocab, turn.tokens);
    const Var<T> input = numkit::concat_rows({prev[sdr], utterance});

    std::vector<Var<T>> next(prev.size());
    const Var<T> other = turn.addressee ? prev[adr] : zero;
    next[sdr] = units.step(Role::kSender, prev[sdr], other, input);
    if (turn.addressee) {
      next[adr] = units.step(Role::kAddressee, prev[adr], prev[sdr], input);
    }
    for (std::size_t i = 0; i < prev.size(); ++i) {
      if (i == sdr || (turn.addressee && i == adr)) continue;
      next[i] = units.observe(prev[i], input);
    }
    table.assign(std::move(next));
  }
  return table;
}

template <typename T>
SpeakerStateTable<T> encode_dialog_dynamic(Tape<T>& tape, const GruUnit<T>& speaker_unit,
                                           const GruUnit<T>& utterance_unit,
                                           const corpus::Vocab& vocab,
                                           const corpus::DialogContext& context,
                                           std::span<const std::string> table_ids) {
  SpeakerStateTable<T> table(tape, table_ids, speaker_unit.hidden_dim());
  const Var<T> silence = tape.zeros(speaker_unit.input_dim());
  for (const corpus::Turn& turn : context.turns) {
    const std::size_t sdr = table.index_of(turn.sender);
    const auto& prev = table.states();
    const Var<T> utterance = encode_utterance(tape, utterance_unit, vocab, turn.tokens);
    std::vector<Var<T>> next(prev.size());
    for (std::size_t i = 0; i < prev.size(); ++i) {
      next[i] = gru_step(speaker_unit, prev[i], i == sdr ? utterance : silence);
    }
    table.assign(std::move(next));
  }
  return table;
}

template class SpeakerStateTable<float>;
template class SpeakerStateTable<double>;

#define SIRNN_INSTANTIATE_DIALOG(T)                                                     \
  template Var<T> encode_utterance(Tape<T>&, const GruUnit<T>&, const corpus::Vocab&,  \
                                   const corpus::Tokens&);                              \
  template SpeakerStateTable<T> encode_dialog_sirnn(                                    \
      Tape<T>&, const SirnnUnits<T>&, const GruUnit<T>&, const corpus::Vocab&,          \
      const corpus::DialogContext&, std::span<const std::string>);                      \
  template SpeakerStateTable<T> encode_dialog_dynamic(                                  \
      Tape<T>&, const GruUnit<T>&, const GruUnit<T>&, const corpus::Vocab&,             \
      const corpus::DialogContext&, std::span<const std::string>);

SIRNN_INSTANTIATE_DIALOG(float)
SIRNN_INSTANTIATE_DIALOG(double)

#undef SIRNN_INSTANTIATE_DIALOG

}  // namespace sirnn::encoders
