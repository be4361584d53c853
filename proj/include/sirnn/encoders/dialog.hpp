// Copyright 2026 The SI-RNN Toolkit Authors. Apache 2.0 License.

#pragma once

#include <span>
#include <string>
#include <vector>

#include "sirnn/corpus/sample.hpp"
#include "sirnn/corpus/vocab.hpp"
#include "sirnn/encoders/units.hpp"

namespace sirnn::encoders {

/// Speaker id -> current embedding. Lookup is by id, so storage order never
/// affects results.
template <typename T>
class SpeakerStateTable {
 public:
  SpeakerStateTable(Tape<T>& tape, std::span<const std::string> ids, std::size_t dim);

  const std::vector<std::string>& ids() const { return ids_; }
  const std::vector<Var<T>>& states() const { return states_; }
  std::size_t size() const { return ids_.size(); }
  std::size_t dim() const { return dim_; }

  /// Throws kInternal when the id is not in the table.
  std::size_t index_of(std::string_view id) const;
  Var<T> state(std::string_view id) const { return states_[index_of(id)]; }

  /// Commits a full set of step-t states at once.
  void assign(std::vector<Var<T>> next) { states_ = std::move(next); }

 private:
  std::vector<std::string> ids_;
  std::vector<Var<T>> states_;
  std::size_t dim_;
};

/// Last hidden state of a left-to-right GRU over the word vectors; the zero
/// vector for an empty utterance.
template <typename T>
Var<T> encode_utterance(Tape<T>& tape, const GruUnit<T>& unit, const corpus::Vocab& vocab,
                        const corpus::Tokens& tokens);

/// Role-sensitive dialog encoder. Each turn updates the sender (sender unit),
/// the addressee (addressee unit) and everyone else (observer unit), all from
/// the previous step's states and the input [sender state; utterance]. A turn
/// without addressee updates its sender against a zero other-party state and
/// treats every other speaker as an observer.
template <typename T>
SpeakerStateTable<T> encode_dialog_sirnn(Tape<T>& tape, const SirnnUnits<T>& units,
                                         const GruUnit<T>& utterance_unit,
                                         const corpus::Vocab& vocab,
                                         const corpus::DialogContext& context,
                                         std::span<const std::string> table_ids);

/// Sender-only dialog encoder: the sender is fed the utterance, every other
/// speaker is fed a zero vector, through the same GRU.
template <typename T>
SpeakerStateTable<T> encode_dialog_dynamic(Tape<T>& tape, const GruUnit<T>& speaker_unit,
                                           const GruUnit<T>& utterance_unit,
                                           const corpus::Vocab& vocab,
                                           const corpus::DialogContext& context,
                                           std::span<const std::string> table_ids);

}  // namespace sirnn::encoders
