// Copyright 2026 The SI-RNN Toolkit Authors. Apache 2.0 License.
//
// Recurrent units bound to a tape. All units use the update convention
//   h = z * h_prev + (1 - z) * proposal
// and carry no bias terms unless the model enables them.

#pragma once

#include <optional>
#include <string_view>

#include "sirnn/model/parameters.hpp"
#include "sirnn/numkit/tape.hpp"

namespace sirnn::encoders {

using numkit::Tape;
using numkit::Var;

/// Standard two-gate GRU.
template <typename T>
struct GruUnit {
  Var<T> W_r, W_z, W_h;
  Var<T> U_r, U_z, U_h;
  std::optional<Var<T>> b_r, b_z, b_h;

  static GruUnit bind(Tape<T>& tape, const ParameterStore<T>& store,
                      std::string_view prefix);
  std::size_t hidden_dim() const { return W_h.shape()[0]; }
  std::size_t input_dim() const { return W_h.shape()[1]; }
};

/// Interactive GRU: a GRU whose gates also read the other party's embedding,
/// with a separate gate (p) controlling that embedding inside the proposal.
template <typename T>
struct IgruUnit {
  Var<T> W_r, W_p, W_z, W_h;
  Var<T> U_r, U_p, U_z, U_h;
  Var<T> V_r, V_p, V_z, V_h;
  std::optional<Var<T>> b_r, b_p, b_z, b_h;

  static IgruUnit bind(Tape<T>& tape, const ParameterStore<T>& store,
                       std::string_view prefix);
  /// The GRU obtained by dropping the other-party terms.
  GruUnit<T> as_gru() const;
  std::size_t hidden_dim() const { return W_h.shape()[0]; }
  std::size_t input_dim() const { return W_h.shape()[1]; }
};

template <typename T>
Var<T> gru_step(const GruUnit<T>& unit, Var<T> prev, Var<T> input);

template <typename T>
Var<T> igru_step(const IgruUnit<T>& unit, Var<T> own_prev, Var<T> other_prev,
                 Var<T> input);

enum class Role { kSender, kAddressee };

/// The three role-sensitive units of the SI-RNN dialog encoder.
template <typename T>
struct SirnnUnits {
  IgruUnit<T> sender;
  IgruUnit<T> addressee;
  GruUnit<T> observer;

  /// With `shared`, addressee and observer reuse the sender weights.
  static SirnnUnits bind(Tape<T>& tape, const ParameterStore<T>& store, bool shared);

  Var<T> step(Role role, Var<T> own_prev, Var<T> other_prev, Var<T> input) const {
    return igru_step(role == Role::kSender ? sender : addressee, own_prev, other_prev,
                     input);
  }
  Var<T> observe(Var<T> own_prev, Var<T> input) const {
    return gru_step(observer, own_prev, input);
  }
};

}  // namespace sirnn::encoders
