// Copyright 2026 The SI-RNN Toolkit Authors. Apache 2.0 License.

#include "sirnn/encoders/units.hpp"

#include <string>

namespace sirnn::encoders {

namespace {

template <typename T>
Var<T> bind_one(Tape<T>& tape, const ParameterStore<T>& store, std::string_view prefix,
                const char* name) {
  const std::string full = std::string(prefix) + "." + name;
  return tape.parameter(full, store.at(full));
}

template <typename T>
std::optional<Var<T>> bind_optional(Tape<T>& tape, const ParameterStore<T>& store,
                                    std::string_view prefix, const char* name) {
  const std::string full = std::string(prefix) + "." + name;
  if (!store.contains(full)) return std::nullopt;
  return tape.parameter(full, store.at(full));
}

template <typename T>
Var<T> with_bias(Var<T> x, const std::optional<Var<T>>& b) {
  return b ? numkit::add(x, *b) : x;
}

template <typename T>
void check_dims(const char* unit, Var<T> state, std::size_t hidden, Var<T> input,
                std::size_t in_dim) {
  if (state.shape() != numkit::Shape{hidden} || input.shape() != numkit::Shape{in_dim}) {
    throw Error(ErrorCode::kShape,
                std::string(unit) + ": state " + numkit::shape_string(state.shape()) +
                    " / input " + numkit::shape_string(input.shape()) +
                    " do not fit hidden " + std::to_string(hidden) + ", input " +
                    std::to_string(in_dim));
  }
}

}  // namespace

template <typename T>
GruUnit<T> GruUnit<T>::bind(Tape<T>& tape, const ParameterStore<T>& store,
                            std::string_view prefix) {
  return GruUnit{bind_one(tape, store, prefix, "W_r"),
                 bind_one(tape, store, prefix, "W_z"),
                 bind_one(tape, store, prefix, "W"),
                 bind_one(tape, store, prefix, "U_r"),
                 bind_one(tape, store, prefix, "U_z"),
                 bind_one(tape, store, prefix, "U"),
                 bind_optional(tape, store, prefix, "b_r"),
                 bind_optional(tape, store, prefix, "b_z"),
                 bind_optional(tape, store, prefix, "b")};
}

template <typename T>
IgruUnit<T> IgruUnit<T>::bind(Tape<T>& tape, const ParameterStore<T>& store,
                              std::string_view prefix) {
  return IgruUnit{bind_one(tape, store, prefix, "W_r"),
                  bind_one(tape, store, prefix, "W_p"),
                  bind_one(tape, store, prefix, "W_z"),
                  bind_one(tape, store, prefix, "W"),
                  bind_one(tape, store, prefix, "U_r"),
                  bind_one(tape, store, prefix, "U_p"),
                  bind_one(tape, store, prefix, "U_z"),
                  bind_one(tape, store, prefix, "U"),
                  bind_one(tape, store, prefix, "V_r"),
                  bind_one(tape, store, prefix, "V_p"),
                  bind_one(tape, store, prefix, "V_z"),
                  bind_one(tape, store, prefix, "V"),
                  bind_optional(tape, store, prefix, "b_r"),
                  bind_optional(tape, store, prefix, "b_p"),
                  bind_optional(tape, store, prefix, "b_z"),
                  bind_optional(tape, store, prefix, "b")};
}

template <typename T>
GruUnit<T> IgruUnit<T>::as_gru() const {
  return GruUnit<T>{W_r, W_z, W_h, U_r, U_z, U_h, b_r, b_z, b_h};
}

template <typename T>
Var<T> gru_step(const GruUnit<T>& u, Var<T> prev, Var<T> input) {
  using namespace numkit;
  check_dims("gru_step", prev, u.hidden_dim(), input, u.input_dim());
  const Var<T> r = sigmoid(with_bias(add(matmul(u.W_r, input), matmul(u.U_r, prev)), u.b_r));
  const Var<T> z = sigmoid(with_bias(add(matmul(u.W_z, input), matmul(u.U_z, prev)), u.b_z));
  const Var<T> proposal =
      tanh(with_bias(add(matmul(u.W_h, input), matmul(u.U_h, mul(r, prev))), u.b_h));
  return add(mul(z, prev), mul(one_minus(z), proposal));
}

template <typename T>
Var<T> igru_step(const IgruUnit<T>& u, Var<T> own, Var<T> other, Var<T> input) {
  using namespace numkit;
  check_dims("igru_step", own, u.hidden_dim(), input, u.input_dim());
  if (other.shape() != own.shape()) {
    throw Error(ErrorCode::kShape, "igru_step: other-party state " +
                                       shape_string(other.shape()) + " vs own " +
                                       shape_string(own.shape()));
  }
  auto gate = [&](Var<T> W, Var<T> U, Var<T> V, const std::optional<Var<T>>& b) {
    return sigmoid(
        with_bias(add(add(matmul(W, input), matmul(U, own)), matmul(V, other)), b));
  };
  const Var<T> r = gate(u.W_r, u.U_r, u.V_r, u.b_r);
  const Var<T> p = gate(u.W_p, u.U_p, u.V_p, u.b_p);
  const Var<T> z = gate(u.W_z, u.U_z, u.V_z, u.b_z);
  const Var<T> proposal = tanh(with_bias(
      add(add(matmul(u.W_h, input), matmul(u.U_h, mul(r, own))),
          matmul(u.V_h, mul(p, other))),
      u.b_h));
  return add(mul(z, own), mul(one_minus(z), proposal));
}

template <typename T>
SirnnUnits<T> SirnnUnits<T>::bind(Tape<T>& tape, const ParameterStore<T>& store,
                                  bool shared) {
  IgruUnit<T> sender = IgruUnit<T>::bind(tape, store, "sender");
  if (shared) return SirnnUnits{sender, sender, sender.as_gru()};
  return SirnnUnits{sender, IgruUnit<T>::bind(tape, store, "addressee"),
                    GruUnit<T>::bind(tape, store, "observer")};
}

template struct GruUnit<float>;
template struct GruUnit<double>;
template struct IgruUnit<float>;
template struct IgruUnit<double>;
template struct SirnnUnits<float>;
template struct SirnnUnits<double>;
template Var<float> gru_step(const GruUnit<float>&, Var<float>, Var<float>);
template Var<double> gru_step(const GruUnit<double>&, Var<double>, Var<double>);
template Var<float> igru_step(const IgruUnit<float>&, Var<float>, Var<float>, Var<float>);
template Var<double> igru_step(const IgruUnit<double>&, Var<double>, Var<double>,
                               Var<double>);

}  // namespace sirnn::encoders
