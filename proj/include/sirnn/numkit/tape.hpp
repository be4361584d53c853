// Copyright 2026 The SI-RNN Toolkit Authors. Apache 2.0 License.
//
// Reverse-mode differentiation over a linear tape of dense primitives.
//
// A Tape owns every intermediate value. Parameters enter the tape by
// reference (they must outlive it); constants are copied in. backward() walks
// the records in strict reverse order and accumulates adjoints additively, so
// a value consumed twice receives the sum of both contributions.

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sirnn/numkit/tensor.hpp"

namespace sirnn::numkit {

enum class OpKind : std::uint8_t {
  kParameter,
  kConstant,
  kMatmul,
  kAdd,
  kSub,
  kMulElementwise,
  kOneMinus,
  kConcatRows,
  kSigmoid,
  kTanh,
  kMaxElementwiseReduce,
  kSlice,
  kDot,
  kSum,
  kScale,
  kBinaryCrossEntropy,
};

const char* op_name(OpKind kind);

template <typename T>
using GradientMap = std::map<std::string, Tensor<T>, std::less<>>;

template <typename T>
class Tape;

/// Handle to one recorded value. Cheap to copy; valid while its tape lives.
template <typename T>
struct Var {
  Tape<T>* tape = nullptr;
  std::uint32_t id = 0;

  const Tensor<T>& value() const { return tape->value(*this); }
  const Shape& shape() const { return value().shape(); }
  std::size_t size() const { return value().size(); }
};

template <typename T>
class Tape {
 public:
  Tape() = default;
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  /// Registers a tracked parameter. Registering the same name twice returns
  /// the existing handle, so shared weights accumulate into one gradient.
  Var<T> parameter(std::string_view name, const Tensor<T>& value);
  Var<T> constant(Tensor<T> value);
  Var<T> zeros(std::size_t n) { return constant(Tensor<T>::zeros(n)); }

  const Tensor<T>& value(Var<T> v) const;
  std::size_t size() const noexcept { return nodes_.size(); }
  bool consumed() const noexcept { return consumed_; }

  /// d(loss)/d(parameter) for every registered parameter; parameters the loss
  /// does not reach get zero tensors. A tape can be differentiated once.
  GradientMap<T> backward(Var<T> loss);

  // Recording entry point for the primitives below.
  Var<T> record(OpKind kind, std::span<const Var<T>> inputs, Tensor<T> value,
                std::size_t aux_index = 0, T aux_scalar = T(0),
                T aux_scalar2 = T(0));

 private:
  struct Node {
    OpKind kind = OpKind::kConstant;
    std::uint32_t first_input = 0;
    std::uint32_t input_count = 0;
    std::size_t aux_index = 0;
    T aux_scalar = T(0);
    T aux_scalar2 = T(0);
    bool needs_grad = false;
    const Tensor<T>* external = nullptr;
    Tensor<T> value;
  };

  void check_owner(Var<T> v) const;
  const Tensor<T>& node_value(const Node& node) const {
    return node.external ? *node.external : node.value;
  }
  void backprop_node(const Node& node, const Tensor<T>& grad,
                     std::vector<Tensor<T>>& grads) const;

  std::vector<Node> nodes_;
  std::vector<std::uint32_t> inputs_;
  std::vector<std::pair<std::string, std::uint32_t>> parameters_;
  std::unordered_map<std::string, std::uint32_t> parameter_index_;
  bool consumed_ = false;
};

// Primitives. Shapes must conform exactly; the only mixed-rank form is
// matrix-vector (and vector-matrix) multiplication.
template <typename T> Var<T> matmul(Var<T> a, Var<T> b);
template <typename T> Var<T> add(Var<T> a, Var<T> b);
template <typename T> Var<T> sub(Var<T> a, Var<T> b);
template <typename T> Var<T> mul(Var<T> a, Var<T> b);
template <typename T> Var<T> one_minus(Var<T> a);
template <typename T> Var<T> concat_rows(std::span<const Var<T>> parts);
template <typename T> Var<T> sigmoid(Var<T> a);
template <typename T> Var<T> tanh(Var<T> a);
template <typename T> Var<T> max_reduce(std::span<const Var<T>> parts);
template <typename T> Var<T> slice(Var<T> a, std::size_t begin, std::size_t count);
template <typename T> Var<T> dot(Var<T> a, Var<T> b);
template <typename T> Var<T> sum(Var<T> a);
template <typename T> Var<T> scale(Var<T> a, T factor);
/// -[y ln p + (1-y) ln(1-p)] with p clamped to [clamp, 1-clamp]; the clamp
/// has zero derivative outside that range. `p` must hold one value.
template <typename T> Var<T> binary_cross_entropy(Var<T> p, T label, T clamp);

template <typename T>
Var<T> concat_rows(std::initializer_list<Var<T>> parts) {
  return concat_rows<T>(std::span<const Var<T>>(parts.begin(), parts.size()));
}

/// Tape-free evaluation of a primitive, used where no gradient is wanted.
/// `aux_index` / `aux_scalar` carry the slice offset (with `aux_count`), the
/// scale factor, or the BCE label.
template <typename T>
Tensor<T> forward_op(OpKind kind, std::span<const Tensor<T>> inputs,
                     std::size_t aux_index = 0, std::size_t aux_count = 0,
                     T aux_scalar = T(0), T aux_clamp = T(0));

}  // namespace sirnn::numkit
