// Copyright 2026 The SI-RNN Toolkit Authors. Apache 2.0 License.

#include "sirnn/numkit/tape.hpp"

#include <algorithm>
#include <cmath>

namespace sirnn::numkit {

const char* op_name(OpKind kind) {
  switch (kind) {
    case OpKind::kParameter: return "parameter";
    case OpKind::kConstant: return "constant";
    case OpKind::kMatmul: return "matmul";
    case OpKind::kAdd: return "add";
    case OpKind::kSub: return "sub";
    case OpKind::kMulElementwise: return "mul_elementwise";
    case OpKind::kOneMinus: return "one_minus";
    case OpKind::kConcatRows: return "concat_rows";
    case OpKind::kSigmoid: return "sigmoid";
    case OpKind::kTanh: return "tanh";
    case OpKind::kMaxElementwiseReduce: return "max_elementwise_reduce";
    case OpKind::kSlice: return "slice";
    case OpKind::kDot: return "dot";
    case OpKind::kSum: return "sum";
    case OpKind::kScale: return "scale";
    case OpKind::kBinaryCrossEntropy: return "binary_cross_entropy";
  }
  return "unknown";
}

namespace {

[[noreturn]] void shape_error(OpKind kind, const Shape& a, const Shape& b) {
  throw Error(ErrorCode::kShape, std::string(op_name(kind)) +
                                     ": incompatible shapes " +
                                     shape_string(a) + " and " +
                                     shape_string(b));
}

[[noreturn]] void arity_error(OpKind kind, std::size_t got) {
  throw Error(ErrorCode::kInvalidArgument,
              std::string(op_name(kind)) + ": unexpected input count " +
                  std::to_string(got));
}

template <typename T>
T logistic(T x) {
  if (x >= T(0)) {
    return T(1) / (T(1) + std::exp(-x));
  }
  const T e = std::exp(x);
  return e / (T(1) + e);
}

template <typename T>
T clamp_probability(T p, T clamp) {
  return std::min(std::max(p, clamp), T(1) - clamp);
}

template <typename T>
Tensor<T> compute(OpKind kind, std::span<const Tensor<T>* const> in,
                  std::size_t aux_index, std::size_t aux_count, T aux_scalar,
                  T aux_scalar2) {
  auto need = [&](std::size_t n) {
    if (in.size() != n) arity_error(kind, in.size());
  };
  switch (kind) {
    case OpKind::kMatmul: {
      need(2);
      const Tensor<T>& a = *in[0];
      const Tensor<T>& b = *in[1];
      if (a.rank() == 2 && b.rank() == 1) {
        if (a.cols() != b.rows()) shape_error(kind, a.shape(), b.shape());
        const std::size_t m = a.rows(), k = a.cols();
        Tensor<T> out(Shape{m});
        const T* w = a.raw();
        const T* x = b.raw();
        for (std::size_t i = 0; i < m; ++i) {
          T acc = T(0);
          const T* row = w + i * k;
          for (std::size_t j = 0; j < k; ++j) acc += row[j] * x[j];
          out[i] = acc;
        }
        return out;
      }
      if (a.rank() == 1 && b.rank() == 2) {
        if (a.rows() != b.rows()) shape_error(kind, a.shape(), b.shape());
        const std::size_t k = b.rows(), n = b.cols();
        Tensor<T> out(Shape{n});
        T* o = out.raw();
        for (std::size_t i = 0; i < k; ++i) {
          const T s = a[i];
          const T* row = b.raw() + i * n;
          for (std::size_t j = 0; j < n; ++j) o[j] += s * row[j];
        }
        return out;
      }
      if (a.rank() == 2 && b.rank() == 2) {
        if (a.cols() != b.rows()) shape_error(kind, a.shape(), b.shape());
        const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
        Tensor<T> out(Shape{m, n});
        for (std::size_t i = 0; i < m; ++i) {
          for (std::size_t p = 0; p < k; ++p) {
            const T s = a.at(i, p);
            for (std::size_t j = 0; j < n; ++j) out.at(i, j) += s * b.at(p, j);
          }
        }
        return out;
      }
      shape_error(kind, a.shape(), b.shape());
    }
    case OpKind::kAdd:
    case OpKind::kSub:
    case OpKind::kMulElementwise: {
      need(2);
      const Tensor<T>& a = *in[0];
      const Tensor<T>& b = *in[1];
      if (a.shape() != b.shape()) shape_error(kind, a.shape(), b.shape());
      Tensor<T> out(a.shape());
      for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = kind == OpKind::kAdd   ? a[i] + b[i]
                 : kind == OpKind::kSub ? a[i] - b[i]
                                        : a[i] * b[i];
      }
      return out;
    }
    case OpKind::kOneMinus:
    case OpKind::kSigmoid:
    case OpKind::kTanh:
    case OpKind::kScale: {
      need(1);
      Tensor<T> out = *in[0];
      for (T& v : out.data()) {
        v = kind == OpKind::kOneMinus  ? T(1) - v
            : kind == OpKind::kSigmoid ? logistic(v)
            : kind == OpKind::kTanh    ? std::tanh(v)
                                       : v * aux_scalar;
      }
      return out;
    }
    case OpKind::kConcatRows: {
      if (in.empty()) arity_error(kind, 0);
      const Tensor<T>& first = *in[0];
      std::size_t rows = 0;
      for (const Tensor<T>* t : in) {
        if (t->rank() != first.rank() || t->rank() > 2 ||
            (t->rank() == 2 && t->cols() != first.cols())) {
          shape_error(kind, first.shape(), t->shape());
        }
        rows += t->rows();
      }
      Shape shape = first.shape();
      shape[0] = rows;
      std::vector<T> data;
      data.reserve(shape_size(shape));
      for (const Tensor<T>* t : in) {
        data.insert(data.end(), t->data().begin(), t->data().end());
      }
      return Tensor<T>(std::move(shape), std::move(data));
    }
    case OpKind::kMaxElementwiseReduce: {
      if (in.empty()) arity_error(kind, 0);
      Tensor<T> out = *in[0];
      for (std::size_t s = 1; s < in.size(); ++s) {
        if (in[s]->shape() != out.shape()) {
          shape_error(kind, out.shape(), in[s]->shape());
        }
        for (std::size_t i = 0; i < out.size(); ++i) {
          out[i] = std::max(out[i], (*in[s])[i]);
        }
      }
      return out;
    }
    case OpKind::kSlice: {
      need(1);
      const Tensor<T>& a = *in[0];
      if (a.rank() > 2 || aux_count == 0 || aux_index + aux_count > a.rows()) {
        throw Error(ErrorCode::kShape,
                    "slice: rows [" + std::to_string(aux_index) + ", " +
                        std::to_string(aux_index + aux_count) +
                        ") out of range for shape " + shape_string(a.shape()));
      }
      Shape shape = a.shape();
      shape[0] = aux_count;
      const std::size_t stride = a.cols();
      auto begin = a.data().begin() + aux_index * stride;
      return Tensor<T>(std::move(shape),
                       std::vector<T>(begin, begin + aux_count * stride));
    }
    case OpKind::kDot: {
      need(2);
      const Tensor<T>& a = *in[0];
      const Tensor<T>& b = *in[1];
      if (a.rank() != 1 || a.shape() != b.shape()) {
        shape_error(kind, a.shape(), b.shape());
      }
      T acc = T(0);
      for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
      return Tensor<T>(Shape{1}, {acc});
    }
    case OpKind::kSum: {
      need(1);
      T acc = T(0);
      for (T v : in[0]->data()) acc += v;
      return Tensor<T>(Shape{1}, {acc});
    }
    case OpKind::kBinaryCrossEntropy: {
      need(1);
      if (in[0]->size() != 1) shape_error(kind, in[0]->shape(), Shape{1});
      const T p = clamp_probability((*in[0])[0], aux_scalar2);
      const T y = aux_scalar;
      return Tensor<T>(Shape{1},
                       {-(y * std::log(p) + (T(1) - y) * std::log(T(1) - p))});
    }
    case OpKind::kParameter:
    case OpKind::kConstant:
      break;
  }
  throw Error(ErrorCode::kInternal,
              std::string("no forward rule for ") + op_name(kind));
}

template <typename T>
void accumulate(std::vector<Tensor<T>>& grads, std::uint32_t id,
                const Shape& shape, auto&& fn) {
  Tensor<T>& g = grads[id];
  if (g.empty()) g = Tensor<T>(shape);
  fn(g);
}

}  // namespace

template <typename T>
void Tape<T>::check_owner(Var<T> v) const {
  if (v.tape != this || v.id >= nodes_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "value does not belong to this tape");
  }
}

template <typename T>
const Tensor<T>& Tape<T>::value(Var<T> v) const {
  check_owner(v);
  return node_value(nodes_[v.id]);
}

template <typename T>
Var<T> Tape<T>::parameter(std::string_view name, const Tensor<T>& value) {
  auto it = parameter_index_.find(std::string(name));
  if (it != parameter_index_.end()) {
    if (nodes_[it->second].external != &value) {
      throw Error(ErrorCode::kInvalidArgument,
                  "parameter '" + std::string(name) +
                      "' registered twice with different storage");
    }
    return Var<T>{this, it->second};
  }
  if (consumed_) throw Error(ErrorCode::kState, "tape already consumed");
  Node node;
  node.kind = OpKind::kParameter;
  node.external = &value;
  node.needs_grad = true;
  const auto id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back(std::move(node));
  parameters_.emplace_back(std::string(name), id);
  parameter_index_.emplace(std::string(name), id);
  return Var<T>{this, id};
}

template <typename T>
Var<T> Tape<T>::constant(Tensor<T> value) {
  if (consumed_) throw Error(ErrorCode::kState, "tape already consumed");
  if (!value.all_finite()) {
    throw Error(ErrorCode::kNumeric, "constant holds a non-finite value");
  }
  Node node;
  node.kind = OpKind::kConstant;
  node.value = std::move(value);
  nodes_.push_back(std::move(node));
  return Var<T>{this, static_cast<std::uint32_t>(nodes_.size() - 1)};
}

template <typename T>
Var<T> Tape<T>::record(OpKind kind, std::span<const Var<T>> inputs,
                       Tensor<T> value, std::size_t aux_index, T aux_scalar,
                       T aux_scalar2) {
  if (consumed_) throw Error(ErrorCode::kState, "tape already consumed");
  if (!value.all_finite()) {
    throw Error(ErrorCode::kNumeric,
                std::string(op_name(kind)) + " produced a non-finite value");
  }
  Node node;
  node.kind = kind;
  node.first_input = static_cast<std::uint32_t>(inputs_.size());
  node.input_count = static_cast<std::uint32_t>(inputs.size());
  node.aux_index = aux_index;
  node.aux_scalar = aux_scalar;
  node.aux_scalar2 = aux_scalar2;
  for (const Var<T>& v : inputs) {
    check_owner(v);
    inputs_.push_back(v.id);
    node.needs_grad = node.needs_grad || nodes_[v.id].needs_grad;
  }
  node.value = std::move(value);
  nodes_.push_back(std::move(node));
  return Var<T>{this, static_cast<std::uint32_t>(nodes_.size() - 1)};
}

template <typename T>
GradientMap<T> Tape<T>::backward(Var<T> loss) {
  check_owner(loss);
  if (consumed_) throw Error(ErrorCode::kState, "tape already consumed");
  if (value(loss).size() != 1) {
    throw Error(ErrorCode::kShape, "backward: loss must be scalar, got shape " +
                                       shape_string(value(loss).shape()));
  }
  consumed_ = true;

  std::vector<Tensor<T>> grads(nodes_.size());
  grads[loss.id] = Tensor<T>(value(loss).shape(), {T(1)});
  for (std::size_t i = loss.id + 1; i-- > 0;) {
    const Node& node = nodes_[i];
    if (grads[i].empty() || !node.needs_grad) continue;
    if (node.kind == OpKind::kParameter || node.kind == OpKind::kConstant) {
      continue;
    }
    backprop_node(node, grads[i], grads);
    if (!grads[i].all_finite()) {
      throw Error(ErrorCode::kNumeric, std::string("adjoint of ") +
                                           op_name(node.kind) +
                                           " is non-finite");
    }
    grads[i] = Tensor<T>();  // release intermediate adjoints early
  }

  GradientMap<T> out;
  for (const auto& [name, id] : parameters_) {
    if (grads[id].empty()) {
      out.emplace(name, Tensor<T>(node_value(nodes_[id]).shape()));
    } else {
      out.emplace(name, std::move(grads[id]));
    }
  }
  return out;
}

template <typename T>
void Tape<T>::backprop_node(const Node& node, const Tensor<T>& g,
                            std::vector<Tensor<T>>& grads) const {
  const std::uint32_t* ids = inputs_.data() + node.first_input;
  auto input = [&](std::size_t k) -> const Tensor<T>& {
    return node_value(nodes_[ids[k]]);
  };
  auto wants = [&](std::size_t k) { return nodes_[ids[k]].needs_grad; };
  const Tensor<T>& out = node.value;

  switch (node.kind) {
    case OpKind::kMatmul: {
      const Tensor<T>& a = input(0);
      const Tensor<T>& b = input(1);
      if (a.rank() == 2 && b.rank() == 1) {
        const std::size_t m = a.rows(), k = a.cols();
        if (wants(0)) {
          accumulate<T>(grads, ids[0], a.shape(), [&](Tensor<T>& ga) {
            T* d = ga.raw();
            for (std::size_t i = 0; i < m; ++i) {
              const T gi = g[i];
              T* row = d + i * k;
              for (std::size_t j = 0; j < k; ++j) row[j] += gi * b[j];
            }
          });
        }
        if (wants(1)) {
          accumulate<T>(grads, ids[1], b.shape(), [&](Tensor<T>& gb) {
            T* d = gb.raw();
            for (std::size_t i = 0; i < m; ++i) {
              const T gi = g[i];
              const T* row = a.raw() + i * k;
              for (std::size_t j = 0; j < k; ++j) d[j] += row[j] * gi;
            }
          });
        }
      } else if (a.rank() == 1 && b.rank() == 2) {
        const std::size_t k = b.rows(), n = b.cols();
        if (wants(0)) {
          accumulate<T>(grads, ids[0], a.shape(), [&](Tensor<T>& ga) {
            for (std::size_t i = 0; i < k; ++i) {
              const T* row = b.raw() + i * n;
              T acc = T(0);
              for (std::size_t j = 0; j < n; ++j) acc += row[j] * g[j];
              ga[i] += acc;
            }
          });
        }
        if (wants(1)) {
          accumulate<T>(grads, ids[1], b.shape(), [&](Tensor<T>& gb) {
            for (std::size_t i = 0; i < k; ++i) {
              const T s = a[i];
              T* row = gb.raw() + i * n;
              for (std::size_t j = 0; j < n; ++j) row[j] += s * g[j];
            }
          });
        }
      } else {
        const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
        if (wants(0)) {
          accumulate<T>(grads, ids[0], a.shape(), [&](Tensor<T>& ga) {
            for (std::size_t i = 0; i < m; ++i)
              for (std::size_t p = 0; p < k; ++p) {
                T acc = T(0);
                for (std::size_t j = 0; j < n; ++j) acc += g.at(i, j) * b.at(p, j);
                ga.at(i, p) += acc;
              }
          });
        }
        if (wants(1)) {
          accumulate<T>(grads, ids[1], b.shape(), [&](Tensor<T>& gb) {
            for (std::size_t i = 0; i < m; ++i)
              for (std::size_t p = 0; p < k; ++p) {
                const T s = a.at(i, p);
                for (std::size_t j = 0; j < n; ++j) gb.at(p, j) += s * g.at(i, j);
              }
          });
        }
      }
      return;
    }
    case OpKind::kAdd:
    case OpKind::kSub: {
      const T sign = node.kind == OpKind::kAdd ? T(1) : T(-1);
      for (std::size_t k = 0; k < 2; ++k) {
        if (!wants(k)) continue;
        const T s = k == 0 ? T(1) : sign;
        accumulate<T>(grads, ids[k], g.shape(), [&](Tensor<T>& gi) {
          for (std::size_t i = 0; i < g.size(); ++i) gi[i] += s * g[i];
        });
      }
      return;
    }
    case OpKind::kMulElementwise: {
      for (std::size_t k = 0; k < 2; ++k) {
        if (!wants(k)) continue;
        const Tensor<T>& other = input(1 - k);
        accumulate<T>(grads, ids[k], g.shape(), [&](Tensor<T>& gi) {
          for (std::size_t i = 0; i < g.size(); ++i) gi[i] += g[i] * other[i];
        });
      }
      return;
    }
    case OpKind::kOneMinus:
    case OpKind::kSigmoid:
    case OpKind::kTanh:
    case OpKind::kScale: {
      if (!wants(0)) return;
      accumulate<T>(grads, ids[0], g.shape(), [&](Tensor<T>& gi) {
        for (std::size_t i = 0; i < g.size(); ++i) {
          T d;
          switch (node.kind) {
            case OpKind::kOneMinus: d = T(-1); break;
            case OpKind::kSigmoid: d = out[i] * (T(1) - out[i]); break;
            case OpKind::kTanh: d = T(1) - out[i] * out[i]; break;
            default: d = node.aux_scalar; break;
          }
          gi[i] += g[i] * d;
        }
      });
      return;
    }
    case OpKind::kConcatRows: {
      std::size_t offset = 0;
      for (std::size_t k = 0; k < node.input_count; ++k) {
        const Tensor<T>& part = input(k);
        if (wants(k)) {
          accumulate<T>(grads, ids[k], part.shape(), [&](Tensor<T>& gi) {
            for (std::size_t i = 0; i < part.size(); ++i) gi[i] += g[offset + i];
          });
        }
        offset += part.size();
      }
      return;
    }
    case OpKind::kMaxElementwiseReduce: {
      // Ties route to the first input holding the maximum.
      for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t k = 0; k < node.input_count; ++k) {
          if (input(k)[i] == out[i]) {
            if (wants(k)) {
              accumulate<T>(grads, ids[k], out.shape(),
                            [&](Tensor<T>& gi) { gi[i] += g[i]; });
            }
            break;
          }
        }
      }
      return;
    }
    case OpKind::kSlice: {
      if (!wants(0)) return;
      const Tensor<T>& a = input(0);
      const std::size_t offset = node.aux_index * a.cols();
      accumulate<T>(grads, ids[0], a.shape(), [&](Tensor<T>& gi) {
        for (std::size_t i = 0; i < g.size(); ++i) gi[offset + i] += g[i];
      });
      return;
    }
    case OpKind::kDot: {
      for (std::size_t k = 0; k < 2; ++k) {
        if (!wants(k)) continue;
        const Tensor<T>& other = input(1 - k);
        accumulate<T>(grads, ids[k], other.shape(), [&](Tensor<T>& gi) {
          for (std::size_t i = 0; i < other.size(); ++i) gi[i] += g[0] * other[i];
        });
      }
      return;
    }
    case OpKind::kSum: {
      if (!wants(0)) return;
      accumulate<T>(grads, ids[0], input(0).shape(), [&](Tensor<T>& gi) {
        for (std::size_t i = 0; i < gi.size(); ++i) gi[i] += g[0];
      });
      return;
    }
    case OpKind::kBinaryCrossEntropy: {
      if (!wants(0)) return;
      const T p = input(0)[0];
      const T clamp = node.aux_scalar2;
      if (p < clamp || p > T(1) - clamp) return;
      const T y = node.aux_scalar;
      accumulate<T>(grads, ids[0], input(0).shape(), [&](Tensor<T>& gi) {
        gi[0] += g[0] * (-y / p + (T(1) - y) / (T(1) - p));
      });
      return;
    }
    case OpKind::kParameter:
    case OpKind::kConstant:
      return;
  }
}

namespace {

template <typename T, std::size_t N>
Var<T> apply(OpKind kind, const std::array<Var<T>, N>& args,
             std::size_t aux_index = 0, std::size_t aux_count = 0,
             T aux_scalar = T(0), T aux_scalar2 = T(0)) {
  std::array<const Tensor<T>*, N> values;
  for (std::size_t i = 0; i < N; ++i) values[i] = &args[i].value();
  Tensor<T> out = compute<T>(kind, values, aux_index, aux_count, aux_scalar,
                             aux_scalar2);
  return args[0].tape->record(kind, args, std::move(out), aux_index, aux_scalar,
                              aux_scalar2);
}

template <typename T>
Var<T> apply_many(OpKind kind, std::span<const Var<T>> args) {
  if (args.empty()) arity_error(kind, 0);
  std::vector<const Tensor<T>*> values;
  values.reserve(args.size());
  for (const Var<T>& v : args) values.push_back(&v.value());
  Tensor<T> out = compute<T>(kind, values, 0, 0, T(0), T(0));
  return args[0].tape->record(kind, args, std::move(out));
}

}  // namespace

template <typename T> Var<T> matmul(Var<T> a, Var<T> b) {
  return apply<T, 2>(OpKind::kMatmul, {a, b});
}
template <typename T> Var<T> add(Var<T> a, Var<T> b) {
  return apply<T, 2>(OpKind::kAdd, {a, b});
}
template <typename T> Var<T> sub(Var<T> a, Var<T> b) {
  return apply<T, 2>(OpKind::kSub, {a, b});
}
template <typename T> Var<T> mul(Var<T> a, Var<T> b) {
  return apply<T, 2>(OpKind::kMulElementwise, {a, b});
}
template <typename T> Var<T> one_minus(Var<T> a) {
  return apply<T, 1>(OpKind::kOneMinus, {a});
}
template <typename T> Var<T> concat_rows(std::span<const Var<T>> parts) {
  return apply_many<T>(OpKind::kConcatRows, parts);
}
template <typename T> Var<T> sigmoid(Var<T> a) {
  return apply<T, 1>(OpKind::kSigmoid, {a});
}
template <typename T> Var<T> tanh(Var<T> a) {
  return apply<T, 1>(OpKind::kTanh, {a});
}
template <typename T> Var<T> max_reduce(std::span<const Var<T>> parts) {
  return apply_many<T>(OpKind::kMaxElementwiseReduce, parts);
}
template <typename T> Var<T> slice(Var<T> a, std::size_t begin, std::size_t count) {
  return apply<T, 1>(OpKind::kSlice, {a}, begin, count);
}
template <typename T> Var<T> dot(Var<T> a, Var<T> b) {
  return apply<T, 2>(OpKind::kDot, {a, b});
}
template <typename T> Var<T> sum(Var<T> a) {
  return apply<T, 1>(OpKind::kSum, {a});
}
template <typename T> Var<T> scale(Var<T> a, T factor) {
  return apply<T, 1>(OpKind::kScale, {a}, 0, 0, factor);
}
template <typename T> Var<T> binary_cross_entropy(Var<T> p, T label, T clamp) {
  return apply<T, 1>(OpKind::kBinaryCrossEntropy, {p}, 0, 0, label, clamp);
}

template <typename T>
Tensor<T> forward_op(OpKind kind, std::span<const Tensor<T>> inputs,
                     std::size_t aux_index, std::size_t aux_count, T aux_scalar,
                     T aux_clamp) {
  std::vector<const Tensor<T>*> values;
  values.reserve(inputs.size());
  for (const Tensor<T>& t : inputs) values.push_back(&t);
  Tensor<T> out = compute<T>(kind, values, aux_index, aux_count, aux_scalar,
                             aux_clamp);
  if (!out.all_finite()) {
    throw Error(ErrorCode::kNumeric,
                std::string(op_name(kind)) + " produced a non-finite value");
  }
  return out;
}

#define SIRNN_INSTANTIATE_TAPE(T)                                              \
  template class Tape<T>;                                                      \
  template Var<T> matmul<T>(Var<T>, Var<T>);                                   \
  template Var<T> add<T>(Var<T>, Var<T>);                                      \
  template Var<T> sub<T>(Var<T>, Var<T>);                                      \
  template Var<T> mul<T>(Var<T>, Var<T>);                                      \
  template Var<T> one_minus<T>(Var<T>);                                        \
  template Var<T> concat_rows<T>(std::span<const Var<T>>);                     \
  template Var<T> sigmoid<T>(Var<T>);                                          \
  template Var<T> tanh<T>(Var<T>);                                             \
  template Var<T> max_reduce<T>(std::span<const Var<T>>);                      \
  template Var<T> slice<T>(Var<T>, std::size_t, std::size_t);                  \
  template Var<T> dot<T>(Var<T>, Var<T>);                                      \
  template Var<T> sum<T>(Var<T>);                                              \
  template Var<T> scale<T>(Var<T>, T);                                         \
  template Var<T> binary_cross_entropy<T>(Var<T>, T, T);                       \
  template Tensor<T> forward_op<T>(OpKind, std::span<const Tensor<T>>,         \
                                   std::size_t, std::size_t, T, T);

SIRNN_INSTANTIATE_TAPE(float)
SIRNN_INSTANTIATE_TAPE(double)

#undef SIRNN_INSTANTIATE_TAPE

}  // namespace sirnn::numkit
