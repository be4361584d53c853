// Copyright 2026 The SI-RNN Toolkit Authors. Apache 2.0 License.
//
// Shared test helpers: random tensors, toy samples, and reference
// implementations of the recurrences written with plain loops over
// std::vector<double>, independent of the tape.

#pragma once

#include <cmath>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "sirnn/corpus/sample.hpp"
#include "sirnn/corpus/vocab.hpp"
#include "sirnn/model/parameters.hpp"
#include "sirnn/numkit/tensor.hpp"

namespace testing {

using Vec = std::vector<double>;
using Mat = std::vector<Vec>;  // row-major rows

inline sirnn::numkit::Tensor<double> random_tensor(const sirnn::numkit::Shape& shape,
                                                   std::mt19937_64& rng, double lo = -1,
                                                   double hi = 1) {
  std::uniform_real_distribution<double> d(lo, hi);
  sirnn::numkit::Tensor<double> t(shape);
  for (double& v : t.data()) v = d(rng);
  return t;
}

inline Vec to_vec(const sirnn::numkit::Tensor<double>& t) {
  return Vec(t.data().begin(), t.data().end());
}

inline Mat to_mat(const sirnn::numkit::Tensor<double>& t) {
  Mat m(t.rows(), Vec(t.cols()));
  for (std::size_t r = 0; r < t.rows(); ++r) {
    for (std::size_t c = 0; c < t.cols(); ++c) m[r][c] = t.at(r, c);
  }
  return m;
}

inline double ref_sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

inline Vec mv(const Mat& m, const Vec& v) {
  Vec out(m.size(), 0.0);
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < v.size(); ++c) out[r] += m[r][c] * v[c];
  }
  return out;
}

inline Vec cat(const Vec& a, const Vec& b) {
  Vec out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

inline double max_abs_diff(const Vec& a, const Vec& b) {
  double worst = 0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return a.size() == b.size() ? worst : INFINITY;
}

inline double max_abs_diff(const Vec& a, const sirnn::numkit::Tensor<double>& b) {
  return max_abs_diff(a, to_vec(b));
}

// Named parameter lookup for the reference recurrences.
struct RefParams {
  const sirnn::ParameterStore<double>& store;
  Mat m(const std::string& name) const { return to_mat(store.at(name)); }
};

// z * h + (1 - z) * tanh(W x + U (r * h)), r and z from sigmoid(W_g x + U_g h).
inline Vec ref_gru(const RefParams& p, const std::string& pre, const Vec& h, const Vec& x) {
  const Vec wr = mv(p.m(pre + ".W_r"), x), ur = mv(p.m(pre + ".U_r"), h);
  const Vec wz = mv(p.m(pre + ".W_z"), x), uz = mv(p.m(pre + ".U_z"), h);
  const std::size_t n = h.size();
  Vec r(n), z(n), rh(n), out(n);
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = ref_sigmoid(wr[i] + ur[i]);
    z[i] = ref_sigmoid(wz[i] + uz[i]);
    rh[i] = r[i] * h[i];
  }
  const Vec wx = mv(p.m(pre + ".W"), x), urh = mv(p.m(pre + ".U"), rh);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = z[i] * h[i] + (1 - z[i]) * std::tanh(wx[i] + urh[i]);
  }
  return out;
}

inline Vec ref_igru(const RefParams& p, const std::string& pre, const Vec& own,
                    const Vec& other, const Vec& x) {
  const std::size_t n = own.size();
  auto gate = [&](const char* g) {
    const Vec w = mv(p.m(pre + ".W_" + g), x);
    const Vec u = mv(p.m(pre + ".U_" + g), own);
    const Vec v = mv(p.m(pre + ".V_" + g), other);
    Vec out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = ref_sigmoid(w[i] + u[i] + v[i]);
    return out;
  };
  const Vec r = gate("r"), q = gate("p"), z = gate("z");
  Vec r_own(n), q_other(n), out(n);
  for (std::size_t i = 0; i < n; ++i) {
    r_own[i] = r[i] * own[i];
    q_other[i] = q[i] * other[i];
  }
  const Vec w = mv(p.m(pre + ".W"), x), u = mv(p.m(pre + ".U"), r_own),
            v = mv(p.m(pre + ".V"), q_other);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = z[i] * own[i] + (1 - z[i]) * std::tanh(w[i] + u[i] + v[i]);
  }
  return out;
}

inline Vec ref_embed(const sirnn::corpus::Vocab& vocab, const std::string& token) {
  auto row = vocab.row<double>(vocab.index(token));
  return to_vec(row);
}

inline Vec ref_utterance(const RefParams& p, const sirnn::corpus::Vocab& vocab,
                         const sirnn::corpus::Tokens& tokens, std::size_t dim) {
  Vec h(dim, 0.0);
  for (const auto& t : tokens) h = ref_gru(p, "utterance", h, ref_embed(vocab, t));
  return h;
}

// Role-sensitive encoder over plain maps; observers use `observer` unless
// the shared flag routes them to the sender weights.
inline std::map<std::string, Vec> ref_sirnn(const RefParams& p,
                                            const sirnn::corpus::Vocab& vocab,
                                            const sirnn::corpus::DialogContext& ctx,
                                            const std::vector<std::string>& ids,
                                            std::size_t ds, std::size_t du,
                                            bool shared = false) {
  std::map<std::string, Vec> state;
  for (const auto& id : ids) state[id] = Vec(ds, 0.0);
  const std::string adr_unit = shared ? "sender" : "addressee";
  for (const auto& turn : ctx.turns) {
    const Vec u = ref_utterance(p, vocab, turn.tokens, du);
    const Vec x = cat(state[turn.sender], u);
    std::map<std::string, Vec> next;
    for (const auto& id : ids) {
      if (id == turn.sender) {
        const Vec other = turn.addressee ? state[*turn.addressee] : Vec(ds, 0.0);
        next[id] = ref_igru(p, "sender", state[id], other, x);
      } else if (turn.addressee && id == *turn.addressee) {
        next[id] = ref_igru(p, adr_unit, state[id], state[turn.sender], x);
      } else {
        next[id] = ref_gru(p, shared ? "sender" : "observer", state[id], x);
      }
    }
    state = std::move(next);
  }
  return state;
}

inline std::map<std::string, Vec> ref_dynamic(const RefParams& p,
                                              const sirnn::corpus::Vocab& vocab,
                                              const sirnn::corpus::DialogContext& ctx,
                                              const std::vector<std::string>& ids,
                                              std::size_t ds, std::size_t du) {
  std::map<std::string, Vec> state;
  for (const auto& id : ids) state[id] = Vec(ds, 0.0);
  for (const auto& turn : ctx.turns) {
    const Vec u = ref_utterance(p, vocab, turn.tokens, du);
    std::map<std::string, Vec> next;
    for (const auto& id : ids) {
      next[id] = ref_gru(p, "speaker", state[id], id == turn.sender ? u : Vec(du, 0.0));
    }
    state = std::move(next);
  }
  return state;
}

// sigma(left^T W right)
inline double ref_bilinear(const Mat& w, const Vec& left, const Vec& right) {
  double s = 0;
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) s += left[i] * w[i][j] * right[j];
  }
  return ref_sigmoid(s);
}

inline sirnn::corpus::Vocab random_vocab(const std::vector<std::string>& tokens,
                                         std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<float> d(-1, 1);
  sirnn::numkit::Tensor<float> emb({tokens.size() + 1, dim});
  for (float& v : emb.data()) v = d(rng);
  return sirnn::corpus::Vocab(tokens, std::move(emb));
}

inline sirnn::ParameterStore<double> random_params(const sirnn::ModelConfig& config,
                                                   std::mt19937_64& rng, double range = 0.5) {
  sirnn::ParameterStore<double> store;
  for (const auto& [name, shape] : sirnn::parameter_shapes(config)) {
    store.set(name, random_tensor(shape, rng, -range, range));
  }
  return store;
}

inline sirnn::corpus::Turn turn(std::string sender, std::optional<std::string> addressee,
                                sirnn::corpus::Tokens tokens) {
  sirnn::corpus::Turn t;
  t.sender = std::move(sender);
  t.addressee = std::move(addressee);
  t.tokens = std::move(tokens);
  return t;
}

// The three-turn example: a2 -> a1, a1 -> a3, a3 -> a2.
inline sirnn::corpus::DialogContext three_turn_context() {
  sirnn::corpus::DialogContext c;
  c.turns = {turn("a2", "a1", {"hello", "there"}), turn("a1", "a3", {"how", "are", "you"}),
             turn("a3", "a2", {"fine"})};
  return c;
}

inline std::vector<std::string> toy_tokens() {
  return {"are", "fine", "hello", "how", "there", "you", "yes", "no"};
}

inline sirnn::corpus::SelectionSample three_turn_sample() {
  sirnn::corpus::SelectionSample s;
  s.context = three_turn_context();
  s.responder = "a1";
  s.candidates = {{"yes", "fine"}, {"no"}};
  s.truth_addressee = "a3";
  s.truth_response_index = 1;
  s.doc_id = "toy";
  return s;
}

}  // namespace testing
