// Copyright 2026 The SI-RNN Toolkit Authors. Apache 2.0 License.

#include "sirnn/selector/selector.hpp"

#include <cmath>

namespace sirnn::selector {

using numkit::concat_rows;
using numkit::dot;
using numkit::matmul;
using numkit::sigmoid;

template <typename T>
Heads<T> Heads<T>::bind(Tape<T>& tape, const ParameterStore<T>& store) {
  Heads h{tape.parameter("selector.W_a", store.at("selector.W_a")),
          tape.parameter("selector.W_r", store.at("selector.W_r")), {}, {}};
  if (store.contains("selector.W_ar")) {
    h.W_ar = tape.parameter("selector.W_ar", store.at("selector.W_ar"));
    h.W_ra = tape.parameter("selector.W_ra", store.at("selector.W_ra"));
  }
  return h;
}

template <typename T>
Var<T> summarize_context(const encoders::SpeakerStateTable<T>& states) {
  if (states.size() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "summarize_context: empty speaker table");
  }
  return numkit::max_reduce<T>(states.states());
}

namespace {

template <typename T>
Var<T> bilinear(Var<T> left, Var<T> W, Var<T> right) {
  return sigmoid(dot(matmul(left, W), right));
}

template <typename T>
const Var<T>& require(const std::optional<Var<T>>& w, const char* name) {
  if (!w) throw Error(ErrorCode::kInvalidArgument, std::string(name) + " head not present");
  return *w;
}

}  // namespace

template <typename T>
Var<T> p_addressee(const Heads<T>& heads, Var<T> a_res, Var<T> h_c, Var<T> a_p) {
  return bilinear(concat_rows({a_res, h_c}), heads.W_a, a_p);
}

template <typename T>
Var<T> p_response(const Heads<T>& heads, Var<T> a_res, Var<T> h_c, Var<T> r_q) {
  return bilinear(concat_rows({a_res, h_c}), heads.W_r, r_q);
}

template <typename T>
Var<T> p_addressee_given_response(const Heads<T>& heads, Var<T> a_res, Var<T> h_c,
                                  Var<T> r, Var<T> a_p) {
  return bilinear(concat_rows({a_res, h_c, r}), require(heads.W_ar, "W_ar"), a_p);
}

template <typename T>
Var<T> p_response_given_addressee(const Heads<T>& heads, Var<T> a_res, Var<T> h_c,
                                  Var<T> a_adr, Var<T> r_q) {
  return bilinear(concat_rows({a_res, h_c, a_adr}), require(heads.W_ra, "W_ra"), r_q);
}

double joint_score(const ProbabilityTables& t, std::size_t a, std::size_t r, JointRule rule) {
  const double p_r = t.response[r];
  const double p_a = t.addressee[a];
  const double p_a_r = t.addressee_given_response[r][a];
  const double p_r_a = t.response_given_addressee[a][r];
  if (rule == JointRule::kSum) return p_r * p_a_r + p_a * p_r_a;
  return 0.5 * (std::log(p_r) + std::log(p_a_r) + std::log(p_a) + std::log(p_r_a));
}

namespace {

void check_tables(const ProbabilityTables& t) {
  if (t.addressee.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty addressee candidate set");
  }
  if (t.response.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty response candidate set");
  }
}

std::size_t argmax(const std::vector<double>& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] > v[best]) best = i;
  }
  return best;
}

void fill(ScoredPair& p, const ProbabilityTables& t) {
  p.p_addressee = t.addressee[p.addressee];
  p.p_response = t.response[p.response];
  if (t.has_conditionals()) {
    p.p_addressee_given_response = t.addressee_given_response[p.response][p.addressee];
    p.p_response_given_addressee = t.response_given_addressee[p.addressee][p.response];
  }
}

}  // namespace

ScoredPair select_joint(const ProbabilityTables& t, JointRule rule) {
  check_tables(t);
  if (!t.has_conditionals()) {
    throw Error(ErrorCode::kInvalidArgument, "joint selection needs conditional heads");
  }
  ScoredPair best;
  double best_score = joint_score(t, 0, 0, rule);
  for (std::size_t a = 0; a < t.addressee.size(); ++a) {
    for (std::size_t r = 0; r < t.response.size(); ++r) {
      const double s = joint_score(t, a, r, rule);
      if (s > best_score) {
        best_score = s;
        best.addressee = a;
        best.response = r;
      }
    }
  }
  fill(best, t);
  best.joint_score = best_score;
  return best;
}

ScoredPair select_separate(const ProbabilityTables& t) {
  check_tables(t);
  ScoredPair p;
  p.addressee = argmax(t.addressee);
  p.response = argmax(t.response);
  fill(p, t);
  return p;
}

template <typename T>
Var<T> compute_loss(const Heads<T>& heads, const EncodedSample<T>& s, LossMode mode) {
  if (s.addressees.empty() || s.responses.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "compute_loss: empty candidate set");
  }
  if (s.truth_addressee >= s.addressees.size() || s.truth_response >= s.responses.size()) {
    throw Error(ErrorCode::kInvalidArgument, "compute_loss: missing ground truth");
  }
  const T clamp = static_cast<T>(kProbabilityClamp);

  // Mean BCE of one head over its candidates, given the left factor
  // [a_res; h_C; ...]^T W of the bilinear form.
  auto head_loss = [&](Var<T> left_times_w, const std::vector<Var<T>>& candidates,
                       std::size_t truth) {
    std::vector<Var<T>> terms;
    terms.reserve(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const Var<T> p = sigmoid(dot(left_times_w, candidates[i]));
      terms.push_back(numkit::binary_cross_entropy(p, T(i == truth ? 1 : 0), clamp));
    }
    return numkit::scale(numkit::sum(concat_rows<T>(terms)),
                         T(1) / static_cast<T>(candidates.size()));
  };

  const Var<T> base = concat_rows({s.responder, s.context});
  Var<T> loss = numkit::add(head_loss(matmul(base, heads.W_a), s.addressees, s.truth_addressee),
                            head_loss(matmul(base, heads.W_r), s.responses, s.truth_response));
  if (mode == LossMode::kSirnn) {
    const Var<T> with_response = concat_rows({s.responder, s.context, s.responses[s.truth_response]});
    const Var<T> with_addressee =
        concat_rows({s.responder, s.context, s.addressees[s.truth_addressee]});
    loss = numkit::add(loss, head_loss(matmul(with_response, require(heads.W_ar, "W_ar")),
                                       s.addressees, s.truth_addressee));
    loss = numkit::add(loss, head_loss(matmul(with_addressee, require(heads.W_ra, "W_ra")),
                                       s.responses, s.truth_response));
  }
  return loss;
}

template <typename T>
ProbabilityTables score_tables(const Heads<T>& heads, const EncodedSample<T>& s,
                               bool with_conditionals) {
  ProbabilityTables t;
  const Var<T> base = concat_rows({s.responder, s.context});
  const Var<T> left_a = matmul(base, heads.W_a);
  const Var<T> left_r = matmul(base, heads.W_r);
  auto prob = [](Var<T> left, Var<T> right) {
    return static_cast<double>(sigmoid(dot(left, right)).value()[0]);
  };
  for (const auto& a : s.addressees) t.addressee.push_back(prob(left_a, a));
  for (const auto& r : s.responses) t.response.push_back(prob(left_r, r));
  if (with_conditionals) {
    const Var<T>& W_ar = require(heads.W_ar, "W_ar");
    const Var<T>& W_ra = require(heads.W_ra, "W_ra");
    for (const auto& r : s.responses) {
      const Var<T> left = matmul(concat_rows({s.responder, s.context, r}), W_ar);
      auto& row = t.addressee_given_response.emplace_back();
      for (const auto& a : s.addressees) row.push_back(prob(left, a));
    }
    for (const auto& a : s.addressees) {
      const Var<T> left = matmul(concat_rows({s.responder, s.context, a}), W_ra);
      auto& row = t.response_given_addressee.emplace_back();
      for (const auto& r : s.responses) row.push_back(prob(left, r));
    }
  }
  return t;
}

#define SIRNN_INSTANTIATE_SELECTOR(T)                                                   \
  template struct Heads<T>;                                                             \
  template Var<T> summarize_context(const encoders::SpeakerStateTable<T>&);             \
  template Var<T> p_addressee(const Heads<T>&, Var<T>, Var<T>, Var<T>);                 \
  template Var<T> p_response(const Heads<T>&, Var<T>, Var<T>, Var<T>);                  \
  template Var<T> p_addressee_given_response(const Heads<T>&, Var<T>, Var<T>, Var<T>,   \
                                             Var<T>);                                   \
  template Var<T> p_response_given_addressee(const Heads<T>&, Var<T>, Var<T>, Var<T>,   \
                                             Var<T>);                                   \
  template Var<T> compute_loss(const Heads<T>&, const EncodedSample<T>&, LossMode);      \
  template ProbabilityTables score_tables(const Heads<T>&, const EncodedSample<T>&, bool);

SIRNN_INSTANTIATE_SELECTOR(float)
SIRNN_INSTANTIATE_SELECTOR(double)

#undef SIRNN_INSTANTIATE_SELECTOR

}  // namespace sirnn::selector
