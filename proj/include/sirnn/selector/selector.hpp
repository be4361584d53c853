// Copyright 2026 The SI-RNN Toolkit Authors. Apache 2.0 License.
//
// Context summary, the four bilinear probability heads, pair selection and
// the training loss.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sirnn/encoders/dialog.hpp"
#include "sirnn/model/parameters.hpp"

namespace sirnn::selector {

using numkit::Tape;
using numkit::Var;

inline constexpr double kProbabilityClamp = 1e-7;

template <typename T>
struct Heads {
  Var<T> W_a, W_r;
  std::optional<Var<T>> W_ar, W_ra;

  static Heads bind(Tape<T>& tape, const ParameterStore<T>& store);
};

/// Coordinate-wise max over every speaker embedding; throws on an empty table.
template <typename T>
Var<T> summarize_context(const encoders::SpeakerStateTable<T>& states);

/// sigma([a_res; h_C]^T W_a a_p)
template <typename T>
Var<T> p_addressee(const Heads<T>& heads, Var<T> a_res, Var<T> h_c, Var<T> a_p);
/// sigma([a_res; h_C]^T W_r r_q)
template <typename T>
Var<T> p_response(const Heads<T>& heads, Var<T> a_res, Var<T> h_c, Var<T> r_q);
/// sigma([a_res; h_C; r]^T W_ar a_p)
template <typename T>
Var<T> p_addressee_given_response(const Heads<T>& heads, Var<T> a_res, Var<T> h_c,
                                  Var<T> r, Var<T> a_p);
/// sigma([a_res; h_C; a_adr]^T W_ra r_q)
template <typename T>
Var<T> p_response_given_addressee(const Heads<T>& heads, Var<T> a_res, Var<T> h_c,
                                  Var<T> a_adr, Var<T> r_q);

/// Every probability the selectors need for one sample. Conditional tables are
/// indexed [response][addressee] and [addressee][response] respectively.
struct ProbabilityTables {
  std::vector<double> addressee;                         // P(a_p | C)
  std::vector<double> response;                          // P(r_q | C)
  std::vector<std::vector<double>> addressee_given_response;  // P(a_p | C, r_q)
  std::vector<std::vector<double>> response_given_addressee;  // P(r_q | C, a_p)

  bool has_conditionals() const { return !addressee_given_response.empty(); }
};

struct ScoredPair {
  std::size_t addressee = 0;  // index into the candidate addressee list
  std::size_t response = 0;
  double p_addressee = 0;
  double p_response = 0;
  std::optional<double> p_addressee_given_response;
  std::optional<double> p_response_given_addressee;
  std::optional<double> joint_score;
};

/// P(r|C) P(a|C,r) + P(a|C) P(r|C,a), or the averaged-log variant.
double joint_score(const ProbabilityTables& tables, std::size_t addressee,
                   std::size_t response, JointRule rule);

/// Full enumeration of addressee x response; ties keep the lowest addressee
/// index, then the lowest response index.
ScoredPair select_joint(const ProbabilityTables& tables, JointRule rule);

/// Independent argmaxes of the two marginal heads (same tie rule).
ScoredPair select_separate(const ProbabilityTables& tables);

enum class LossMode { kDynamic, kSirnn };

/// Everything the loss needs from one encoded sample.
template <typename T>
struct EncodedSample {
  Var<T> responder;
  Var<T> context;
  std::vector<Var<T>> addressees;  // candidate addressee embeddings
  std::vector<Var<T>> responses;   // candidate response embeddings
  std::size_t truth_addressee = 0;
  std::size_t truth_response = 0;
};

/// Sum over heads of the per-head mean binary cross-entropy (probabilities
/// clamped to [1e-7, 1-1e-7]). kDynamic uses the two marginal heads, kSirnn
/// adds both conditional heads evaluated at the ground truth.
template <typename T>
Var<T> compute_loss(const Heads<T>& heads, const EncodedSample<T>& sample, LossMode mode);

/// Probability tables from an encoded sample (no gradient needed).
template <typename T>
ProbabilityTables score_tables(const Heads<T>& heads, const EncodedSample<T>& sample,
                               bool with_conditionals);

}  // namespace sirnn::selector
