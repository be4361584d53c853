// Copyright 2026 The SI-RNN Toolkit Authors. Apache 2.0 License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "sirnn/model/model.hpp"
#include "sirnn/numkit/grad_check.hpp"
#include "sirnn/selector/selector.hpp"
#include "support.hpp"

using namespace sirnn;
using namespace sirnn::selector;
using numkit::Tensor;
using testing::Vec;

namespace {

Tensor<double> vec(const Vec& v) { return Tensor<double>({v.size()}, v); }

struct HeadFixture {
  numkit::Tape<double> tape;
  ParameterStore<double> store;
  Heads<double> heads;

  explicit HeadFixture(ParameterStore<double> s)
      : store(std::move(s)), heads(Heads<double>::bind(tape, store)) {}
  Var<double> c(const Vec& v) { return tape.constant(vec(v)); }
};

ParameterStore<double> head_params(std::size_t ds, std::size_t du, std::mt19937_64* rng) {
  ParameterStore<double> s;
  auto make = [&](numkit::Shape shape) {
    return rng ? testing::random_tensor(shape, *rng) : Tensor<double>(shape);
  };
  s.set("selector.W_a", make({2 * ds, ds}));
  s.set("selector.W_r", make({2 * ds, du}));
  s.set("selector.W_ar", make({2 * ds + du, ds}));
  s.set("selector.W_ra", make({3 * ds, du}));
  return s;
}

ProbabilityTables example_tables() {
  ProbabilityTables t;
  t.response = {0.6, 0.4};
  t.addressee = {0.7, 0.3};
  t.addressee_given_response = {{0.9, 0.1}, {0.2, 0.8}};
  t.response_given_addressee = {{0.8, 0.2}, {0.3, 0.7}};
  return t;
}

// Independent enumeration with the same tie rule.
std::pair<std::size_t, std::size_t> brute_force(const ProbabilityTables& t) {
  double best = -1;
  std::pair<std::size_t, std::size_t> arg{0, 0};
  for (std::size_t a = 0; a < t.addressee.size(); ++a) {
    for (std::size_t r = 0; r < t.response.size(); ++r) {
      const double s = t.response[r] * t.addressee_given_response[r][a] +
                       t.addressee[a] * t.response_given_addressee[a][r];
      if (s > best) {
        best = s;
        arg = {a, r};
      }
    }
  }
  return arg;
}

ProbabilityTables random_tables(std::size_t na, std::size_t nr, std::mt19937_64& rng,
                                bool coarse) {
  // Coarse grids make exact ties common.
  std::uniform_int_distribution<int> grid(1, 4);
  std::uniform_real_distribution<double> fine(0.001, 0.999);
  auto draw = [&] { return coarse ? grid(rng) * 0.2 : fine(rng); };
  ProbabilityTables t;
  for (std::size_t a = 0; a < na; ++a) t.addressee.push_back(draw());
  for (std::size_t r = 0; r < nr; ++r) t.response.push_back(draw());
  t.addressee_given_response.assign(nr, std::vector<double>(na));
  t.response_given_addressee.assign(na, std::vector<double>(nr));
  for (auto& row : t.addressee_given_response) {
    for (double& v : row) v = draw();
  }
  for (auto& row : t.response_given_addressee) {
    for (double& v : row) v = draw();
  }
  return t;
}

}  // namespace

TEST_CASE("summarize_context") {
  numkit::Tape<double> tape;
  const std::vector<std::string> one = {"a"};
  encoders::SpeakerStateTable<double> single(tape, one, 2);
  single.assign({tape.constant(Tensor<double>::vector({1, 4}))});
  CHECK(summarize_context(single).value() == Tensor<double>::vector({1, 4}));

  const std::vector<std::string> two = {"a", "b"};
  encoders::SpeakerStateTable<double> pair(tape, two, 2);
  CHECK(summarize_context(pair).value() == Tensor<double>::zeros(2));
  pair.assign({tape.constant(Tensor<double>::vector({1, 4})),
               tape.constant(Tensor<double>::vector({3, 2}))});
  CHECK(summarize_context(pair).value() == Tensor<double>::vector({3, 4}));

  encoders::SpeakerStateTable<double> empty(tape, std::span<const std::string>(), 2);
  CHECK_THROWS_AS(summarize_context(empty), Error);
}

TEST_CASE("marginal heads") {
  SUBCASE("zero weights give one half") {
    HeadFixture f(head_params(1, 1, nullptr));
    CHECK(p_addressee(f.heads, f.c({1}), f.c({1}), f.c({2})).value()[0] == 0.5);
    CHECK(p_response(f.heads, f.c({1}), f.c({1}), f.c({2})).value()[0] == 0.5);
  }
  SUBCASE("hand arithmetic") {
    auto s = head_params(1, 1, nullptr);
    s.set("selector.W_a", Tensor<double>::matrix(2, 1, {1, 1}));
    s.set("selector.W_r", Tensor<double>::matrix(2, 1, {1, 1}));
    HeadFixture f(std::move(s));
    CHECK(p_addressee(f.heads, f.c({1}), f.c({1}), f.c({2})).value()[0] ==
          doctest::Approx(0.98201).epsilon(1e-5));
    CHECK(p_addressee(f.heads, f.c({1}), f.c({1}), f.c({-2})).value()[0] ==
          doctest::Approx(0.01799).epsilon(1e-4));
    CHECK(p_response(f.heads, f.c({1}), f.c({1}), f.c({2})).value()[0] ==
          doctest::Approx(0.98201).epsilon(1e-5));
    CHECK(p_response(f.heads, f.c({1}), f.c({1}), f.c({0})).value()[0] == 0.5);
  }
  SUBCASE("dimension mismatch") {
    HeadFixture f(head_params(2, 3, nullptr));
    CHECK_THROWS_AS(p_addressee(f.heads, f.c({1, 1}), f.c({1, 1}), f.c({1, 1, 1})), Error);
  }
}

TEST_CASE("conditional heads") {
  std::mt19937_64 rng(21);
  SUBCASE("zero weights give one half") {
    HeadFixture f(head_params(2, 2, nullptr));
    CHECK(p_addressee_given_response(f.heads, f.c({1, 2}), f.c({3, 4}), f.c({5, 6}),
                                     f.c({7, 8}))
              .value()[0] == 0.5);
    CHECK(p_response_given_addressee(f.heads, f.c({1, 2}), f.c({3, 4}), f.c({5, 6}),
                                     f.c({7, 8}))
              .value()[0] == 0.5);
  }
  SUBCASE("zero conditioning vector reduces to the top rows") {
    auto s = head_params(2, 2, &rng);
    const auto w_ar = testing::to_mat(s.at("selector.W_ar"));
    const auto w_ra = testing::to_mat(s.at("selector.W_ra"));
    HeadFixture f(std::move(s));
    const Vec a_res = {0.3, -0.6}, h_c = {0.9, 0.2}, target = {-0.4, 0.7};
    const testing::Mat top_ar(w_ar.begin(), w_ar.begin() + 4);
    const testing::Mat top_ra(w_ra.begin(), w_ra.begin() + 4);
    const Vec left = testing::cat(a_res, h_c);
    CHECK(p_addressee_given_response(f.heads, f.c(a_res), f.c(h_c), f.c({0, 0}), f.c(target))
              .value()[0] == doctest::Approx(testing::ref_bilinear(top_ar, left, target))
                                 .epsilon(1e-12));
    CHECK(p_response_given_addressee(f.heads, f.c(a_res), f.c(h_c), f.c({0, 0}), f.c(target))
              .value()[0] == doctest::Approx(testing::ref_bilinear(top_ra, left, target))
                                 .epsilon(1e-12));
  }
  SUBCASE("random instance against the formula") {
    auto s = head_params(2, 2, &rng);
    const auto w_ar = testing::to_mat(s.at("selector.W_ar"));
    const auto w_ra = testing::to_mat(s.at("selector.W_ra"));
    HeadFixture f(std::move(s));
    const Vec a_res = {0.3, -0.6}, h_c = {0.9, 0.2}, r = {0.5, 0.1}, a = {-0.4, 0.7};
    const double p_ar =
        p_addressee_given_response(f.heads, f.c(a_res), f.c(h_c), f.c(r), f.c(a)).value()[0];
    const double p_ra =
        p_response_given_addressee(f.heads, f.c(a_res), f.c(h_c), f.c(a), f.c(r)).value()[0];
    CHECK(std::abs(p_ar - testing::ref_bilinear(w_ar, testing::cat(testing::cat(a_res, h_c), r), a)) <
          1e-12);
    CHECK(std::abs(p_ra - testing::ref_bilinear(w_ra, testing::cat(testing::cat(a_res, h_c), a), r)) <
          1e-12);
  }
}

TEST_CASE("select_joint examples") {
  ProbabilityTables single;
  single.addressee = {0.2};
  single.response = {0.3};
  single.addressee_given_response = {{0.4}};
  single.response_given_addressee = {{0.5}};
  const auto one = select_joint(single, JointRule::kSum);
  CHECK(one.addressee == 0);
  CHECK(one.response == 0);
  const auto sep_one = select_separate(single);
  CHECK(sep_one.addressee == 0);
  CHECK(sep_one.response == 0);

  const auto t = example_tables();
  const auto best = select_joint(t, JointRule::kSum);
  CHECK(best.addressee == 0);
  CHECK(best.response == 0);
  REQUIRE(best.joint_score);
  CHECK(*best.joint_score == doctest::Approx(1.10).epsilon(1e-12));
  CHECK(joint_score(t, 1, 1, JointRule::kSum) == doctest::Approx(0.53).epsilon(1e-12));
  CHECK(best.p_addressee == 0.7);
  CHECK(best.p_response == 0.6);
  CHECK(*best.p_addressee_given_response == 0.9);
  CHECK(*best.p_response_given_addressee == 0.8);

  CHECK(joint_score(t, 0, 0, JointRule::kLogMean) ==
        doctest::Approx(0.5 * (std::log(0.6) + std::log(0.9) + std::log(0.7) + std::log(0.8))));

  ProbabilityTables empty;
  CHECK_THROWS_AS(select_joint(empty, JointRule::kSum), Error);
  ProbabilityTables marginal_only;
  marginal_only.addressee = {0.5};
  marginal_only.response = {0.5};
  CHECK_THROWS_AS(select_joint(marginal_only, JointRule::kSum), Error);
}

TEST_CASE("separate selection can disagree with joint selection") {
  auto t = example_tables();
  t.addressee = {0.7, 0.9};
  const auto joint = select_joint(t, JointRule::kSum);
  const auto separate = select_separate(t);
  CHECK(joint.addressee == 0);
  CHECK(joint.response == 0);
  CHECK(separate.addressee == 1);
  CHECK(separate.response == 0);
  CHECK(joint_score(t, 1, 0, JointRule::kSum) == doctest::Approx(0.33).epsilon(1e-12));
  CHECK(*joint.joint_score > joint_score(t, separate.addressee, separate.response,
                                         JointRule::kSum));

  ProbabilityTables uniform;
  uniform.addressee = {0.5, 0.5, 0.5};
  uniform.response = {0.5, 0.5};
  const auto u = select_separate(uniform);
  CHECK(u.addressee == 0);
  CHECK(u.response == 0);
}

TEST_CASE("select_joint matches brute force on random 4x10 tables") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    const auto t = random_tables(4, 10, rng, i % 2 == 0);
    const auto got = select_joint(t, JointRule::kSum);
    const auto expect = brute_force(t);
    CAPTURE(i);
    CHECK(got.addressee == expect.first);
    CHECK(got.response == expect.second);
    const auto sep = select_separate(t);
    CHECK(*got.joint_score >= joint_score(t, sep.addressee, sep.response, JointRule::kSum));
  }
}

TEST_CASE("joint argmax follows candidate permutations") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const auto t = random_tables(4, 6, rng, false);
    std::vector<std::size_t> pa(4), pr(6);
    std::iota(pa.begin(), pa.end(), 0);
    std::iota(pr.begin(), pr.end(), 0);
    std::shuffle(pa.begin(), pa.end(), rng);
    std::shuffle(pr.begin(), pr.end(), rng);
    ProbabilityTables p = t;  // p index k holds t index pa[k] / pr[k]
    for (std::size_t a = 0; a < 4; ++a) p.addressee[a] = t.addressee[pa[a]];
    for (std::size_t r = 0; r < 6; ++r) p.response[r] = t.response[pr[r]];
    for (std::size_t r = 0; r < 6; ++r) {
      for (std::size_t a = 0; a < 4; ++a) {
        p.addressee_given_response[r][a] = t.addressee_given_response[pr[r]][pa[a]];
        p.response_given_addressee[a][r] = t.response_given_addressee[pa[a]][pr[r]];
      }
    }
    const auto original = select_joint(t, JointRule::kSum);
    const auto permuted = select_joint(p, JointRule::kSum);
    CHECK(pa[permuted.addressee] == original.addressee);
    CHECK(pr[permuted.response] == original.response);
  }
}

TEST_CASE("compute_loss") {
  std::mt19937_64 rng(17);
  SUBCASE("one half everywhere") {
    HeadFixture f(head_params(2, 2, nullptr));
    EncodedSample<double> s{f.c({1, 2}), f.c({3, 4}), {f.c({1, 0}), f.c({0, 1}), f.c({1, 1})},
                            {f.c({2, 2}), f.c({1, 3})}, 2, 1};
    CHECK(compute_loss(f.heads, s, LossMode::kDynamic).value()[0] ==
          doctest::Approx(2 * std::log(2.0)).epsilon(1e-12));
    CHECK(compute_loss(f.heads, s, LossMode::kSirnn).value()[0] ==
          doctest::Approx(4 * std::log(2.0)).epsilon(1e-12));
  }
  SUBCASE("perfect heads") {
    auto p = head_params(1, 1, nullptr);
    for (const char* name : {"selector.W_a", "selector.W_r"}) {
      p.set(name, Tensor<double>::matrix(2, 1, {50, 50}));
    }
    p.set("selector.W_ar", Tensor<double>::matrix(3, 1, {50, 50, 0}));
    p.set("selector.W_ra", Tensor<double>::matrix(3, 1, {50, 50, 0}));
    HeadFixture f(std::move(p));
    EncodedSample<double> s{f.c({1}), f.c({1}), {f.c({-1}), f.c({1})}, {f.c({1}), f.c({-1})},
                            1, 0};
    const double loss = compute_loss(f.heads, s, LossMode::kSirnn).value()[0];
    CHECK(loss >= 0);
    CHECK(loss < 1e-5);
  }
  SUBCASE("random instance against hand-computed cross-entropy") {
    auto p = head_params(2, 3, &rng);
    const auto w_a = testing::to_mat(p.at("selector.W_a"));
    const auto w_r = testing::to_mat(p.at("selector.W_r"));
    const auto w_ar = testing::to_mat(p.at("selector.W_ar"));
    const auto w_ra = testing::to_mat(p.at("selector.W_ra"));
    HeadFixture f(std::move(p));
    const Vec a_res = {0.2, -0.7}, h_c = {0.5, 0.4};
    const std::vector<Vec> adr = {{0.1, 0.9}, {-0.3, 0.6}, {0.8, -0.2}};
    const std::vector<Vec> res = {{0.4, 0.1, -0.5}, {-0.6, 0.3, 0.2}};
    const std::size_t ta = 1, tr = 0;
    EncodedSample<double> s{f.c(a_res), f.c(h_c), {}, {}, ta, tr};
    for (const auto& a : adr) s.addressees.push_back(f.c(a));
    for (const auto& r : res) s.responses.push_back(f.c(r));

    auto bce = [](double prob, bool y) {
      prob = std::clamp(prob, 1e-7, 1 - 1e-7);
      return y ? -std::log(prob) : -std::log(1 - prob);
    };
    const Vec left = testing::cat(a_res, h_c);
    double h3 = 0, h4 = 0, h5 = 0, h6 = 0;
    for (std::size_t a = 0; a < adr.size(); ++a) {
      h3 += bce(testing::ref_bilinear(w_a, left, adr[a]), a == ta);
      h5 += bce(testing::ref_bilinear(w_ar, testing::cat(left, res[tr]), adr[a]), a == ta);
    }
    for (std::size_t r = 0; r < res.size(); ++r) {
      h4 += bce(testing::ref_bilinear(w_r, left, res[r]), r == tr);
      h6 += bce(testing::ref_bilinear(w_ra, testing::cat(left, adr[ta]), res[r]), r == tr);
    }
    const double dynamic = h3 / adr.size() + h4 / res.size();
    const double sirnn = dynamic + h5 / adr.size() + h6 / res.size();
    CHECK(std::abs(compute_loss(f.heads, s, LossMode::kDynamic).value()[0] - dynamic) < 1e-10);
    CHECK(std::abs(compute_loss(f.heads, s, LossMode::kSirnn).value()[0] - sirnn) < 1e-10);

    const auto tables = score_tables(f.heads, s, true);
    for (double v : tables.addressee) CHECK((v > 0 && v < 1));
    CHECK(tables.addressee_given_response.size() == res.size());
    CHECK(tables.response_given_addressee.size() == adr.size());
  }
}

TEST_CASE("full selector loss gradient on a two-speaker sample") {
  std::mt19937_64 rng(23);
  ModelConfig c;
  c.word_dim = 3;
  c.speaker_dim = 2;
  c.utterance_dim = 2;
  corpus::SelectionSample s;
  s.context.turns = {testing::turn("a", "b", {"hello", "there"}),
                     testing::turn("b", "a", {"how", "are", "you"})};
  s.responder = "b";
  s.truth_addressee = "a";
  s.candidates = {{"fine"}, {"no", "you"}};
  s.truth_response_index = 0;
  auto vocab = std::make_shared<const corpus::Vocab>(
      testing::random_vocab(testing::toy_tokens(), c.word_dim, 24));

  auto store = testing::random_params(c, rng);
  auto values = store.values();
  SelectionModel<double> model(c, std::move(store), vocab);
  const auto errors = numkit::grad_check_named(
      [&](numkit::Tape<double>& tape, const auto& named) {
        for (const auto& [n, t] : named) model.parameters().at(n) = t;
        return model.loss(tape, s);
      },
      values, 1e-5);
  for (const auto& [name, err] : errors) {
    CAPTURE(name);
    CHECK(err < 1e-4);
  }
}
