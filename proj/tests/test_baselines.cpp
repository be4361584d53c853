// Copyright 2026 The SI-RNN Toolkit Authors. Apache 2.0 License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>
#include <set>

#include "sirnn/baselines/baselines.hpp"
#include "support.hpp"

using namespace sirnn;
using namespace sirnn::baselines;
using corpus::Tokens;
using testing::turn;

namespace {

// Three documents: df(a)=1, df(b)=2, df(c)=2, df(d)=1.
TfIdfModel toy_model() {
  const std::vector<std::vector<Tokens>> docs = {
      {{"a", "b"}, {"a", "c"}}, {{"b", "d"}}, {{"c"}}};
  return TfIdfModel::fit(docs);
}

corpus::SelectionSample toy_sample() {
  corpus::SelectionSample s;
  s.context.turns = {turn("x", "y", {"a", "b"}), turn("y", std::nullopt, {"c", "d"})};
  s.responder = "z";
  s.truth_addressee = "y";
  s.candidates = {{"b"}, {"a", "d"}, {"c", "c"}};
  s.truth_response_index = 1;
  return s;
}

// Transcribed Ubuntu channel excerpt, nicomachus responding. The thread with
// VeryBewitching ends 10 turns before the response.
corpus::SelectionSample ubuntu_example() {
  corpus::SelectionSample s;
  s.context.turns = {
      turn("VeryBewitching", "nicomachus", {"anything", "i", "should", "be", "concerned"}),
      turn("nicomachus", "VeryBewitching", {"always", "back", "up"}),
      turn("VeryBewitching", "nicomachus", {"i", "would", "have", "assumed", "that"}),
      turn("TechMonger", std::nullopt, {"it", "was", "hybernating"}),
      turn("TechMonger", std::nullopt, {"why", "does", "my", "router"}),
      turn("Ionic", std::nullopt, {"because", "the", "dhcp", "refresh"}),
      turn("TechMonger", std::nullopt, {"so", "dhcp", "refresh", "is", "different"}),
      turn("D33p", "TechMonger", {"what", "an", "enlightenment"}),
      turn("BuzzardBuzz", std::nullopt, {"dhcp", "refresh", "for", "all", "clients"}),
      turn("BuzzardBuzz", std::nullopt, {"if", "you", "want", "them"}),
      turn("Ionic", "BuzzardBuzz", {"uhm", "no"}),
      turn("chingao", "TechMonger", {"is", "the", "machine", "turned", "on"}),
  };
  s.responder = "nicomachus";
  s.truth_addressee = "VeryBewitching";
  s.candidates = {{"install", "the", "package"}, {"if", "it", "is", "the", "last", "partition"}};
  s.truth_response_index = 1;
  return s;
}

}  // namespace

TEST_CASE("tf-idf weights and cosines") {
  const auto m = toy_model();
  CHECK(m.n_docs() == 3);
  CHECK(m.document_frequency().at("b") == 2);
  CHECK(m.idf("a") == doctest::Approx(1.4054651081081644).epsilon(1e-12));
  CHECK(m.idf("b") == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(m.idf("unseen") == doctest::Approx(2.09861228866811).epsilon(1e-12));
  CHECK(m.cosine({"a", "b", "b"}, {"b", "c"}) ==
        doctest::Approx(0.5785407728616231).epsilon(1e-12));
  CHECK(m.cosine({"a", "d"}, {"a", "c", "unseen"}) ==
        doctest::Approx(0.36584020690902447).epsilon(1e-12));
  CHECK(m.cosine({"a"}, {"a"}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(m.cosine({}, {"a"}) == 0.0);
  CHECK(m.cosine({"b"}, {"d"}) == 0.0);

  const auto back = TfIdfModel::from_json(m.to_json());
  CHECK(back.n_docs() == m.n_docs());
  CHECK(back.document_frequency() == m.document_frequency());
  CHECK_THROWS_AS(TfIdfModel::from_json("{\"n_docs\": 2}"), Error);
  CHECK_THROWS_AS(TfIdfModel(0, {}), Error);
  CHECK_THROWS_AS(TfIdfModel(1, {{"a", 2}}), Error);
}

TEST_CASE("tf-idf response choice") {
  const auto m = toy_model();
  auto s = toy_sample();
  // Cosines against the context: 0.40994, 0.81480, 0.40994.
  CHECK(tfidf_response(m, s) == 1);
  s.candidates = {{"c", "c"}, {"b"}};
  CHECK(tfidf_response(m, s) == 0);  // exact tie
  s.candidates = {{"b"}, {"c", "c"}};
  CHECK(tfidf_response(m, s) == 0);
}

TEST_CASE("fit_samples groups by document") {
  auto s1 = toy_sample();
  s1.doc_id = "d1";
  auto s2 = s1;
  auto s3 = toy_sample();
  s3.doc_id = "";
  const std::vector<corpus::SelectionSample> samples = {s1, s2, s3};
  const auto m = TfIdfModel::fit_samples(samples);
  CHECK(m.n_docs() == 2);
  CHECK(m.document_frequency().at("a") == 2);
}

TEST_CASE("recent and direct-recent on the worked dialog") {
  const auto s = ubuntu_example();
  const RecentTfIdfSelector recent(toy_model(), 1);
  const DirectRecentTfIdfSelector direct(toy_model(), 1);
  const auto r = recent.predict(s, 0);
  CHECK(r.addressee == "chingao");
  CHECK_FALSE(r.fallback);
  const auto d = direct.predict(s, 0);
  CHECK(d.addressee == "VeryBewitching");
  CHECK_FALSE(d.fallback);
  CHECK(d.response == r.response);
  CHECK(recent.name() == "recent_tfidf");
  CHECK(direct.name() == "direct_recent_tfidf");
}

TEST_CASE("direct-recent window and fallbacks") {
  auto s = ubuntu_example();
  // Push the direct mention out of the 15-turn window.
  for (int i = 0; i < 13; ++i) s.context.turns.push_back(turn("Ionic", std::nullopt, {"pad"}));
  const DirectRecentTfIdfSelector direct(toy_model(), 1);
  CHECK(direct.predict(s, 0).addressee == "Ionic");

  corpus::SelectionSample alone;
  alone.context.turns = {turn("me", std::nullopt, {"a"}), turn("me", std::nullopt, {"b"})};
  alone.responder = "me";
  alone.candidates = {{"a"}};
  // No other speaker at all: there is nothing to fall back to.
  CHECK_THROWS_AS(direct.predict(alone, 0), Error);
}

TEST_CASE("chance selector") {
  auto s = testing::three_turn_sample();
  const ChanceSelector chance(7);
  CHECK(chance.predict(s, 3).addressee == chance.predict(s, 3).addressee);

  std::map<std::string, int> adr;
  std::map<std::size_t, int> res;
  for (std::size_t i = 0; i < 2000; ++i) {
    const auto p = chance.predict(s, i);
    ++adr[p.addressee];
    ++res[p.response];
  }
  CHECK(adr.size() == 2);  // a2 and a3, never the responder
  CHECK(adr.count("a1") == 0);
  CHECK(std::abs(adr["a2"] - 1000) < 150);
  CHECK(std::abs(static_cast<int>(res[0]) - 1000) < 150);

  s.candidates = {{"only"}};
  s.truth_response_index = 0;
  s.context.turns.resize(1);  // a2 -> a1 only
  s.truth_addressee = "a2";
  for (std::size_t i = 0; i < 20; ++i) {
    const auto p = chance.predict(s, i);
    CHECK(p.addressee == "a2");
    CHECK(p.response == 0);
  }
}
