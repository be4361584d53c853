// Copyright 2026 The SI-RNN Toolkit Authors. Apache 2.0 License.

#include "sirnn/evalkit/evalkit.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>

#include "json.hpp"
#include "sirnn/util/parallel.hpp"

namespace sirnn::evalkit {

namespace {

const char* const kSpeakerBins[] = {"2", "3", "4", "5", "6-10", "11+"};

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

}  // namespace

std::size_t speaker_count(const corpus::SelectionSample& sample) {
  return sample.speaker_table_order().size();
}

std::string speaker_count_bin(std::size_t speakers) {
  if (speakers <= 2) return "2";
  if (speakers <= 5) return std::to_string(speakers);
  if (speakers <= 10) return "6-10";
  return "11+";
}

std::size_t addressing_distance(const corpus::SelectionSample& sample) {
  const auto& turns = sample.context.turns;
  for (std::size_t k = 0; k < turns.size(); ++k) {
    if (turns[turns.size() - 1 - k].sender == sample.truth_addressee) return k + 1;
  }
  return turns.size() + 1;
}

EvalReport evaluate(const Selector& selector, std::span<const corpus::SelectionSample> samples,
                    std::size_t workers) {
  std::vector<Prediction> predictions(samples.size());
  util::parallel_for(samples.size(), workers,
                     [&](std::size_t i) { predictions[i] = selector.predict(samples[i], i); });

  EvalReport r;
  r.selector = selector.name();
  r.n_samples = samples.size();
  for (const char* bin : kSpeakerBins) r.bins_by_speaker_count.emplace_back(bin, BinStat{});
  std::size_t adr = 0, res = 0, both = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    const auto& p = predictions[i];
    const bool adr_ok = p.addressee == s.truth_addressee;
    const bool res_ok = p.response == s.truth_response_index;
    adr += adr_ok;
    res += res_ok;
    both += adr_ok && res_ok;
    r.fallbacks += p.fallback;

    const std::string bin = speaker_count_bin(speaker_count(s));
    for (auto& [name, stat] : r.bins_by_speaker_count) {
      if (name == bin) {
        ++stat.n;
        stat.adr_correct += adr_ok;
      }
    }
    auto& d = r.bins_by_distance[addressing_distance(s)];
    ++d.n;
    d.adr_correct += adr_ok;

    if (p.joint) {
      ++r.joint_compared;
      r.joint_strictly_better += p.joint->joint_pick > p.joint->separate_pick;
      r.joint_violations += p.joint->joint_pick < p.joint->separate_pick;
    }
  }
  if (!samples.empty()) {
    const double n = static_cast<double>(samples.size());
    r.adr_acc = adr / n;
    r.res_acc = res / n;
    r.adr_res_acc = both / n;
  }
  return r;
}

std::string report_to_json(const EvalReport& r) {
  nlohmann::ordered_json j;
  j["selector"] = r.selector;
  j["n_samples"] = r.n_samples;
  j["adr_acc"] = r.adr_acc;
  j["res_acc"] = r.res_acc;
  j["adr_res_acc"] = r.adr_res_acc;
  auto bins = nlohmann::ordered_json::object();
  for (const auto& [name, s] : r.bins_by_speaker_count) {
    bins[name] = {{"n", s.n}, {"adr_acc", s.adr_acc()}};
  }
  j["bins_by_speaker_count"] = bins;
  auto dist = nlohmann::ordered_json::object();
  for (const auto& [d, s] : r.bins_by_distance) {
    dist[std::to_string(d)] = {{"n", s.n}, {"adr_acc", s.adr_acc()}};
  }
  j["bins_by_distance"] = dist;
  j["joint_compared"] = r.joint_compared;
  j["joint_strictly_better"] = r.joint_strictly_better;
  j["joint_strictly_better_fraction"] = r.joint_strictly_better_fraction();
  j["joint_violations"] = r.joint_violations;
  j["fallbacks"] = r.fallbacks;
  return j.dump(2);
}

std::string report_to_table(const EvalReport& r) {
  std::ostringstream out;
  out << "selector  " << r.selector << "\n"
      << "samples   " << r.n_samples << "\n\n"
      << "metric    accuracy\n"
      << "ADR-RES   " << fmt("%8.4f", r.adr_res_acc) << "\n"
      << "ADR       " << fmt("%8.4f", r.adr_acc) << "\n"
      << "RES       " << fmt("%8.4f", r.res_acc) << "\n\n"
      << "speakers        n   ADR\n";
  for (const auto& [name, s] : r.bins_by_speaker_count) {
    char line[64];
    std::snprintf(line, sizeof(line), "%-8s %8zu  %6.4f\n", name.c_str(), s.n, s.adr_acc());
    out << line;
  }
  out << "\ndistance        n   ADR\n";
  for (const auto& [d, s] : r.bins_by_distance) {
    char line[64];
    std::snprintf(line, sizeof(line), "%-8zu %8zu  %6.4f\n", d, s.n, s.adr_acc());
    out << line;
  }
  if (r.joint_compared) {
    out << "\njoint > separate on " << r.joint_strictly_better << "/" << r.joint_compared
        << " samples, violations " << r.joint_violations << "\n";
  }
  return out.str();
}

std::string bins_to_csv(const EvalReport& r) {
  std::ostringstream out;
  out << "speaker_bin,n,adr_acc\n";
  for (const auto& [name, s] : r.bins_by_speaker_count) {
    out << name << "," << s.n << "," << fmt("%.6f", s.adr_acc()) << "\n";
  }
  out << "\ndistance,n,adr_acc\n";
  for (const auto& [d, s] : r.bins_by_distance) {
    out << d << "," << s.n << "," << fmt("%.6f", s.adr_acc()) << "\n";
  }
  return out.str();
}

void validate(const SynthSpec& spec) {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidArgument, "synth spec: " + what);
  };
  if (spec.n_speakers < 2) fail("need at least 2 speakers");
  if (spec.context_length < 2) fail("context length must be at least 2");
  if (spec.n_subconversations < 1) fail("need at least one sub-conversation");
  if (spec.n_speakers < 2 * spec.n_subconversations) {
    fail("every sub-conversation needs at least 2 speakers");
  }
  if (spec.res_cand < 1) fail("res_cand must be positive");
  if (spec.res_cand > spec.n_speakers) fail("res_cand exceeds the number of response templates");
  if (spec.vocab_size < spec.n_subconversations) fail("vocab_size smaller than sub-conversations");
  if (spec.distance_weights.empty() || spec.distance_weights.size() > spec.context_length) {
    fail("distance_weights must have 1..context_length entries");
  }
  double total = 0;
  for (double w : spec.distance_weights) {
    if (!(w >= 0)) fail("distance weights must be non-negative");
    total += w;
  }
  if (total <= 0) fail("distance weights sum to zero");
  if (spec.n_speakers < 3) {
    for (std::size_t d = 1; d < spec.distance_weights.size(); ++d) {
      if (spec.distance_weights[d] > 0) fail("distances above 1 need at least 3 speakers");
    }
  }
  if (spec.blank_rate < 0 || spec.blank_rate > 1) fail("blank_rate outside [0, 1]");
}

std::vector<corpus::SelectionSample> generate_synthetic(const SynthSpec& spec) {
  validate(spec);
  const std::size_t n_speakers = spec.n_speakers;
  const std::size_t n_sub = spec.n_subconversations;
  const std::size_t pool = std::max<std::size_t>(1, spec.vocab_size / n_sub);
  auto speaker_id = [](std::size_t k) { return "spk" + std::to_string(k); };
  auto sub_of = [&](std::size_t k) { return k % n_sub; };
  std::vector<std::vector<std::size_t>> members(n_sub);
  for (std::size_t k = 0; k < n_speakers; ++k) members[sub_of(k)].push_back(k);

  std::vector<corpus::SelectionSample> out;
  out.reserve(spec.n_samples);
  for (std::size_t i = 0; i < spec.n_samples; ++i) {
    std::seed_seq seq{spec.seed, static_cast<std::uint64_t>(i)};
    std::mt19937_64 rng(seq);
    auto uniform = [&](std::size_t n) {
      return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    };
    auto pick = [&](const std::vector<std::size_t>& from) { return from[uniform(from.size())]; };
    auto blank = [&] {
      return spec.blank_rate > 0 && std::bernoulli_distribution(spec.blank_rate)(rng);
    };
    // Utterance template keyed to (sub-conversation, speaker).
    auto utterance = [&](std::size_t speaker) {
      corpus::Tokens t{"s" + std::to_string(speaker)};
      const std::size_t sub = sub_of(speaker);
      for (std::size_t k = 0; k < spec.topic_tokens; ++k) {
        t.push_back("t" + std::to_string(sub) + "_" + std::to_string(uniform(pool)));
      }
      return t;
    };
    auto others = [&](const std::vector<std::size_t>& from,
                      std::initializer_list<std::size_t> excluded) {
      std::vector<std::size_t> r;
      for (std::size_t k : from) {
        if (std::find(excluded.begin(), excluded.end(), k) == excluded.end()) r.push_back(k);
      }
      return r;
    };
    std::vector<std::size_t> everyone(n_speakers);
    std::iota(everyone.begin(), everyone.end(), 0);

    const std::size_t responder = uniform(n_speakers);
    const std::size_t truth = pick(others(members[sub_of(responder)], {responder}));
    std::discrete_distribution<std::size_t> distance_dist(spec.distance_weights.begin(),
                                                          spec.distance_weights.end());
    const std::size_t distance = distance_dist(rng) + 1;
    const std::size_t T = spec.context_length;
    const std::size_t key = T - distance;

    corpus::SelectionSample s;
    for (std::size_t t = 0; t < T; ++t) {
      corpus::Turn turn;
      std::size_t sender;
      std::optional<std::size_t> addressee;
      if (t == key) {
        sender = truth;
        addressee = responder;
      } else if (t < key) {
        sender = pick(members[uniform(n_sub)]);
        if (!blank()) addressee = pick(others(members[sub_of(sender)], {sender}));
      } else {
        sender = pick(others(everyone, {truth, responder}));
        auto to = others(members[sub_of(sender)], {sender, responder});
        if (to.empty()) to = others(everyone, {sender, responder});
        if (!to.empty() && !blank()) addressee = pick(to);
      }
      turn.sender = speaker_id(sender);
      if (addressee) turn.addressee = speaker_id(*addressee);
      turn.tokens = utterance(sender);
      s.context.turns.push_back(std::move(turn));
    }

    auto negatives = others(everyone, {responder});
    std::shuffle(negatives.begin(), negatives.end(), rng);
    s.candidates.push_back(utterance(responder));
    for (std::size_t k = 0; k + 1 < spec.res_cand; ++k) {
      s.candidates.push_back(utterance(negatives[k]));
    }
    std::vector<std::size_t> order(s.candidates.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<corpus::Tokens> shuffled;
    for (std::size_t k = 0; k < order.size(); ++k) {
      shuffled.push_back(std::move(s.candidates[order[k]]));
      if (order[k] == 0) s.truth_response_index = k;
    }
    s.candidates = std::move(shuffled);
    s.responder = speaker_id(responder);
    s.truth_addressee = speaker_id(truth);
    s.doc_id = "synth-" + std::to_string(spec.seed) + "-" + std::to_string(i);
    s.time = static_cast<std::int64_t>(i);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace sirnn::evalkit
