// Copyright 2026 The Parascore Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "parascore/augment.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>

#include "parascore/bleu.hpp"
#include "parascore/editdist.hpp"
#include "parascore/error.hpp"

namespace parascore {

std::string_view metric_name(Metric metric) {
  switch (metric) {
    case Metric::kWer: return "wer";
    case Metric::kCer: return "cer";
    case Metric::kBleu: return "bleu";
  }
  return "?";
}

std::string_view mode_name(Mode mode) {
  switch (mode) {
    case Mode::kBase: return "base";
    case Mode::kParaRef: return "para_ref";
    case Mode::kParaBoth: return "para_both";
  }
  return "?";
}

std::optional<Metric> parse_metric(std::string_view name) {
  for (Metric m : {Metric::kWer, Metric::kCer, Metric::kBleu}) {
    if (metric_name(m) == name) return m;
  }
  return std::nullopt;
}

std::optional<Mode> parse_mode(std::string_view name) {
  for (Mode m : {Mode::kBase, Mode::kParaRef, Mode::kParaBoth}) {
    if (mode_name(m) == name) return m;
  }
  return std::nullopt;
}

std::string_view aggregation_name(AggregationPolicy::Kind kind) {
  using Kind = AggregationPolicy::Kind;
  switch (kind) {
    case Kind::kMax: return "max";
    case Kind::kMin: return "min";
    case Kind::kMean: return "mean";
    case Kind::kTopKMean: return "top_k_mean";
    case Kind::kMaxJitter: return "max_jitter";
  }
  return "?";
}

std::optional<AggregationPolicy::Kind> parse_aggregation(std::string_view name) {
  using Kind = AggregationPolicy::Kind;
  for (Kind k : {Kind::kMax, Kind::kMin, Kind::kMean, Kind::kTopKMean,
                 Kind::kMaxJitter}) {
    if (aggregation_name(k) == name) return k;
  }
  return std::nullopt;
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

double aggregate(std::span<const double> values, const AggregationPolicy& policy,
                 std::uint64_t stream) {
  using Kind = AggregationPolicy::Kind;
  if (values.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no candidate scores to aggregate");
  }
  switch (policy.kind) {
    case Kind::kMax:
      return *std::max_element(values.begin(), values.end());
    case Kind::kMin:
      return *std::min_element(values.begin(), values.end());
    case Kind::kMean:
      return std::accumulate(values.begin(), values.end(), 0.0) /
             static_cast<double>(values.size());
    case Kind::kTopKMean: {
      if (policy.k == 0) throw std::invalid_argument("top-k needs k >= 1");
      std::vector<double> sorted(values.begin(), values.end());
      std::sort(sorted.begin(), sorted.end(), std::greater<>());
      const std::size_t k = std::min(policy.k, sorted.size());
      return std::accumulate(sorted.begin(),
                             sorted.begin() + static_cast<std::ptrdiff_t>(k), 0.0) /
             static_cast<double>(k);
    }
    case Kind::kMaxJitter: {
      if (!(policy.epsilon > 0.0)) {
        throw std::invalid_argument("max_jitter needs epsilon > 0");
      }
      std::seed_seq seq{static_cast<std::uint32_t>(policy.seed),
                        static_cast<std::uint32_t>(policy.seed >> 32),
                        static_cast<std::uint32_t>(stream),
                        static_cast<std::uint32_t>(stream >> 32)};
      std::mt19937_64 engine(seq);
      // 53 random mantissa bits: a platform-independent draw from [0, 1).
      const double unit = static_cast<double>(engine() >> 11) * 0x1.0p-53;
      return *std::max_element(values.begin(), values.end()) +
             unit * policy.epsilon;
    }
  }
  return 0.0;
}

std::vector<double> candidate_scores(std::string_view reference,
                                     std::string_view hypothesis, Metric metric,
                                     const AugmentationMode& raw_mode,
                                     const ParaphraseProvider& provider,
                                     const NormalizationConfig& config) {
  const AugmentationMode mode = AugmentationMode::make(raw_mode.kind, raw_mode.n);

  std::vector<std::string> refs{std::string(reference)};
  std::vector<std::string> hyps{std::string(hypothesis)};
  if (mode.kind != Mode::kBase) {
    for (auto& v : provider.paraphrases(reference, mode.n).variants) {
      refs.push_back(std::move(v));
    }
  }
  if (mode.kind == Mode::kParaBoth) {
    for (auto& v : provider.paraphrases(hypothesis, mode.n).variants) {
      hyps.push_back(std::move(v));
    }
  }

  std::vector<double> scores;
  if (metric == Metric::kBleu) {
    for (const auto& h : hyps) {
      scores.push_back(sentence_bleu(h, refs, config).score);
    }
    return scores;
  }
  const auto rate = metric == Metric::kWer ? wer : cer;
  for (const auto& h : hyps) {
    for (const auto& r : refs) scores.push_back(to_accuracy(rate(r, h, config)));
  }
  return scores;
}

MetricScore score_sample(const Sample& sample, Metric metric,
                         const AugmentationMode& mode,
                         const ParaphraseProvider& provider,
                         const AggregationPolicy& policy,
                         const NormalizationConfig& config) {
  const std::vector<double> scores = candidate_scores(
      sample.reference, sample.hypothesis, metric, mode, provider, config);
  MetricScore out;
  out.value = aggregate(scores, policy, fnv1a(sample.id));
  out.metric = metric;
  out.mode = AugmentationMode::make(mode.kind, mode.n);
  out.aggregation = policy;
  out.candidate_count = scores.size();
  return out;
}

}  // namespace parascore
