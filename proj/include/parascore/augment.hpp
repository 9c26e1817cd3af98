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

// Paraphrase-augmented scoring.
//
// With n paraphrases per sentence, R = [reference] + variants and
// H = [hypothesis] + variants (H = [hypothesis] when only the reference is
// augmented). WER and CER score every pair in H × R; BLEU scores each
// h ∈ H against all of R at once. The resulting candidate list, always in
// higher-is-better orientation, is then collapsed by an AggregationPolicy.

#ifndef PARASCORE_AUGMENT_HPP_
#define PARASCORE_AUGMENT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "parascore/corpus.hpp"
#include "parascore/paraphrase.hpp"
#include "parascore/textnorm.hpp"

namespace parascore {

enum class Metric { kWer, kCer, kBleu };
enum class Mode { kBase, kParaRef, kParaBoth };

std::string_view metric_name(Metric metric);    // "wer" | "cer" | "bleu"
std::string_view mode_name(Mode mode);          // "base" | "para_ref" | "para_both"
std::optional<Metric> parse_metric(std::string_view name);
std::optional<Mode> parse_mode(std::string_view name);

/// Mode plus paraphrase count. make() folds n = 0 into Base and forces
/// n = 0 for Base, so Base always carries n = 0.
struct AugmentationMode {
  Mode kind = Mode::kBase;
  std::size_t n = 0;

  static AugmentationMode make(Mode kind, std::size_t n) {
    if (kind == Mode::kBase || n == 0) return {Mode::kBase, 0};
    return {kind, n};
  }

  friend bool operator==(const AugmentationMode&, const AugmentationMode&) = default;
};

struct AggregationPolicy {
  enum class Kind { kMax, kMin, kMean, kTopKMean, kMaxJitter };

  Kind kind = Kind::kMax;
  std::size_t k = 1;         // kTopKMean
  double epsilon = 0.0;      // kMaxJitter, > 0
  std::uint64_t seed = 0;    // kMaxJitter

  static AggregationPolicy max() { return {}; }
  static AggregationPolicy min() { return {Kind::kMin}; }
  static AggregationPolicy mean() { return {Kind::kMean}; }
  static AggregationPolicy top_k_mean(std::size_t k) { return {Kind::kTopKMean, k}; }
  static AggregationPolicy max_jitter(double epsilon, std::uint64_t seed) {
    return {Kind::kMaxJitter, 1, epsilon, seed};
  }

  friend bool operator==(const AggregationPolicy&, const AggregationPolicy&) = default;
};

/// "max" | "min" | "mean" | "top_k_mean" | "max_jitter"
std::string_view aggregation_name(AggregationPolicy::Kind kind);
std::optional<AggregationPolicy::Kind> parse_aggregation(std::string_view name);

/// Collapses candidate scores. TopKMean clips k to the list size. MaxJitter
/// adds a uniform draw from [0, epsilon) seeded by (policy.seed, stream).
/// Throws Error(kEmptyInput) for an empty list and std::invalid_argument
/// for k = 0 or a non-positive epsilon.
double aggregate(std::span<const double> values, const AggregationPolicy& policy,
                 std::uint64_t stream = 0);

/// Candidate scores of one reference/hypothesis pair. WER and CER values
/// are accuracies (1 − error rate). Metric errors propagate.
std::vector<double> candidate_scores(std::string_view reference,
                                     std::string_view hypothesis, Metric metric,
                                     const AugmentationMode& mode,
                                     const ParaphraseProvider& provider,
                                     const NormalizationConfig& config = {});

struct MetricScore {
  double value = 0.0;
  Metric metric = Metric::kWer;
  AugmentationMode mode;
  AggregationPolicy aggregation;
  std::size_t candidate_count = 0;
};

MetricScore score_sample(const Sample& sample, Metric metric,
                         const AugmentationMode& mode,
                         const ParaphraseProvider& provider,
                         const AggregationPolicy& policy,
                         const NormalizationConfig& config = {});

/// 64-bit FNV-1a; used to derive per-sample jitter streams from ids.
std::uint64_t fnv1a(std::string_view bytes);

}  // namespace parascore

#endif  // PARASCORE_AUGMENT_HPP_
