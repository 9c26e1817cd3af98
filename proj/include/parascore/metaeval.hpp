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

// Segment-level correlation between metric scores and human ratings.
//
// The Kendall-like coefficient is the WMT18 variant:
//
//   tau = (|Concordant| - |Discordant|) / (|Concordant| + |Discordant|)
//
// over all unordered sample pairs. Pairs with equal human ratings are
// excluded; pairs with equal metric values (and distinct human ratings)
// count as discordant. Both comparisons use exact equality.

#ifndef PARASCORE_METAEVAL_HPP_
#define PARASCORE_METAEVAL_HPP_

#include <cstddef>
#include <span>
#include <string>

namespace parascore {

struct ScoredSample {
  std::string id;
  double human = 0.0;
  double metric = 0.0;
};

enum class PairClass { kConcordant, kDiscordant, kExcluded };

PairClass classify_pair(const ScoredSample& s1, const ScoredSample& s2);

struct TauResult {
  double tau = 0.0;
  std::size_t concordant = 0;
  std::size_t discordant = 0;
  std::size_t excluded_pairs = 0;
};

/// O(N²) pair enumeration. Throws Error(kTooFewSamples) for fewer than two
/// samples and Error(kAllPairsExcluded) when every pair is a human tie.
TauResult kendall_tau_like(std::span<const ScoredSample> samples);

/// Pearson product-moment correlation. Throws Error(kTooFewSamples) or
/// Error(kZeroVariance) if either coordinate is constant.
double pearson(std::span<const ScoredSample> samples);

struct CorrelationReport {
  double tau = 0.0;
  double pearson_r = 0.0;
  std::size_t concordant = 0;
  std::size_t discordant = 0;
  std::size_t excluded_pairs = 0;
  std::size_t sample_count = 0;
};

/// Both coefficients; any error from either propagates.
CorrelationReport correlate(std::span<const ScoredSample> samples);

}  // namespace parascore

#endif  // PARASCORE_METAEVAL_HPP_
