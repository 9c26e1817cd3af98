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

// Sentence-level BLEU with exponential smoothing and multiple references.

#ifndef PARASCORE_BLEU_HPP_
#define PARASCORE_BLEU_HPP_

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "parascore/textnorm.hpp"

namespace parascore {

inline constexpr int kBleuMaxOrder = 4;

struct NgramProfile {
  int order = 1;
  std::map<TokenSequence, std::size_t> counts;

  std::size_t count(const TokenSequence& ngram) const {
    const auto it = counts.find(ngram);
    return it == counts.end() ? 0 : it->second;
  }
  bool contains(const TokenSequence& ngram) const {
    return counts.find(ngram) != counts.end();
  }
};

/// Counts every contiguous n-gram of exactly `order` tokens. Empty when the
/// sequence is shorter than `order`. Throws std::invalid_argument if
/// order < 1.
NgramProfile ngram_profile(const TokenSequence& tokens, int order);

struct BleuBreakdown {
  /// p_1..p_4. Orders with no hypothesis n-grams report 1 and are left out
  /// of the geometric mean.
  std::array<double, kBleuMaxOrder> precisions{};
  std::array<std::size_t, kBleuMaxOrder> matched{};
  std::array<std::size_t, kBleuMaxOrder> totals{};
  int orders_used = 0;
  double brevity_penalty = 1.0;
  double score = 0.0;
  std::size_t hyp_len = 0;
  std::size_t eff_ref_len = 0;
};

/// BLEU of one hypothesis against one or more references.
///
/// Both sides are normalized with `config` and split on whitespace. Clipped
/// counts take, per n-gram type, the maximum count over references. A zero
/// match count at order n is smoothed to 1/(s·total_n), where s starts at 1
/// and doubles at every zero-match order. The effective reference length is
/// the reference length closest to the hypothesis length, shorter on ties.
///
/// Throws Error(kEmptyHypothesis) if the normalized hypothesis has no
/// tokens and Error(kEmptyInput) if `references` is empty.
BleuBreakdown sentence_bleu(std::string_view hypothesis,
                            std::span<const std::string> references,
                            const NormalizationConfig& config = {});

inline BleuBreakdown sentence_bleu(std::string_view hypothesis,
                                   const std::string& reference,
                                   const NormalizationConfig& config = {}) {
  return sentence_bleu(hypothesis, std::span<const std::string>(&reference, 1),
                       config);
}

}  // namespace parascore

#endif  // PARASCORE_BLEU_HPP_
