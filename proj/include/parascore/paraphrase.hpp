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

// Paraphrase providers.
//
// Three sources of paraphrases sit behind one interface:
//  - IdentityProvider never produces a variant;
//  - ParaphraseCache serves externally generated paraphrases read from a
//    JSON-lines file;
//  - BeamParaphraseProvider decodes paraphrases itself with a beam search
//    that subtracts an n-gram overlap penalty from the scorer's
//    log-probabilities, pushing the output away from the input wording.

#ifndef PARASCORE_PARAPHRASE_HPP_
#define PARASCORE_PARAPHRASE_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "parascore/bleu.hpp"
#include "parascore/textnorm.hpp"

namespace parascore {

/// An original sentence plus distinct variants, best first. No variant
/// equals the original.
struct ParaphraseSet {
  std::string original;
  std::vector<std::string> variants;
};

/// Builds a ParaphraseSet from raw candidates: drops duplicates and copies
/// of the original (first occurrence wins) and keeps at most `limit`.
ParaphraseSet make_paraphrase_set(std::string original,
                                  std::span<const std::string> candidates,
                                  std::size_t limit);

class ParaphraseProvider {
 public:
  virtual ~ParaphraseProvider() = default;

  /// Up to `n` variants of `text`. Must be safe to call concurrently.
  virtual ParaphraseSet paraphrases(std::string_view text,
                                    std::size_t n) const = 0;
};

class IdentityProvider final : public ParaphraseProvider {
 public:
  ParaphraseSet paraphrases(std::string_view text,
                            std::size_t n) const override;
};

/// Precomputed paraphrases keyed by the exact raw sentence.
///
/// File format: one JSON object per line,
///   {"text": "...", "paraphrases": ["...", ...]}
/// UTF-8, best paraphrase first. Blank lines are ignored.
class ParaphraseCache final : public ParaphraseProvider {
 public:
  ParaphraseCache() = default;

  static ParaphraseCache load(const std::filesystem::path& path);
  static ParaphraseCache parse(std::istream& in);

  /// With fallback enabled an unknown key yields no variants instead of
  /// Error(kMissingEntry).
  void set_fallback(bool enabled) { fallback_ = enabled; }
  bool fallback() const { return fallback_; }

  /// Replaces any existing entry for `text`.
  void insert(std::string text, std::span<const std::string> paraphrases);

  bool contains(std::string_view text) const;
  std::size_t size() const { return entries_.size(); }

  /// First `n` cached variants of `text`.
  ParaphraseSet paraphrases(std::string_view text,
                            std::size_t n) const override;

  /// Writes all entries in key order.
  void write(std::ostream& out) const;

 private:
  std::map<std::string, std::vector<std::string>, std::less<>> entries_;
  bool fallback_ = false;
};

/// One cache line, terminated by '\n'.
void write_cache_line(std::ostream& out, const ParaphraseSet& set);

struct NgramPenaltyConfig {
  double alpha = 0.003;
  double beta = 4.0;
  int max_order = 4;
  std::size_t beam_width = 1;
  /// Maximum number of generated tokens; 0 means 2·|input| + 5.
  std::size_t max_length = 0;
};

struct ScoredToken {
  std::string token;
  double log_prob = 0.0;
};

/// Conditional next-token scorer driving the beam search. Implementations
/// must be deterministic and thread-safe.
class SequenceScorer {
 public:
  virtual ~SequenceScorer() = default;

  /// Candidate continuations of `prefix` given `input`, each with a finite
  /// log-probability. Tokens not listed have probability zero. The end
  /// token appears here when the sequence may stop.
  virtual std::vector<ScoredToken> expand(const TokenSequence& input,
                                          const TokenSequence& prefix) const = 0;

  virtual std::string_view end_token() const = 0;
};

/// n-gram profiles of `input` for orders 1..max_order (index k holds order
/// k+1).
std::vector<NgramProfile> input_ngram_profiles(const TokenSequence& input,
                                               int max_order);

/// alpha·beta^(m−1), where m is the largest order ≤ max_order such that the
/// last m−1 prefix tokens followed by `candidate` occur in the input; 0 when
/// even the unigram is absent.
double overlap_penalty(std::string_view candidate, const TokenSequence& prefix,
                       std::span<const NgramProfile> input_ngrams,
                       const NgramPenaltyConfig& config);

struct BeamHypothesis {
  TokenSequence tokens;  // end token excluded
  double score = 0.0;    // Σ log_prob − penalty
};

/// Finished hypotheses of a penalized beam search, best first, ties broken
/// lexicographically on the tokens. The input is NOT filtered here.
///
/// The beam shrinks as hypotheses finish: each step keeps the top
/// (beam_width − finished) expansions of all live prefixes. Throws
/// Error(kNoTermination) if nothing finishes within the length limit.
std::vector<BeamHypothesis> beam_search(const TokenSequence& input,
                                        const SequenceScorer& scorer,
                                        const NgramPenaltyConfig& config);

/// beam_search over the whitespace tokens of `input`, with the input itself
/// removed from the variants.
ParaphraseSet beam_generate(std::string_view input, const SequenceScorer& scorer,
                            const NgramPenaltyConfig& config);

/// Paraphrases from beam_generate with a fixed beam width; a request for n
/// variants returns the first n of that beam (the width is raised to n when
/// n is larger), so variant lists for growing n are nested.
class BeamParaphraseProvider final : public ParaphraseProvider {
 public:
  BeamParaphraseProvider(std::shared_ptr<const SequenceScorer> scorer,
                         NgramPenaltyConfig config);

  ParaphraseSet paraphrases(std::string_view text,
                            std::size_t n) const override;

  const NgramPenaltyConfig& config() const { return config_; }

 private:
  std::shared_ptr<const SequenceScorer> scorer_;
  NgramPenaltyConfig config_;
};

}  // namespace parascore

#endif  // PARASCORE_PARAPHRASE_HPP_
