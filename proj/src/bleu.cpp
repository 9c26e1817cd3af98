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

#include "parascore/bleu.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "parascore/error.hpp"

namespace parascore {

NgramProfile ngram_profile(const TokenSequence& tokens, int order) {
  if (order < 1) throw std::invalid_argument("n-gram order must be >= 1");
  NgramProfile profile;
  profile.order = order;
  const auto n = static_cast<std::size_t>(order);
  if (tokens.size() < n) return profile;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    ++profile.counts[TokenSequence(tokens.begin() + i, tokens.begin() + i + n)];
  }
  return profile;
}

namespace {

std::size_t closest_reference_length(std::size_t hyp_len,
                                     const std::vector<std::size_t>& lengths) {
  std::size_t best = lengths.front();
  for (std::size_t len : lengths) {
    const auto diff = [&](std::size_t x) {
      return x > hyp_len ? x - hyp_len : hyp_len - x;
    };
    if (diff(len) < diff(best) || (diff(len) == diff(best) && len < best)) {
      best = len;
    }
  }
  return best;
}

}  // namespace

BleuBreakdown sentence_bleu(std::string_view hypothesis,
                            std::span<const std::string> references,
                            const NormalizationConfig& config) {
  if (references.empty()) {
    throw Error(ErrorCode::kEmptyInput, "BLEU needs at least one reference");
  }
  const TokenSequence hyp = word_tokens(normalize(hypothesis, config));
  if (hyp.empty()) {
    throw Error(ErrorCode::kEmptyHypothesis,
                "hypothesis has no words after normalization");
  }

  std::vector<TokenSequence> refs;
  std::vector<std::size_t> ref_lengths;
  refs.reserve(references.size());
  for (const auto& reference : references) {
    refs.push_back(word_tokens(normalize(reference, config)));
    ref_lengths.push_back(refs.back().size());
  }

  BleuBreakdown out;
  out.hyp_len = hyp.size();
  out.eff_ref_len = closest_reference_length(hyp.size(), ref_lengths);

  double smoothing = 1.0;
  double log_sum = 0.0;
  for (int order = 1; order <= kBleuMaxOrder; ++order) {
    const auto idx = static_cast<std::size_t>(order - 1);
    const NgramProfile hyp_profile = ngram_profile(hyp, order);
    std::vector<NgramProfile> ref_profiles;
    ref_profiles.reserve(refs.size());
    for (const auto& ref : refs) ref_profiles.push_back(ngram_profile(ref, order));

    std::size_t matched = 0;
    for (const auto& [ngram, count] : hyp_profile.counts) {
      std::size_t max_ref = 0;
      for (const auto& profile : ref_profiles) {
        max_ref = std::max(max_ref, profile.count(ngram));
      }
      matched += std::min(count, max_ref);
    }
    const std::size_t total =
        hyp.size() >= static_cast<std::size_t>(order) ? hyp.size() - idx : 0;
    out.matched[idx] = matched;
    out.totals[idx] = total;

    if (total == 0) {
      out.precisions[idx] = 1.0;
      continue;
    }
    if (matched == 0) {
      smoothing *= 2.0;
      out.precisions[idx] = 1.0 / (smoothing * static_cast<double>(total));
    } else {
      out.precisions[idx] =
          static_cast<double>(matched) / static_cast<double>(total);
    }
    log_sum += std::log(out.precisions[idx]);
    ++out.orders_used;
  }

  out.brevity_penalty =
      out.hyp_len >= out.eff_ref_len
          ? 1.0
          : std::exp(1.0 - static_cast<double>(out.eff_ref_len) /
                               static_cast<double>(out.hyp_len));
  out.score = out.brevity_penalty * std::exp(log_sum / out.orders_used);
  return out;
}

}  // namespace parascore
