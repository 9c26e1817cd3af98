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

#include "parascore/paraphrase.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "parascore/error.hpp"

namespace parascore {

using json = nlohmann::json;

ParaphraseSet make_paraphrase_set(std::string original,
                                  std::span<const std::string> candidates,
                                  std::size_t limit) {
  ParaphraseSet set;
  set.original = std::move(original);
  std::set<std::string_view> seen{set.original};
  for (const auto& candidate : candidates) {
    if (set.variants.size() >= limit) break;
    if (!seen.insert(candidate).second) continue;
    set.variants.push_back(candidate);
  }
  return set;
}

ParaphraseSet IdentityProvider::paraphrases(std::string_view text,
                                            std::size_t) const {
  return ParaphraseSet{std::string(text), {}};
}

// ---------------------------------------------------------------------------
// ParaphraseCache

ParaphraseCache ParaphraseCache::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError,
                "cannot open paraphrase cache '" + path.string() + "'");
  }
  return parse(in);
}

ParaphraseCache ParaphraseCache::parse(std::istream& in) {
  ParaphraseCache cache;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json object;
    try {
      object = json::parse(line);
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::kParseError, e.what(), line_no);
    }
    if (!object.is_object()) {
      throw Error(ErrorCode::kParseError, "expected a JSON object", line_no);
    }
    const auto text = object.find("text");
    if (text == object.end() || !text->is_string()) {
      throw Error(ErrorCode::kSchemaError, "missing string", line_no, "text");
    }
    const auto list = object.find("paraphrases");
    if (list == object.end() || !list->is_array()) {
      throw Error(ErrorCode::kSchemaError, "missing array", line_no,
                  "paraphrases");
    }
    std::vector<std::string> variants;
    for (const auto& item : *list) {
      if (!item.is_string()) {
        throw Error(ErrorCode::kSchemaError, "paraphrase is not a string",
                    line_no, "paraphrases");
      }
      variants.push_back(item.get<std::string>());
    }
    auto key = text->get<std::string>();
    if (cache.contains(key)) {
      throw Error(ErrorCode::kDuplicateId, "duplicate cache key '" + key + "'",
                  line_no, "text");
    }
    cache.insert(std::move(key), variants);
  }
  return cache;
}

void ParaphraseCache::insert(std::string text,
                             std::span<const std::string> paraphrases) {
  ParaphraseSet set =
      make_paraphrase_set(text, paraphrases, paraphrases.size());
  entries_.insert_or_assign(std::move(text), std::move(set.variants));
}

bool ParaphraseCache::contains(std::string_view text) const {
  return entries_.find(text) != entries_.end();
}

ParaphraseSet ParaphraseCache::paraphrases(std::string_view text,
                                           std::size_t n) const {
  ParaphraseSet set{std::string(text), {}};
  const auto it = entries_.find(text);
  if (it == entries_.end()) {
    if (fallback_ || n == 0) return set;
    throw Error(ErrorCode::kMissingEntry,
                "no cached paraphrases for '" + std::string(text) + "'");
  }
  const auto count = std::min(n, it->second.size());
  set.variants.assign(it->second.begin(),
                      it->second.begin() + static_cast<std::ptrdiff_t>(count));
  return set;
}

void ParaphraseCache::write(std::ostream& out) const {
  for (const auto& [text, variants] : entries_) {
    write_cache_line(out, ParaphraseSet{text, variants});
  }
}

void write_cache_line(std::ostream& out, const ParaphraseSet& set) {
  nlohmann::ordered_json object;
  object["text"] = set.original;
  object["paraphrases"] = set.variants;
  out << object.dump() << '\n';
}

// ---------------------------------------------------------------------------
// Penalized beam search

std::vector<NgramProfile> input_ngram_profiles(const TokenSequence& input,
                                               int max_order) {
  std::vector<NgramProfile> profiles;
  for (int order = 1; order <= max_order; ++order) {
    profiles.push_back(ngram_profile(input, order));
  }
  return profiles;
}

double overlap_penalty(std::string_view candidate, const TokenSequence& prefix,
                       std::span<const NgramProfile> input_ngrams,
                       const NgramPenaltyConfig& config) {
  const int max_order =
      std::min(config.max_order, static_cast<int>(input_ngrams.size()));
  int matched = 0;
  TokenSequence ngram{std::string(candidate)};
  for (int order = 1; order <= max_order; ++order) {
    if (order > 1) {
      const auto back = static_cast<std::size_t>(order - 1);
      if (prefix.size() < back) break;
      ngram.insert(ngram.begin(), prefix[prefix.size() - back]);
    }
    if (!input_ngrams[static_cast<std::size_t>(order - 1)].contains(ngram)) {
      // Higher orders contain this n-gram as a suffix, so they cannot match.
      break;
    }
    matched = order;
  }
  if (matched == 0) return 0.0;
  return config.alpha * std::pow(config.beta, matched - 1);
}

namespace {

bool better(const BeamHypothesis& a, const BeamHypothesis& b) {
  if (a.score != b.score) return a.score > b.score;
  return a.tokens < b.tokens;
}

}  // namespace

std::vector<BeamHypothesis> beam_search(const TokenSequence& input,
                                        const SequenceScorer& scorer,
                                        const NgramPenaltyConfig& config) {
  if (config.beam_width == 0) {
    throw std::invalid_argument("beam width must be positive");
  }
  const auto profiles = input_ngram_profiles(input, config.max_order);
  const std::size_t max_length =
      config.max_length != 0 ? config.max_length : 2 * input.size() + 5;
  const std::string_view end = scorer.end_token();

  std::vector<BeamHypothesis> live{BeamHypothesis{}};
  std::vector<BeamHypothesis> finished;
  struct Expansion {
    BeamHypothesis hypothesis;
    bool ends = false;
  };

  for (std::size_t step = 0; step <= max_length && !live.empty() &&
                             finished.size() < config.beam_width;
       ++step) {
    std::vector<Expansion> expansions;
    for (const auto& beam : live) {
      for (const auto& [token, log_prob] : scorer.expand(input, beam.tokens)) {
        Expansion next{beam, token == end};
        if (next.ends) {
          next.hypothesis.score += log_prob;
        } else {
          if (step == max_length) continue;
          next.hypothesis.score +=
              log_prob - overlap_penalty(token, beam.tokens, profiles, config);
          next.hypothesis.tokens.push_back(token);
        }
        expansions.push_back(std::move(next));
      }
    }
    const std::size_t keep =
        std::min(config.beam_width - finished.size(), expansions.size());
    std::partial_sort(expansions.begin(),
                      expansions.begin() + static_cast<std::ptrdiff_t>(keep),
                      expansions.end(), [](const auto& a, const auto& b) {
                        if (a.hypothesis.score != b.hypothesis.score) {
                          return a.hypothesis.score > b.hypothesis.score;
                        }
                        if (a.hypothesis.tokens != b.hypothesis.tokens) {
                          return a.hypothesis.tokens < b.hypothesis.tokens;
                        }
                        return a.ends && !b.ends;
                      });
    live.clear();
    for (std::size_t i = 0; i < keep; ++i) {
      auto& expansion = expansions[i];
      (expansion.ends ? finished : live).push_back(std::move(expansion.hypothesis));
    }
  }

  if (finished.empty()) {
    throw Error(ErrorCode::kNoTermination,
                "beam search did not finish within " +
                    std::to_string(max_length) + " tokens");
  }
  std::sort(finished.begin(), finished.end(), better);
  return finished;
}

ParaphraseSet beam_generate(std::string_view input, const SequenceScorer& scorer,
                            const NgramPenaltyConfig& config) {
  const TokenSequence tokens = word_tokens(input);
  std::vector<std::string> candidates;
  for (const auto& hypothesis : beam_search(tokens, scorer, config)) {
    candidates.push_back(join_tokens(hypothesis.tokens));
  }
  ParaphraseSet set =
      make_paraphrase_set(join_tokens(tokens), candidates, candidates.size());
  set.original = std::string(input);
  return set;
}

BeamParaphraseProvider::BeamParaphraseProvider(
    std::shared_ptr<const SequenceScorer> scorer, NgramPenaltyConfig config)
    : scorer_(std::move(scorer)), config_(config) {
  if (!scorer_) throw std::invalid_argument("scorer must not be null");
}

ParaphraseSet BeamParaphraseProvider::paraphrases(std::string_view text,
                                                  std::size_t n) const {
  if (n == 0) return ParaphraseSet{std::string(text), {}};
  NgramPenaltyConfig config = config_;
  config.beam_width = std::max(config.beam_width, n);
  ParaphraseSet set = beam_generate(text, *scorer_, config);
  if (set.variants.size() > n) set.variants.resize(n);
  return set;
}

}  // namespace parascore
