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

// Text normalization and tokenization shared by every metric.
//
// All strings are UTF-8. Case mapping and the punctuation/whitespace
// classes follow the Unicode character database (through ICU), so "Ü"
// lowercases to "ü" and every general category P* character counts as
// punctuation. Malformed UTF-8 bytes decode to U+FFFD.

#ifndef PARASCORE_TEXTNORM_HPP_
#define PARASCORE_TEXTNORM_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace parascore {

struct NormalizationConfig {
  bool lowercase = true;
  bool strip_punctuation = true;
  bool collapse_whitespace = true;
};

/// Ordered list of units a metric operates on: words for WER/BLEU,
/// Unicode scalar values for CER.
using TokenSequence = std::vector<std::string>;

/// Punctuation is deleted outright (not replaced by a space), and whitespace
/// collapsing runs afterwards. Letters and digits are never removed.
std::string normalize(std::string_view text,
                      const NormalizationConfig& config = {});

/// Splits on runs of Unicode whitespace.
TokenSequence word_tokens(std::string_view text);

/// One token per scalar value; spaces are tokens too.
TokenSequence char_tokens(std::string_view text);

/// Inverse of word_tokens for whitespace-free tokens.
std::string join_tokens(const TokenSequence& tokens);

/// Number of Unicode scalar values in `text`.
std::size_t codepoint_length(std::string_view text);

}  // namespace parascore

#endif  // PARASCORE_TEXTNORM_HPP_
