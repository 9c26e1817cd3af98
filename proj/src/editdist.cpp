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

#include "parascore/editdist.hpp"

#include "parascore/error.hpp"

namespace parascore {
namespace {

template <typename Tokenizer>
ErrorRate error_rate(std::string_view reference, std::string_view hypothesis,
                     const NormalizationConfig& config, Tokenizer tokenize,
                     const char* unit) {
  const TokenSequence ref = tokenize(normalize(reference, config));
  if (ref.empty()) {
    throw Error(ErrorCode::kEmptyReference,
                std::string("reference has no ") + unit + " after normalization");
  }
  const TokenSequence hyp = tokenize(normalize(hypothesis, config));
  return ErrorRate{levenshtein(ref, hyp), ref.size()};
}

}  // namespace

ErrorRate wer(std::string_view reference, std::string_view hypothesis,
              const NormalizationConfig& config) {
  return error_rate(reference, hypothesis, config, word_tokens, "words");
}

ErrorRate cer(std::string_view reference, std::string_view hypothesis,
              const NormalizationConfig& config) {
  return error_rate(reference, hypothesis, config, char_tokens, "characters");
}

}  // namespace parascore
