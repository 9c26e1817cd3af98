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

#ifndef PARASCORE_EDITDIST_HPP_
#define PARASCORE_EDITDIST_HPP_

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <string_view>
#include <vector>

#include "parascore/textnorm.hpp"

namespace parascore {

/// Unit-cost Levenshtein distance (insert, delete, substitute; no
/// transpositions). Single-row dynamic programme, O(|a|·|b|) time and
/// O(|b|) memory.
template <typename T>
std::size_t levenshtein(std::span<const T> a, std::span<const T> b) {
  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diagonal = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t above = row[j];
      const std::size_t substitute = diagonal + (a[i - 1] == b[j - 1] ? 0 : 1);
      row[j] = std::min({substitute, above + 1, row[j - 1] + 1});
      diagonal = above;
    }
  }
  return row[b.size()];
}

inline std::size_t levenshtein(const TokenSequence& a, const TokenSequence& b) {
  return levenshtein(std::span<const std::string>(a),
                     std::span<const std::string>(b));
}

/// Edits per reference unit. The value may exceed 1 when the hypothesis is
/// much longer than the reference.
struct ErrorRate {
  std::size_t edits = 0;
  std::size_t reference_length = 1;

  double value() const {
    return static_cast<double>(edits) / static_cast<double>(reference_length);
  }
};

/// Word error rate over the normalized texts. Throws Error(kEmptyReference)
/// when the normalized reference has no words.
ErrorRate wer(std::string_view reference, std::string_view hypothesis,
              const NormalizationConfig& config = {});

/// Character error rate over the normalized texts, spaces included.
ErrorRate cer(std::string_view reference, std::string_view hypothesis,
              const NormalizationConfig& config = {});

/// 1 − rate, unclamped (a rate above 1 gives a negative accuracy).
inline double to_accuracy(double rate) { return 1.0 - rate; }
inline double to_accuracy(const ErrorRate& rate) { return 1.0 - rate.value(); }

}  // namespace parascore

#endif  // PARASCORE_EDITDIST_HPP_
