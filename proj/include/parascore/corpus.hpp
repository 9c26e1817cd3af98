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

// Rated evaluation datasets.
//
// A dataset is a JSON-lines file, one sample per line, in one of two
// rating schemes:
//
//   {"id": "...", "reference": "...", "hypothesis": "...", "scheme": "hsr",
//    "semantic": 0-3, "grammar_ok": bool, "punctuation_ok": bool,
//    "capitalization_ok": bool}
//   {"id": "...", "reference": "...", "hypothesis": "...", "scheme": "otr",
//    "stars": 1-5}
//
// Only the fields of the declared scheme may be present.

#ifndef PARASCORE_CORPUS_HPP_
#define PARASCORE_CORPUS_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace parascore {

/// Sentence-level annotation: semantic similarity 0..3 plus three binary
/// correctness flags for the hypothesis.
struct SemanticRating {
  int semantic = 0;
  bool grammar_ok = true;
  bool punctuation_ok = true;
  bool capitalization_ok = true;

  friend bool operator==(const SemanticRating&, const SemanticRating&) = default;
};

/// User feedback, 1..5 stars.
struct StarRating {
  int stars = 1;

  friend bool operator==(const StarRating&, const StarRating&) = default;
};

using HumanRating = std::variant<SemanticRating, StarRating>;

struct Sample {
  std::string id;
  std::string reference;
  std::string hypothesis;
  HumanRating rating;
  /// 1-based line in the source file; 0 when not loaded from a file. Not
  /// part of equality.
  std::size_t source_line = 0;

  friend bool operator==(const Sample& a, const Sample& b) {
    return a.id == b.id && a.reference == b.reference &&
           a.hypothesis == b.hypothesis && a.rating == b.rating;
  }
};

/// Throws Error with kParseError, kSchemaError or kDuplicateId; the
/// offending line number is attached.
std::vector<Sample> parse_dataset(std::istream& in);
std::vector<Sample> load_dataset(const std::filesystem::path& path);

void write_dataset(std::ostream& out, std::span<const Sample> samples);

/// Keeps samples whose raw reference and hypothesis differ (character
/// Levenshtein distance > 0). Order is preserved.
std::vector<Sample> filter_distinct(std::span<const Sample> samples);

/// Value correlated against metrics: the semantic rating for HSR, the star
/// count for OTR.
double human_value(const HumanRating& rating);

}  // namespace parascore

#endif  // PARASCORE_CORPUS_HPP_
