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

// Score output files: one JSON object per scored (sample, metric),
//
//   {"id": "...", "metric": "wer|cer|bleu", "mode": "base|para_ref|para_both",
//    "n": int, "aggregation": "max|min|mean|top_k_mean|max_jitter",
//    "value": real, "candidate_count": int, "human": real}

#ifndef PARASCORE_SCORES_HPP_
#define PARASCORE_SCORES_HPP_

#include <compare>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "parascore/augment.hpp"

namespace parascore {

/// Identifies one scoring run; also the correlation grouping key.
/// Written as "metric/mode/n/aggregation", e.g. "bleu/para_both/6/max".
struct RunKey {
  Metric metric = Metric::kWer;
  Mode mode = Mode::kBase;
  std::size_t n = 0;
  AggregationPolicy::Kind aggregation = AggregationPolicy::Kind::kMax;

  std::string name() const;
  static std::optional<RunKey> parse(std::string_view text);

  friend auto operator<=>(const RunKey&, const RunKey&) = default;
};

struct ScoreRecord {
  std::string id;
  RunKey run;
  double value = 0.0;
  std::size_t candidate_count = 0;
  double human = 0.0;

  friend bool operator==(const ScoreRecord&, const ScoreRecord&) = default;
};

ScoreRecord make_score_record(const Sample& sample, const MetricScore& score);

void write_score_line(std::ostream& out, const ScoreRecord& record);

/// Throws Error(kParseError | kSchemaError) with the line number.
std::vector<ScoreRecord> parse_scores(std::istream& in);
std::vector<ScoreRecord> load_scores(const std::filesystem::path& path);

}  // namespace parascore

#endif  // PARASCORE_SCORES_HPP_
