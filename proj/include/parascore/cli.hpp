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

// The `parascore` command line: score, correlate, sweep, report, paraphrase.
//
// Each command is also callable as a library function so tests can drive
// it without spawning processes. Output files are written to a temporary
// sibling and renamed into place, so a failed run never leaves a partial
// file behind.

#ifndef PARASCORE_CLI_HPP_
#define PARASCORE_CLI_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "parascore/augment.hpp"
#include "parascore/corpus.hpp"
#include "parascore/metaeval.hpp"
#include "parascore/paraphrase.hpp"
#include "parascore/scores.hpp"

namespace parascore::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Beam width of the builtin provider unless more paraphrases are asked
/// for. Covers the 1..16 paraphrase range explored in practice.
inline constexpr std::size_t kBuiltinBeamWidth = 16;

enum class ProviderKind { kIdentity, kBuiltin, kCache };

struct ProviderSpec {
  ProviderKind kind = ProviderKind::kIdentity;
  std::filesystem::path cache;
};

struct RunConfig {
  std::filesystem::path dataset;
  std::vector<Metric> metrics{Metric::kWer, Metric::kCer, Metric::kBleu};
  Mode mode = Mode::kBase;
  std::size_t n = 0;
  ProviderSpec provider;
  AggregationPolicy aggregation;
  NormalizationConfig normalization;
  std::optional<std::filesystem::path> out;
  std::uint64_t seed = 0;
  /// Worker threads for per-sample scoring; 0 picks the hardware count.
  std::size_t jobs = 0;
};

/// Provider able to serve up to `max_n` variants per sentence.
std::unique_ptr<ParaphraseProvider> make_provider(const ProviderSpec& spec,
                                                  std::size_t max_n);

/// Scores every sample for every metric in `config.metrics`. Records are
/// ordered by sample id, then by metric order in the config; the result
/// does not depend on `config.jobs`. The first failing sample (in input
/// order) determines the error thrown.
std::vector<ScoreRecord> score_samples(std::span<const Sample> samples,
                                       const RunConfig& config,
                                       const ParaphraseProvider& provider);

/// One TSV row per run key: metric, mode, n, aggregation, samples, tau, r,
/// concordant, discordant, excluded, status. Errors of a group show up in
/// its status column instead of aborting.
std::string correlation_header();
std::string correlation_rows(std::span<const ScoreRecord> records);

std::string rating_histogram(std::span<const ScoreRecord> records,
                             std::span<const RunKey> runs);
/// Per rating value and sample id, the values of each named run side by
/// side. Throws Error(kUnknownRun) for a run absent from `records`.
std::string score_distributions(std::span<const ScoreRecord> records,
                                std::span<const RunKey> runs);

/// Renders the records as score-file lines.
std::string render_scores(std::span<const ScoreRecord> records);

/// Loads, filters and scores the dataset; returns the score-file text.
std::string cmd_score(const RunConfig& config);

/// Correlation rows for n = 0..n_max, in the correlate row format.
std::string cmd_sweep(const RunConfig& config, std::size_t n_max);

/// Writes `content` to `path` through a temporary file and a rename.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

/// Full command-line entry point (args excludes the program name).
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace parascore::cli

#endif  // PARASCORE_CLI_HPP_
