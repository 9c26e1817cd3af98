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

#include "parascore/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "parascore/error.hpp"
#include "parascore/toy_scorer.hpp"

namespace parascore::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_fixed(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6f", value);
  return buffer;
}

// Shortest text that reads back to the same double.
std::string format_exact(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<ScoreRecord> load_all_scores(const std::vector<std::string>& paths) {
  std::vector<ScoreRecord> records;
  for (const auto& path : paths) {
    auto part = load_scores(path);
    records.insert(records.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
  }
  return records;
}

}  // namespace

// ---------------------------------------------------------------------------
// Library surface

std::unique_ptr<ParaphraseProvider> make_provider(const ProviderSpec& spec,
                                                  std::size_t max_n) {
  switch (spec.kind) {
    case ProviderKind::kIdentity:
      return std::make_unique<IdentityProvider>();
    case ProviderKind::kBuiltin: {
      NgramPenaltyConfig config;
      config.beam_width = std::max(kBuiltinBeamWidth, max_n);
      return std::make_unique<BeamParaphraseProvider>(builtin_toy_scorer(), config);
    }
    case ProviderKind::kCache:
      return std::make_unique<ParaphraseCache>(ParaphraseCache::load(spec.cache));
  }
  return nullptr;
}

std::vector<ScoreRecord> score_samples(std::span<const Sample> samples,
                                       const RunConfig& config,
                                       const ParaphraseProvider& provider) {
  const AugmentationMode mode = AugmentationMode::make(config.mode, config.n);
  std::vector<std::vector<ScoreRecord>> results(samples.size());
  std::vector<std::exception_ptr> errors(samples.size());

  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < samples.size(); i = next++) {
      try {
        for (Metric metric : config.metrics) {
          const MetricScore score =
              score_sample(samples[i], metric, mode, provider,
                           config.aggregation, config.normalization);
          results[i].push_back(make_score_record(samples[i], score));
        }
      } catch (const Error& e) {
        const std::size_t line = samples[i].source_line;
        errors[i] = std::make_exception_ptr(
            Error(e.code(),
                  "sample '" + samples[i].id + "': " + e.message(),
                  line != 0 ? line : e.line(), e.field()));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  std::size_t jobs = config.jobs != 0 ? config.jobs : std::thread::hardware_concurrency();
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(samples.size(), 1));
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::jthread> workers;
    for (std::size_t t = 0; t < jobs; ++t) workers.emplace_back(work);
  }

  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }

  std::vector<std::size_t> order(samples.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return samples[a].id < samples[b].id;
  });
  std::vector<ScoreRecord> records;
  for (std::size_t i : order) {
    records.insert(records.end(), results[i].begin(), results[i].end());
  }
  return records;
}

std::string correlation_header() {
  return "metric\tmode\tn\taggregation\tsamples\ttau\tr\tconcordant\tdiscordant"
         "\texcluded\tstatus\n";
}

std::string correlation_rows(std::span<const ScoreRecord> records) {
  std::map<RunKey, std::vector<ScoredSample>> groups;
  std::map<RunKey, std::set<std::string>> seen;
  std::set<RunKey> duplicated;
  for (const auto& record : records) {
    if (!seen[record.run].insert(record.id).second) duplicated.insert(record.run);
    groups[record.run].push_back(ScoredSample{record.id, record.human, record.value});
  }

  std::string out;
  for (const auto& [key, samples] : groups) {
    std::vector<std::string> problems;
    std::optional<TauResult> tau;
    std::optional<double> r;
    if (duplicated.count(key) != 0) {
      problems.emplace_back(error_code_name(ErrorCode::kDuplicateId));
    } else {
      try {
        tau = kendall_tau_like(samples);
      } catch (const Error& e) {
        problems.emplace_back(error_code_name(e.code()));
      }
      try {
        r = pearson(samples);
      } catch (const Error& e) {
        const std::string name(error_code_name(e.code()));
        if (std::find(problems.begin(), problems.end(), name) == problems.end()) {
          problems.push_back(name);
        }
      }
    }
    std::string status = problems.empty() ? "ok" : "";
    for (const auto& p : problems) status += (status.empty() ? "" : ",") + p;

    out += std::string(metric_name(key.metric)) + '\t' +
           std::string(mode_name(key.mode)) + '\t' + std::to_string(key.n) + '\t' +
           std::string(aggregation_name(key.aggregation)) + '\t' +
           std::to_string(samples.size()) + '\t' +
           (tau ? format_fixed(tau->tau) : "NA") + '\t' +
           (r ? format_fixed(*r) : "NA") + '\t' +
           (tau ? std::to_string(tau->concordant) : "NA") + '\t' +
           (tau ? std::to_string(tau->discordant) : "NA") + '\t' +
           (tau ? std::to_string(tau->excluded_pairs) : "NA") + '\t' + status +
           '\n';
  }
  return out;
}

namespace {

bool selected(const ScoreRecord& record, std::span<const RunKey> runs) {
  return runs.empty() ||
         std::find(runs.begin(), runs.end(), record.run) != runs.end();
}

void require_runs(std::span<const ScoreRecord> records,
                  std::span<const RunKey> runs) {
  for (const auto& run : runs) {
    const bool found = std::any_of(records.begin(), records.end(),
                                   [&](const auto& r) { return r.run == run; });
    if (!found) {
      throw Error(ErrorCode::kUnknownRun,
                  "run '" + run.name() + "' not present in the scores");
    }
  }
}

std::map<std::string, double> ratings_by_id(std::span<const ScoreRecord> records,
                                            std::span<const RunKey> runs) {
  std::map<std::string, double> ratings;
  for (const auto& record : records) {
    if (!selected(record, runs)) continue;
    const auto [it, inserted] = ratings.emplace(record.id, record.human);
    if (!inserted && it->second != record.human) {
      throw Error(ErrorCode::kSchemaError,
                  "sample '" + record.id + "' has conflicting human ratings",
                  0, "human");
    }
  }
  return ratings;
}

}  // namespace

std::string rating_histogram(std::span<const ScoreRecord> records,
                             std::span<const RunKey> runs) {
  require_runs(records, runs);
  std::map<double, std::size_t> counts;
  for (const auto& [id, rating] : ratings_by_id(records, runs)) ++counts[rating];
  std::string out = "rating\tcount\n";
  for (const auto& [rating, count] : counts) {
    out += format_exact(rating) + '\t' + std::to_string(count) + '\n';
  }
  return out;
}

std::string score_distributions(std::span<const ScoreRecord> records,
                                std::span<const RunKey> runs) {
  require_runs(records, runs);
  std::map<std::pair<std::string, RunKey>, double> values;
  for (const auto& record : records) {
    if (!selected(record, runs)) continue;
    if (!values.emplace(std::make_pair(record.id, record.run), record.value).second) {
      throw Error(ErrorCode::kDuplicateId,
                  "sample '" + record.id + "' appears twice in run '" +
                      record.run.name() + "'");
    }
  }
  std::vector<std::pair<double, std::string>> rows;
  for (const auto& [id, rating] : ratings_by_id(records, runs)) {
    rows.emplace_back(rating, id);
  }
  std::sort(rows.begin(), rows.end());

  std::string out = "rating\tid";
  for (const auto& run : runs) out += '\t' + run.name();
  out += '\n';
  for (const auto& [rating, id] : rows) {
    out += format_exact(rating) + '\t' + id;
    for (const auto& run : runs) {
      const auto it = values.find({id, run});
      out += '\t' + (it == values.end() ? std::string("NA") : format_exact(it->second));
    }
    out += '\n';
  }
  return out;
}

std::string render_scores(std::span<const ScoreRecord> records) {
  std::ostringstream out;
  for (const auto& record : records) write_score_line(out, record);
  return out.str();
}

std::string cmd_score(const RunConfig& config) {
  const auto samples = filter_distinct(load_dataset(config.dataset));
  const auto provider = make_provider(config.provider, config.n);
  return render_scores(score_samples(samples, config, *provider));
}

std::string cmd_sweep(const RunConfig& config, std::size_t n_max) {
  const auto samples = filter_distinct(load_dataset(config.dataset));
  const auto provider = make_provider(config.provider, n_max);
  std::string out = correlation_header();
  for (std::size_t n = 0; n <= n_max; ++n) {
    RunConfig step = config;
    step.n = n;
    out += correlation_rows(score_samples(samples, step, *provider));
  }
  return out;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) {
      throw Error(ErrorCode::kIoError, "cannot write '" + tmp.string() + "'");
    }
    file << content;
    file.flush();
    if (!file) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw Error(ErrorCode::kIoError, "short write to '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::kIoError, "cannot rename into '" + path.string() + "'");
  }
}

// ---------------------------------------------------------------------------
// Command line

namespace {

struct Options {
  std::string dataset;
  std::string metrics = "wer,cer,bleu";
  std::string mode = "base";
  std::size_t n = 0;
  std::string provider;
  std::string cache;
  std::string agg = "max";
  std::size_t top_k = 0;
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  std::string out;
  std::size_t n_max = 0;
  std::string runs;
  std::string kind;
  bool keep_punct = false;
  bool keep_case = false;
  std::vector<std::string> inputs;
};

ProviderSpec provider_spec(const Options& o) {
  ProviderSpec spec;
  std::string kind = o.provider;
  if (kind.empty()) kind = o.cache.empty() ? "identity" : "cache";
  if (kind == "identity") {
    spec.kind = ProviderKind::kIdentity;
  } else if (kind == "builtin") {
    spec.kind = ProviderKind::kBuiltin;
  } else if (kind == "cache") {
    if (o.cache.empty()) throw UsageError("--provider cache requires --cache");
    spec.kind = ProviderKind::kCache;
    spec.cache = o.cache;
  } else {
    throw UsageError("unknown provider '" + kind + "' (identity|builtin|cache)");
  }
  return spec;
}

RunConfig run_config(const Options& o) {
  RunConfig config;
  config.dataset = o.dataset;
  config.metrics.clear();
  for (const auto& name : split_list(o.metrics)) {
    const auto metric = parse_metric(name);
    if (!metric) throw UsageError("unknown metric '" + name + "' (wer|cer|bleu)");
    if (std::find(config.metrics.begin(), config.metrics.end(), *metric) ==
        config.metrics.end()) {
      config.metrics.push_back(*metric);
    }
  }
  if (config.metrics.empty()) throw UsageError("--metrics is empty");
  const auto mode = parse_mode(o.mode);
  if (!mode) throw UsageError("unknown mode '" + o.mode + "'");
  config.mode = *mode;
  config.n = o.n;
  config.provider = provider_spec(o);

  const auto agg = parse_aggregation(o.agg);
  if (!agg) throw UsageError("unknown aggregation '" + o.agg + "'");
  config.aggregation.kind = *agg;
  config.aggregation.seed = o.seed;
  if (*agg == AggregationPolicy::Kind::kTopKMean) {
    if (o.top_k == 0) throw UsageError("--agg top_k_mean requires --top-k >= 1");
    config.aggregation.k = o.top_k;
  }
  if (*agg == AggregationPolicy::Kind::kMaxJitter) {
    if (!(o.epsilon > 0.0)) throw UsageError("--agg max_jitter requires --epsilon > 0");
    config.aggregation.epsilon = o.epsilon;
  }
  config.normalization.strip_punctuation = !o.keep_punct;
  config.normalization.lowercase = !o.keep_case;
  config.seed = o.seed;
  if (!o.out.empty()) config.out = o.out;
  return config;
}

std::vector<RunKey> parse_runs(const std::string& text) {
  std::vector<RunKey> runs;
  for (const auto& item : split_list(text)) {
    const auto key = RunKey::parse(item);
    if (!key) {
      throw UsageError("bad run id '" + item +
                       "' (expected metric/mode/n/aggregation)");
    }
    runs.push_back(*key);
  }
  return runs;
}

void emit(const Options& o, const std::string& content, std::ostream& out) {
  if (o.out.empty()) {
    out << content;
  } else {
    write_file_atomic(o.out, content);
  }
}

void add_scoring_options(CLI::App& cmd, Options& o) {
  cmd.add_option("--dataset", o.dataset, "Dataset file (JSON lines)")->required();
  cmd.add_option("--metrics", o.metrics, "Comma-separated subset of wer,cer,bleu");
  cmd.add_option("--mode", o.mode, "base | para_ref | para_both");
  cmd.add_option("--provider", o.provider, "identity | builtin | cache");
  cmd.add_option("--cache", o.cache, "Paraphrase cache file (JSON lines)");
  cmd.add_option("--agg", o.agg, "max | min | mean | top_k_mean | max_jitter");
  cmd.add_option("--top-k", o.top_k, "k for top_k_mean");
  cmd.add_option("--epsilon", o.epsilon, "Jitter bound for max_jitter");
  cmd.add_option("--seed", o.seed, "Seed for max_jitter");
  cmd.add_flag("--keep-punct", o.keep_punct, "Do not strip punctuation");
  cmd.add_flag("--keep-case", o.keep_case, "Do not lowercase");
  cmd.add_option("--out", o.out, "Output file (default: standard output)");
}

int paraphrase_command(const Options& o, std::ostream& out, std::ostream& err) {
  std::ifstream in(o.inputs.front(), std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open '" + o.inputs.front() + "'");
  }
  const auto provider = make_provider(provider_spec(o), o.n);
  std::ostringstream cache;
  std::set<std::string> done;
  std::string line;
  std::size_t line_no = 0;
  bool failed = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (!done.insert(line).second) continue;
    try {
      write_cache_line(cache, provider->paraphrases(line, o.n));
    } catch (const Error& e) {
      err << "line " << line_no << ": " << e.what() << '\n';
      failed = true;
    }
  }
  emit(o, cache.str(), out);
  return failed ? kExitData : kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Paraphrase-augmented WER/CER/BLEU and their correlation with "
               "human ratings",
               "parascore"};
  app.require_subcommand(1);
  Options o;

  auto* score = app.add_subcommand("score", "Score a dataset");
  add_scoring_options(*score, o);
  score->add_option("--n", o.n, "Paraphrases per sentence");

  auto* sweep = app.add_subcommand("sweep", "Correlation for n = 0..n-max");
  add_scoring_options(*sweep, o);
  sweep->add_option("--n-max", o.n_max, "Largest paraphrase count")->required();

  auto* correlate = app.add_subcommand("correlate", "Correlation table of score files");
  correlate->add_option("scores", o.inputs, "Score files")->required();
  correlate->add_option("--out", o.out, "Output file");

  auto* report = app.add_subcommand("report", "Rating histogram or score distributions");
  report->add_option("scores", o.inputs, "Score files")->required();
  report->add_option("--kind", o.kind, "rating_histogram | score_distributions")
      ->required();
  report->add_option("--runs", o.runs, "Comma-separated run ids");
  report->add_option("--out", o.out, "Output file");

  auto* paraphrase = app.add_subcommand("paraphrase", "Build a paraphrase cache");
  paraphrase->add_option("input", o.inputs, "Sentences, one per line")
      ->required()
      ->expected(1);
  paraphrase->add_option("--provider", o.provider, "identity | builtin | cache");
  paraphrase->add_option("--cache", o.cache, "Paraphrase cache file");
  paraphrase->add_option("--n", o.n, "Paraphrases per sentence");
  paraphrase->add_option("--out", o.out, "Output file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (score->parsed()) {
      emit(o, cmd_score(run_config(o)), out);
    } else if (sweep->parsed()) {
      Options sweep_options = o;
      sweep_options.n = 0;
      emit(o, cmd_sweep(run_config(sweep_options), o.n_max), out);
    } else if (correlate->parsed()) {
      emit(o, correlation_header() + correlation_rows(load_all_scores(o.inputs)), out);
    } else if (report->parsed()) {
      const auto runs = parse_runs(o.runs);
      if (o.kind == "rating_histogram") {
        emit(o, rating_histogram(load_all_scores(o.inputs), runs), out);
      } else if (o.kind == "score_distributions") {
        if (runs.empty()) throw UsageError("score_distributions requires --runs");
        emit(o, score_distributions(load_all_scores(o.inputs), runs), out);
      } else {
        throw UsageError("unknown report kind '" + o.kind + "'");
      }
    } else if (paraphrase->parsed()) {
      return paraphrase_command(o, out, err);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}

}  // namespace parascore::cli
