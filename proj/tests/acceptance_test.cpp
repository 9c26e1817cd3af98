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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "planted_corpus.hpp"
#include "parascore/augment.hpp"
#include "parascore/bleu.hpp"
#include "parascore/cli.hpp"
#include "parascore/editdist.hpp"
#include "parascore/error.hpp"
#include "parascore/metaeval.hpp"
#include "parascore/paraphrase.hpp"
#include "parascore/toy_scorer.hpp"

namespace fs = std::filesystem;
using namespace parascore;

namespace {

const std::string kData = PARASCORE_DATA_DIR;

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(double value, int digits = 6) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
  return buffer;
}

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<ScoreRecord> records_of(const std::string& text) {
  std::istringstream in(text);
  return parse_scores(in);
}

std::vector<std::vector<std::string>> tsv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, '\t')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream(path, std::ios::binary) << content;
}

const std::string kRef3 = "Überlegungen die Lage in Zukunft zu verbessern sind in Planung.";
const std::string kHyp3 =
    "Gedanken wie man die Lage zukünftig besser machen kann sind in Planung.";

// ---------------------------------------------------------------------------

Check golden_values() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  const auto r = invoke({"score", "--dataset", kData + "/golden_pairs.jsonl"});
  const double elapsed = seconds_since(start);
  c.expect(r.code == 0, "score exited with " + std::to_string(r.code) + ": " + r.err);
  if (!c.ok) return c;
  const std::map<std::string, double> expected = {
      {"row1/bleu", 0.562}, {"row2/bleu", 0.271}, {"row3/bleu", 0.159},
      {"row1/wer", 0.667},  {"row2/wer", 0.500},  {"row3/wer", 0.700},
      {"row1/cer", 0.771},  {"row2/cer", 0.404},  {"row3/cer", 0.532},
  };
  const auto records = records_of(r.out);
  c.expect(records.size() == 9, std::to_string(records.size()) + " score lines");
  std::string values;
  for (const auto& record : records) {
    const std::string key = record.id + "/" + std::string(metric_name(record.run.metric));
    // WER and CER are stored as accuracies; the golden values are error rates.
    const double shown =
        record.run.metric == Metric::kBleu ? record.value : 1.0 - record.value;
    const double rounded = std::round(shown * 1000.0) / 1000.0;
    const auto it = expected.find(key);
    c.expect(it != expected.end(), "unexpected record " + key);
    if (it == expected.end()) continue;
    c.expect(std::abs(rounded - it->second) <= 0.0005 + 1e-12,
             key + " = " + fmt(rounded, 3) + ", want " + fmt(it->second, 3));
    values += " " + key + "=" + fmt(rounded, 3);
  }
  c.expect(elapsed < 1.0, "took " + fmt(elapsed, 3) + " s");
  if (c.ok) c.detail = "9/9 values within 0.0005 in " + fmt(elapsed, 3) + " s;" + values;
  return c;
}

Check smoothing_witness() {
  Check c;
  const auto b = sentence_bleu(kHyp3, kRef3);
  c.expect(b.matched[3] == 0, "4-gram matches " + std::to_string(b.matched[3]));
  c.expect(b.totals[3] == 9, "4-gram total " + std::to_string(b.totals[3]));
  c.expect(std::abs(b.precisions[3] - 1.0 / 18.0) < 1e-15,
           "p4 = " + fmt(b.precisions[3], 12));
  // Orders 1..3 match, so the smoothing factor is still 2 at order 4.
  c.expect(b.matched[0] > 0 && b.matched[1] > 0 && b.matched[2] > 0,
           "lower orders unexpectedly unmatched");
  if (c.ok) {
    c.detail = "p4 = " + std::to_string(b.matched[3]) + " matches over " +
               std::to_string(b.totals[3]) + " 4-grams, smoothed to 1/18";
  }
  return c;
}

Check levenshtein_exhaustive() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::vector<int>> all{{}};
  for (std::size_t len = 1; len <= 6; ++len) {
    const std::size_t count = all.size();
    for (std::size_t i = 0; i < count; ++i) {
      if (all[i].size() != len - 1) continue;
      for (int s = 0; s < 3; ++s) {
        auto next = all[i];
        next.push_back(s);
        all.push_back(std::move(next));
      }
    }
  }
  std::size_t pairs = 0;
  for (const auto& a : all) {
    for (const auto& b : all) {
      const std::size_t dp =
          levenshtein(std::span<const int>(a), std::span<const int>(b));
      const std::size_t oracle = oracle::recursive_edit_distance(a, b);
      ++pairs;
      if (dp != oracle) {
        c.expect(false, "mismatch on pair " + std::to_string(pairs));
        return c;
      }
    }
  }
  const double elapsed = seconds_since(start);
  c.expect(elapsed < 10.0, "took " + fmt(elapsed, 2) + " s");
  if (c.ok) {
    c.detail = std::to_string(pairs) + " pairs over " + std::to_string(all.size()) +
               " sequences agree in " + fmt(elapsed, 2) + " s";
  }
  return c;
}

std::vector<ScoredSample> scored(const std::vector<double>& human,
                                 const std::vector<double>& metric) {
  std::vector<ScoredSample> out;
  for (std::size_t i = 0; i < human.size(); ++i) {
    out.push_back({"s" + std::to_string(i), human[i], metric[i]});
  }
  return out;
}

Check tau_semantics() {
  Check c;
  // Worked example: one metric tie among three strictly ordered humans.
  const auto worked = kendall_tau_like(scored({0, 1, 2}, {0.1, 0.5, 0.5}));
  c.expect(std::abs(worked.tau - 1.0 / 3.0) < 1e-15, "worked example " + fmt(worked.tau));
  c.expect(worked.concordant == 2 && worked.discordant == 1, "worked example counts");
  // Human ties are excluded whatever the metric says.
  const auto ties = kendall_tau_like(scored({1, 1, 2}, {0.9, 0.1, 0.5}));
  c.expect(ties.excluded_pairs == 1, "human tie not excluded");
  c.expect(ties.concordant == 1 && ties.discordant == 1, "human tie counts");
  // Metric ties count as discordant.
  const auto flat = kendall_tau_like(scored({0, 1, 2, 3}, {0.4, 0.4, 0.4, 0.4}));
  c.expect(flat.tau == -1.0 && flat.discordant == 6, "constant metric not -1");
  // Monotone and antitone data.
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 30;
    std::vector<double> h(n), up(n), down(n);
    for (std::size_t i = 0; i < n; ++i) {
      h[i] = static_cast<double>(i) + unit(rng);
      up[i] = std::exp(h[i]);
      down[i] = -3.0 * h[i];
    }
    std::shuffle(h.begin(), h.end(), rng);
    for (std::size_t i = 0; i < n; ++i) {
      up[i] = std::exp(h[i]);
      down[i] = -3.0 * h[i];
    }
    c.expect(kendall_tau_like(scored(h, up)).tau == 1.0, "monotone data not +1");
    c.expect(kendall_tau_like(scored(h, down)).tau == -1.0, "antitone data not -1");
  }
  // Random data with ties on both sides against the pair-matrix oracle.
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + trial % 25;
    std::vector<double> h(n), m(n);
    for (std::size_t i = 0; i < n; ++i) {
      h[i] = static_cast<double>(rng() % 4);
      m[i] = static_cast<double>(rng() % 5) / 4.0;
    }
    const auto want = oracle::matrix_tau(h, m);
    if (want.conc + want.disc == 0) continue;
    const auto got = kendall_tau_like(scored(h, m));
    c.expect(got.concordant == want.conc && got.discordant == want.disc &&
                 got.excluded_pairs == want.ties && got.tau == want.tau(),
             "oracle mismatch in trial " + std::to_string(trial));
  }
  if (c.ok) {
    c.detail = "worked example tau = " + fmt(worked.tau) +
               "; ties, monotone/antitone and 500 oracle trials agree";
  }
  return c;
}

// Random sentence over a small vocabulary, so paraphrases share words.
std::string random_sentence(std::mt19937& rng, std::size_t min_len, std::size_t max_len) {
  static const char* kWords[] = {"der", "die", "das", "haus", "ist", "rot",
                                 "und", "wir", "gehen", "heute", "nach", "berlin",
                                 "mit", "dem", "zug", "schnell"};
  const std::size_t len = min_len + rng() % (max_len - min_len + 1);
  std::string out;
  for (std::size_t i = 0; i < len; ++i) {
    if (i) out += ' ';
    out += kWords[rng() % 16];
  }
  return out;
}

// One random edit: substitution, insertion, deletion or adjacent swap.
std::string random_edit(std::mt19937& rng, const std::string& sentence) {
  TokenSequence t = word_tokens(sentence);
  const std::string word = word_tokens(random_sentence(rng, 1, 1))[0];
  const std::size_t at = rng() % t.size();
  switch (rng() % 4) {
    case 0: t[at] = word; break;
    case 1: t.insert(t.begin() + static_cast<std::ptrdiff_t>(at), word); break;
    case 2: if (t.size() > 1) t.erase(t.begin() + static_cast<std::ptrdiff_t>(at)); break;
    default: if (at + 1 < t.size()) std::swap(t[at], t[at + 1]);
  }
  return join_tokens(t);
}

std::string random_variant(std::mt19937& rng, const std::string& sentence) {
  std::string out = sentence;
  const int edits = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < edits; ++i) out = random_edit(rng, out);
  return out;
}

// Eight distinct paraphrases per sentence, none equal to it.
void plant_variants(std::mt19937& rng, ParaphraseCache& cache, const std::string& text) {
  if (cache.contains(text)) return;
  std::vector<std::string> variants;
  for (int guard = 0; variants.size() < 8 && guard < 1000; ++guard) {
    const auto v = random_variant(rng, text);
    if (v != text && std::find(variants.begin(), variants.end(), v) == variants.end()) {
      variants.push_back(v);
    }
  }
  cache.insert(text, variants);
}

const Metric kMetrics[] = {Metric::kWer, Metric::kCer, Metric::kBleu};

Check candidate_count_law() {
  Check c;
  std::mt19937 rng(2024);
  ParaphraseCache cache;
  std::size_t checks = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Sample s{"t" + std::to_string(trial), random_sentence(rng, 3, 9), "", {}};
    s.hypothesis = random_variant(rng, s.reference);
    plant_variants(rng, cache, s.reference);
    plant_variants(rng, cache, s.hypothesis);
    const std::size_t n = rng() % 9;
    const std::size_t available = std::min<std::size_t>(
        cache.paraphrases(s.reference, 8).variants.size(),
        cache.paraphrases(s.hypothesis, 8).variants.size());
    if (available < 8) continue;  // the generator could not find 8 variants
    const auto count = [&](Metric m, Mode mode) {
      return score_sample(s, m, AugmentationMode::make(mode, n), cache,
                          AggregationPolicy::max())
          .candidate_count;
    };
    c.expect(count(Metric::kBleu, Mode::kParaBoth) == n + 1, "BLEU ParaBoth n=" + std::to_string(n));
    for (Metric m : {Metric::kWer, Metric::kCer}) {
      c.expect(count(m, Mode::kParaRef) == n + 1, "ParaRef n=" + std::to_string(n));
      c.expect(count(m, Mode::kParaBoth) == (n + 1) * (n + 1),
               "ParaBoth n=" + std::to_string(n));
    }
    ++checks;
  }
  c.expect(checks >= 250, "only " + std::to_string(checks) + " usable samples");
  if (c.ok) c.detail = std::to_string(checks) + " random samples, n in 0..8";
  return c;
}

// Samples for the builtin provider: references and hypotheses drawn from
// the lattice inputs, their lattice paths and random edits of them.
Sample builtin_sample(std::mt19937& rng, const std::vector<std::string>& inputs,
                      const LatticeBigramScorer& scorer, int index) {
  const auto pick = [&]() -> std::string {
    const std::string& key = inputs[rng() % inputs.size()];
    const auto paths = scorer.lattice_for(word_tokens(key)).paths();
    switch (rng() % 3) {
      case 0: return key;
      case 1: return join_tokens(paths[rng() % paths.size()]);
      default: return random_variant(rng, key);
    }
  };
  Sample s{"b" + std::to_string(index), inputs[rng() % inputs.size()], pick(), {}};
  if (rng() % 4 == 0) s.reference = pick();
  return s;
}

Check max_monotonicity() {
  Check c;
  std::mt19937 rng(99);
  ParaphraseCache cache;
  const IdentityProvider identity;
  const auto builtin = cli::make_provider({cli::ProviderKind::kBuiltin, {}}, 8);
  const auto scorer = builtin_toy_scorer();
  const auto inputs = scorer->lattice_inputs();

  std::map<std::string, std::size_t> violations;  // "metric: kind" -> count
  std::string first_bleu_case;
  std::size_t comparisons = 0;
  std::size_t samples = 0;
  for (int provider_id = 0; provider_id < 3; ++provider_id) {
    const ParaphraseProvider& provider =
        provider_id == 0 ? static_cast<const ParaphraseProvider&>(identity)
        : provider_id == 1 ? static_cast<const ParaphraseProvider&>(cache)
                           : *builtin;
    for (int i = 0; i < 1000; ++i) {
      Sample s;
      if (provider_id == 2) {
        s = builtin_sample(rng, inputs, *scorer, i);
      } else {
        s = Sample{"r" + std::to_string(i), random_sentence(rng, 1, 10), "", {}};
        s.hypothesis = rng() % 5 == 0 ? random_sentence(rng, 1, 10)
                                      : random_variant(rng, s.reference);
        if (provider_id == 1) {
          plant_variants(rng, cache, s.reference);
          plant_variants(rng, cache, s.hypothesis);
        }
      }
      ++samples;
      for (Metric metric : kMetrics) {
        const auto value = [&](Mode mode, std::size_t n) {
          return score_sample(s, metric, AugmentationMode::make(mode, n), provider,
                              AggregationPolicy::max())
              .value;
        };
        const std::string name(metric_name(metric));
        const double base = value(Mode::kBase, 0);
        double prev_ref = base, prev_both = base;
        for (std::size_t n = 1; n <= 8; ++n) {
          const double ref = value(Mode::kParaRef, n);
          const double both = value(Mode::kParaBoth, n);
          comparisons += 4;
          const std::size_t before = violations.size();
          if (both < ref) ++violations[name + ": para_both < para_ref"];
          if (ref < base) ++violations[name + ": para_ref < base"];
          if (ref < prev_ref) ++violations[name + ": para_ref drops as n grows"];
          if (both < prev_both) ++violations[name + ": para_both drops as n grows"];
          if (metric == Metric::kBleu && first_bleu_case.empty() &&
              violations.size() != before) {
            first_bleu_case = "ref '" + s.reference + "', hyp '" + s.hypothesis +
                              "', n=" + std::to_string(n) + ": base " + fmt(base, 4) +
                              ", para_ref " + fmt(ref, 4) + ", para_both " +
                              fmt(both, 4);
          }
          prev_ref = ref;
          prev_both = both;
        }
      }
    }
  }
  std::size_t edit_rate_violations = 0;
  for (const auto& [kind, count] : violations) {
    c.expect(false, std::to_string(count) + " violations of " + kind);
    if (kind.rfind("bleu", 0) != 0) edit_rate_violations += count;
  }
  if (!c.ok) {
    std::string all;
    for (const auto& [kind, count] : violations) {
      all += "; " + kind + " x" + std::to_string(count);
    }
    c.detail = "wer/cer violations: " + std::to_string(edit_rate_violations) + all;
    // Closest-length brevity: an added reference can move the effective
    // reference length away from the hypothesis length.
    if (!first_bleu_case.empty()) c.detail += "; first bleu case: " + first_bleu_case;
  } else {
    c.detail = std::to_string(samples) + " samples over 3 providers, " +
               std::to_string(comparisons) + " comparisons";
  }
  return c;
}

Check planted_sweep(const fs::path& dir) {
  Check c;
  const auto corpus = testing::make_planted_corpus(200, 3);
  std::ostringstream dataset, cache;
  write_dataset(dataset, corpus.samples);
  corpus.cache.write(cache);
  write_file(dir / "planted.jsonl", dataset.str());
  write_file(dir / "planted_cache.jsonl", cache.str());

  std::map<std::string, std::vector<double>> tau;  // "metric/mode" -> by n
  for (const std::string mode : {"para_ref", "para_both"}) {
    const auto r = invoke({"sweep", "--dataset", (dir / "planted.jsonl").string(),
                           "--mode", mode, "--cache",
                           (dir / "planted_cache.jsonl").string(), "--n-max", "5"});
    c.expect(r.code == 0, "sweep failed: " + r.err);
    if (!c.ok) return c;
    const auto rows = tsv(r.out);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      c.expect(rows[i][10] == "ok", "row status " + rows[i][10]);
      tau[rows[i][0] + "/" + mode].push_back(std::stod(rows[i][5]));
    }
  }
  const std::size_t d = corpus.depth;
  std::string summary;
  for (const std::string metric : {"wer", "cer", "bleu"}) {
    const auto& both = tau[metric + "/para_both"];
    const auto& ref = tau[metric + "/para_ref"];
    c.expect(both.size() == 6 && ref.size() == 6, metric + ": wrong row count");
    if (!c.ok) return c;
    c.expect(both[d] > ref[d], metric + ": para_both not above para_ref at depth");
    c.expect(ref[d] > both[0], metric + ": para_ref not above base at depth");
    for (std::size_t n = 1; n <= d; ++n) {
      c.expect(both[n] > both[n - 1], metric + ": no strict rise at n=" + std::to_string(n));
    }
    for (std::size_t n = d + 1; n < both.size(); ++n) {
      c.expect(both[n] == both[d], metric + ": no plateau at n=" + std::to_string(n));
    }
    summary += " " + metric + " base " + fmt(both[0], 4) + " < ref " + fmt(ref[d], 4) +
               " < both " + fmt(both[d], 4) + ";";
  }
  if (c.ok) c.detail = "200 samples, depth " + std::to_string(d) + ":" + summary;
  return c;
}

Check beam_oracle() {
  Check c;
  const auto scorer = builtin_toy_scorer();
  std::size_t compared = 0;
  for (const auto& key : scorer->lattice_inputs()) {
    const TokenSequence input = word_tokens(key);
    const auto all = oracle::enumerate_paths(*scorer, input, 0.003, 4.0, 4);
    for (std::size_t width = 1; width <= 4; ++width) {
      NgramPenaltyConfig config;
      config.beam_width = width;
      const auto got = beam_search(input, *scorer, config);
      c.expect(got.size() == width, "beam size at width " + std::to_string(width));
      for (std::size_t i = 0; i < got.size() && i < all.size(); ++i) {
        c.expect(got[i].tokens == all[i].tokens &&
                     std::abs(got[i].score - all[i].score) < 1e-9,
                 "enumeration mismatch for '" + key + "' width " + std::to_string(width));
        ++compared;
      }
      config.alpha = 0.0;
      const auto plain = beam_search(input, *scorer, config);
      const auto want = oracle::unpenalized_beam(*scorer, input, width, 2 * input.size() + 5);
      c.expect(plain.size() == want.size(), "alpha = 0 size mismatch");
      for (std::size_t i = 0; i < plain.size() && i < want.size(); ++i) {
        c.expect(plain[i].tokens == want[i].tokens && plain[i].score == want[i].score,
                 "alpha = 0 differs from unpenalized search for '" + key + "'");
      }
    }
  }
  const TokenSequence abcd{"a", "b", "c", "d"};
  const auto profiles = input_ngram_profiles(abcd, 4);
  const NgramPenaltyConfig defaults;
  const double p1 = overlap_penalty("a", {}, profiles, defaults);
  const double p4 = overlap_penalty("d", {"a", "b", "c"}, profiles, defaults);
  c.expect(std::abs(p1 - 0.003) < 1e-15, "order-1 penalty " + fmt(p1, 9));
  c.expect(std::abs(p4 - 0.192) < 1e-15, "order-4 penalty " + fmt(p4, 9));
  if (c.ok) {
    c.detail = std::to_string(compared) +
               " beam entries match enumeration (widths 1-4); alpha = 0 equals "
               "unpenalized search; penalties 0.003 / 0.192";
  }
  return c;
}

Check determinism(const fs::path& dir) {
  Check c;
  const auto corpus = testing::make_planted_corpus(120, 3, 77);
  std::ostringstream dataset, cache;
  write_dataset(dataset, corpus.samples);
  corpus.cache.write(cache);
  const fs::path data = dir / "det.jsonl";
  const fs::path cache_file = dir / "det_cache.jsonl";
  write_file(data, dataset.str());
  write_file(cache_file, cache.str());

  const std::vector<std::string> flags = {
      "--dataset", data.string(), "--mode", "para_both", "--cache", cache_file.string(),
      "--agg", "max_jitter", "--epsilon", "0.02", "--seed", "1234"};
  std::vector<std::uint64_t> score_hashes, sweep_hashes;
  for (int run = 0; run < 2; ++run) {
    const fs::path out = dir / ("det_scores_" + std::to_string(run) + ".jsonl");
    auto args = flags;
    args.insert(args.begin(), "score");
    args.insert(args.end(), {"--n", "3", "--out", out.string()});
    const auto s = invoke(args);
    c.expect(s.code == 0, "score failed: " + s.err);
    score_hashes.push_back(fnv1a(read_file(out)));
    args = flags;
    args.insert(args.begin(), "sweep");
    args.insert(args.end(), {"--n-max", "4"});
    const auto w = invoke(args);
    c.expect(w.code == 0, "sweep failed: " + w.err);
    sweep_hashes.push_back(fnv1a(w.out));
  }
  c.expect(score_hashes[0] == score_hashes[1], "score output differs between runs");
  c.expect(sweep_hashes[0] == sweep_hashes[1], "sweep output differs between runs");

  // Serial against parallel execution of the same configuration.
  cli::RunConfig config;
  config.dataset = data;
  config.mode = Mode::kParaBoth;
  config.n = 3;
  config.provider = {cli::ProviderKind::kCache, cache_file};
  config.aggregation = AggregationPolicy::max_jitter(0.02, 1234);
  config.seed = 1234;
  std::vector<std::uint64_t> by_jobs;
  for (std::size_t jobs : {1, 2, 8}) {
    config.jobs = jobs;
    by_jobs.push_back(fnv1a(cli::cmd_score(config)));
    by_jobs.push_back(fnv1a(cli::cmd_sweep(config, 4)));
  }
  for (std::size_t i = 2; i < by_jobs.size(); ++i) {
    c.expect(by_jobs[i] == by_jobs[i % 2], "output depends on worker count");
  }
  c.expect(by_jobs[0] == score_hashes[0], "library score differs from command line");
  c.expect(by_jobs[1] == sweep_hashes[0], "library sweep differs from command line");
  if (c.ok) {
    char hex[40];
    std::snprintf(hex, sizeof(hex), "%016llx/%016llx",
                  static_cast<unsigned long long>(score_hashes[0]),
                  static_cast<unsigned long long>(sweep_hashes[0]));
    c.detail = std::string("score/sweep hashes ") + hex +
               " stable across runs and 1, 2, 8 workers";
  }
  return c;
}

Check rating_report(const fs::path& dir) {
  Check c;
  // Ten hand-built samples: one rated 0, two rated 1, three rated 2, four 3.
  const std::vector<std::pair<int, std::pair<std::string, std::string>>> rows = {
      {0, {"Die Sitzung wurde vertagt.", "Das Wetter bleibt heute schön."}},
      {1, {"Der Zug fährt um acht Uhr ab.", "Der Bus kommt spät an."}},
      {1, {"Wir treffen uns morgen im Büro.", "Wir essen morgen zu Hause."}},
      {2, {"Die Preise sind stark gestiegen.", "Die Preise stiegen deutlich."}},
      {2, {"Er hat das Spiel knapp verloren.", "Er verlor das Spiel."}},
      {2, {"Sie liest gern alte Romane.", "Sie liest gerne Romane."}},
      {3, {"Gesucht wurde auch im nahen Ausland.", "Auch im nahen Ausland wurde gesucht."}},
      {3, {"Der Spatenstich fand im Oktober letzten Jahres statt.",
           "Der Spatenstich fand letztes Jahr im Oktober statt."}},
      {3, {"Das Museum bleibt montags geschlossen.", "Montags ist das Museum zu."}},
      {3, {"Die Straße ist wegen Bauarbeiten gesperrt.",
           "Wegen Bauarbeiten ist die Straße gesperrt."}},
  };
  std::string dataset;
  std::ostringstream cache;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& [rating, pair] = rows[i];
    char id[24];
    std::snprintf(id, sizeof(id), "h%02zu", i);
    dataset += "{\"id\":\"" + std::string(id) + "\",\"reference\":\"" + pair.first +
               "\",\"hypothesis\":\"" + pair.second +
               "\",\"scheme\":\"hsr\",\"semantic\":" + std::to_string(rating) +
               ",\"grammar_ok\":true,\"punctuation_ok\":true,\"capitalization_ok\":true}\n";
    for (const auto* text : {&pair.first, &pair.second}) {
      TokenSequence t = word_tokens(*text);
      std::reverse(t.begin(), t.end());
      TokenSequence shorter(t.begin() + 1, t.end());
      write_cache_line(cache, ParaphraseSet{*text, {join_tokens(t), join_tokens(shorter)}});
    }
  }
  write_file(dir / "hsr10.jsonl", dataset);
  write_file(dir / "hsr10_cache.jsonl", cache.str());

  const fs::path base = dir / "hsr10_base.jsonl";
  const fs::path both = dir / "hsr10_both.jsonl";
  auto r = invoke({"score", "--dataset", (dir / "hsr10.jsonl").string(), "--metrics",
                   "bleu", "--out", base.string()});
  c.expect(r.code == 0, "base scoring failed: " + r.err);
  r = invoke({"score", "--dataset", (dir / "hsr10.jsonl").string(), "--metrics", "bleu",
              "--mode", "para_both", "--n", "2", "--cache",
              (dir / "hsr10_cache.jsonl").string(), "--out", both.string()});
  c.expect(r.code == 0, "para_both scoring failed: " + r.err);
  if (!c.ok) return c;

  const auto histogram =
      invoke({"report", base.string(), both.string(), "--kind", "rating_histogram"});
  c.expect(histogram.code == 0, "histogram failed: " + histogram.err);
  c.expect(histogram.out == "rating\tcount\n0\t1\n1\t2\n2\t3\n3\t4\n",
           "histogram was '" + histogram.out + "'");

  const std::string run_a = "bleu/base/0/max";
  const std::string run_b = "bleu/para_both/2/max";
  const auto dist = invoke({"report", base.string(), both.string(), "--kind",
                            "score_distributions", "--runs", run_a + "," + run_b});
  c.expect(dist.code == 0, "distributions failed: " + dist.err);
  std::map<std::pair<std::string, std::string>, double> values;
  for (const auto& file : {base, both}) {
    for (const auto& record : load_scores(file)) {
      values[{record.id, record.run.name()}] = record.value;
    }
  }
  const auto table = tsv(dist.out);
  c.expect(table.size() == 11, std::to_string(table.size()) + " distribution rows");
  if (!c.ok) return c;
  c.expect(table[0] == std::vector<std::string>{"rating", "id", run_a, run_b},
           "distribution header");
  double last_rating = -1;
  for (std::size_t i = 1; i < table.size(); ++i) {
    const auto& row = table[i];
    const double rating = std::stod(row[0]);
    c.expect(rating >= last_rating, "rows not grouped by rating");
    last_rating = rating;
    const std::size_t idx = static_cast<std::size_t>(std::stoi(row[1].substr(1)));
    c.expect(rating == rows[idx].first, "rating of " + row[1]);
    c.expect(std::stod(row[2]) == values.at({row[1], run_a}) &&
                 std::stod(row[3]) == values.at({row[1], run_b}),
             "values of " + row[1] + " differ from the score files");
  }
  if (c.ok) c.detail = "histogram 0:1 1:2 2:3 3:4; 10 rows of two runs match the score files";
  return c;
}

}  // namespace

int main() {
  const fs::path dir = fs::temp_directory_path() / "parascore_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);

  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"Golden values", golden_values},
      {"BLEU smoothing witness", smoothing_witness},
      {"Levenshtein oracle equivalence", levenshtein_exhaustive},
      {"Kendall-like tau semantics", tau_semantics},
      {"Candidate-count law", candidate_count_law},
      {"Max-monotonicity", max_monotonicity},
      {"Planted-paraphrase sweep", [&] { return planted_sweep(dir); }},
      {"Penalized-beam oracle", beam_oracle},
      {"Determinism", [&] { return determinism(dir); }},
      {"Rating report", [&] { return rating_report(dir); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check result;
    try {
      result = criteria[i].second();
    } catch (const std::exception& e) {
      result.ok = false;
      result.detail = std::string("exception: ") + e.what();
    }
    if (!result.ok) ++failed;
    std::printf("%s %2zu %s: %s\n", result.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), result.detail.c_str());
    std::fflush(stdout);
  }
  fs::remove_all(dir);
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
