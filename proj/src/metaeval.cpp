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

#include "parascore/metaeval.hpp"

#include <algorithm>
#include <cmath>

#include "parascore/error.hpp"

namespace parascore {
namespace {

void require_pairs(std::span<const ScoredSample> samples) {
  if (samples.size() < 2) {
    throw Error(ErrorCode::kTooFewSamples,
                "correlation needs at least two samples, got " +
                    std::to_string(samples.size()));
  }
}

}  // namespace

PairClass classify_pair(const ScoredSample& s1, const ScoredSample& s2) {
  if (s1.human == s2.human) return PairClass::kExcluded;
  const bool human_up = s1.human < s2.human;
  if (s1.metric == s2.metric) return PairClass::kDiscordant;
  const bool metric_up = s1.metric < s2.metric;
  return human_up == metric_up ? PairClass::kConcordant : PairClass::kDiscordant;
}

TauResult kendall_tau_like(std::span<const ScoredSample> samples) {
  require_pairs(samples);
  TauResult out;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      switch (classify_pair(samples[i], samples[j])) {
        case PairClass::kConcordant: ++out.concordant; break;
        case PairClass::kDiscordant: ++out.discordant; break;
        case PairClass::kExcluded: ++out.excluded_pairs; break;
      }
    }
  }
  const std::size_t counted = out.concordant + out.discordant;
  if (counted == 0) {
    throw Error(ErrorCode::kAllPairsExcluded,
                "every sample pair has tied human ratings");
  }
  out.tau = (static_cast<double>(out.concordant) -
             static_cast<double>(out.discordant)) /
            static_cast<double>(counted);
  return out;
}

double pearson(std::span<const ScoredSample> samples) {
  require_pairs(samples);
  const double n = static_cast<double>(samples.size());
  double mean_h = 0.0;
  double mean_m = 0.0;
  for (const auto& s : samples) {
    mean_h += s.human;
    mean_m += s.metric;
  }
  mean_h /= n;
  mean_m /= n;
  double cov = 0.0;
  double var_h = 0.0;
  double var_m = 0.0;
  for (const auto& s : samples) {
    const double dh = s.human - mean_h;
    const double dm = s.metric - mean_m;
    cov += dh * dm;
    var_h += dh * dh;
    var_m += dm * dm;
  }
  if (var_h == 0.0 || var_m == 0.0) {
    throw Error(ErrorCode::kZeroVariance,
                var_h == 0.0 ? "human ratings are constant"
                             : "metric values are constant");
  }
  return std::clamp(cov / std::sqrt(var_h * var_m), -1.0, 1.0);
}

CorrelationReport correlate(std::span<const ScoredSample> samples) {
  const TauResult tau = kendall_tau_like(samples);
  CorrelationReport out;
  out.tau = tau.tau;
  out.pearson_r = pearson(samples);
  out.concordant = tau.concordant;
  out.discordant = tau.discordant;
  out.excluded_pairs = tau.excluded_pairs;
  out.sample_count = samples.size();
  return out;
}

}  // namespace parascore
