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

#include "parascore/toy_scorer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>

namespace parascore {

// ---------------------------------------------------------------------------
// SynonymLattice

std::size_t SynonymLattice::add_node() {
  edges_.emplace_back();
  return edges_.size() - 1;
}

SynonymLattice::SynonymLattice(std::span<const LatticeTemplate> templates) {
  const std::size_t start = add_node();
  for (const auto& slots : templates) {
    if (slots.empty()) throw std::invalid_argument("empty lattice template");
    std::size_t slot_start = start;
    for (const auto& alternatives : slots) {
      if (alternatives.empty()) throw std::invalid_argument("empty lattice slot");
      const std::size_t slot_end = add_node();
      for (const auto& phrase : alternatives) {
        const TokenSequence tokens = word_tokens(phrase);
        if (tokens.empty()) throw std::invalid_argument("empty lattice phrase");
        std::size_t node = slot_start;
        for (std::size_t i = 0; i < tokens.size(); ++i) {
          const std::size_t target =
              i + 1 == tokens.size() ? slot_end : add_node();
          edges_[node].push_back(Edge{tokens[i], target});
          node = target;
        }
      }
      slot_start = slot_end;
    }
    finals_.insert(slot_start);
  }
}

SynonymLattice SynonymLattice::single_path(const TokenSequence& tokens) {
  SynonymLattice lattice;
  std::size_t node = lattice.add_node();
  for (const auto& token : tokens) {
    const std::size_t target = lattice.add_node();
    lattice.edges_[node].push_back(Edge{token, target});
    node = target;
  }
  lattice.finals_.insert(node);
  return lattice;
}

SynonymLattice::Step SynonymLattice::step(const TokenSequence& prefix) const {
  std::set<std::size_t> current{0};
  for (const auto& token : prefix) {
    std::set<std::size_t> next;
    for (std::size_t node : current) {
      for (const auto& edge : edges_[node]) {
        if (edge.token == token) next.insert(edge.target);
      }
    }
    if (next.empty()) return {};
    current = std::move(next);
  }
  Step out;
  for (std::size_t node : current) {
    for (const auto& edge : edges_[node]) out.next.insert(edge.token);
    if (finals_.count(node) != 0) out.can_end = true;
  }
  return out;
}

std::vector<TokenSequence> SynonymLattice::paths() const {
  std::vector<TokenSequence> out;
  TokenSequence prefix;
  std::function<void()> walk = [&] {
    const Step s = step(prefix);
    if (s.can_end) out.push_back(prefix);
    for (const auto& token : s.next) {
      prefix.push_back(token);
      walk();
      prefix.pop_back();
    }
  };
  walk();
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// BigramModel

namespace {

constexpr std::string_view kBegin = "\x01<s>";
constexpr std::string_view kEnd = "\x01</s>";

}  // namespace

std::string BigramModel::key(std::string_view word) {
  std::string normalized = normalize(word);
  return normalized.empty() ? std::string(word) : normalized;
}

BigramModel::BigramModel(std::span<const std::string> sentences, double add_k)
    : add_k_(add_k) {
  if (add_k <= 0.0) throw std::invalid_argument("add-k must be positive");
  vocabulary_.emplace(kEnd);
  for (const auto& sentence : sentences) {
    std::string previous(kBegin);
    for (const auto& token : word_tokens(sentence)) {
      std::string word = key(token);
      ++bigrams_[previous][word];
      ++contexts_[previous];
      vocabulary_.insert(word);
      previous = std::move(word);
    }
    ++bigrams_[previous][std::string(kEnd)];
    ++contexts_[previous];
  }
}

void BigramModel::add_vocabulary(std::string_view word) {
  vocabulary_.insert(key(word));
}

double BigramModel::log_prob(std::string_view previous,
                             std::string_view word) const {
  const std::string context = previous.empty() ? std::string(kBegin) : key(previous);
  const std::string target = word.empty() ? std::string(kEnd) : key(word);
  double pair_count = 0.0;
  double context_count = 0.0;
  if (const auto row = bigrams_.find(context); row != bigrams_.end()) {
    if (const auto cell = row->second.find(target); cell != row->second.end()) {
      pair_count = static_cast<double>(cell->second);
    }
    context_count = static_cast<double>(contexts_.find(context)->second);
  }
  const double vocab = static_cast<double>(vocabulary_.size());
  return std::log((pair_count + add_k_) / (context_count + add_k_ * vocab));
}

// ---------------------------------------------------------------------------
// LatticeBigramScorer

LatticeBigramScorer::LatticeBigramScorer(
    BigramModel model, std::map<std::string, SynonymLattice> lattices)
    : model_(std::move(model)), lattices_(std::move(lattices)) {}

SynonymLattice LatticeBigramScorer::lattice_for(const TokenSequence& input) const {
  const auto it = lattices_.find(join_tokens(input));
  if (it != lattices_.end()) return it->second;
  return SynonymLattice::single_path(input);
}

std::vector<std::string> LatticeBigramScorer::lattice_inputs() const {
  std::vector<std::string> out;
  for (const auto& entry : lattices_) out.push_back(entry.first);
  return out;
}

std::vector<ScoredToken> LatticeBigramScorer::expand(
    const TokenSequence& input, const TokenSequence& prefix) const {
  const auto it = lattices_.find(join_tokens(input));
  const SynonymLattice::Step step =
      it != lattices_.end() ? it->second.step(prefix)
                            : SynonymLattice::single_path(input).step(prefix);
  const std::string_view previous =
      prefix.empty() ? std::string_view{} : std::string_view{prefix.back()};
  std::vector<ScoredToken> out;
  for (const auto& token : step.next) {
    out.push_back(ScoredToken{token, model_.log_prob(previous, token)});
  }
  if (step.can_end) {
    out.push_back(ScoredToken{std::string(end_token()),
                              model_.log_prob(previous, {})});
  }
  return out;
}

}  // namespace parascore
