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

// A desk-scale SequenceScorer: a word-bigram language model whose
// candidates are constrained by a per-sentence synonym lattice.

#ifndef PARASCORE_TOY_SCORER_HPP_
#define PARASCORE_TOY_SCORER_HPP_

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "parascore/paraphrase.hpp"
#include "parascore/textnorm.hpp"

namespace parascore {

/// Slots of alternative phrases; every alternative is one or more
/// whitespace-separated tokens. A template accepts any choice of one
/// alternative per slot.
using LatticeTemplate = std::vector<std::vector<std::string>>;

/// Word DAG built from the union of several templates.
class SynonymLattice {
 public:
  explicit SynonymLattice(std::span<const LatticeTemplate> templates);

  /// Lattice with a single path: `tokens`.
  static SynonymLattice single_path(const TokenSequence& tokens);

  struct Step {
    std::set<std::string> next;
    bool can_end = false;
  };

  /// Tokens that may follow `prefix`; empty `next` and can_end = false when
  /// the prefix leaves the lattice.
  Step step(const TokenSequence& prefix) const;

  /// Every distinct complete path, sorted.
  std::vector<TokenSequence> paths() const;

 private:
  struct Edge {
    std::string token;
    std::size_t target;
  };

  SynonymLattice() = default;
  std::size_t add_node();

  std::vector<std::vector<Edge>> edges_;
  std::set<std::size_t> finals_;
};

/// Add-k smoothed word-bigram model over normalized tokens.
class BigramModel {
 public:
  BigramModel(std::span<const std::string> sentences, double add_k = 0.1);

  /// log P(word | previous); an empty `previous` means sentence start and
  /// an empty `word` means sentence end. Both are normalized first.
  double log_prob(std::string_view previous, std::string_view word) const;

  /// Extends the vocabulary used for smoothing.
  void add_vocabulary(std::string_view word);

 private:
  static std::string key(std::string_view word);

  std::map<std::string, std::map<std::string, std::size_t, std::less<>>,
           std::less<>>
      bigrams_;
  std::map<std::string, std::size_t, std::less<>> contexts_;
  std::set<std::string, std::less<>> vocabulary_;
  double add_k_;
};

class LatticeBigramScorer final : public SequenceScorer {
 public:
  LatticeBigramScorer(BigramModel model,
                      std::map<std::string, SynonymLattice> lattices);

  std::vector<ScoredToken> expand(const TokenSequence& input,
                                  const TokenSequence& prefix) const override;

  std::string_view end_token() const override { return "</s>"; }

  /// Lattice used for `input`; inputs without a lattice get a single-path
  /// lattice of their own tokens.
  SynonymLattice lattice_for(const TokenSequence& input) const;

  /// Inputs that have a dedicated lattice, as joined tokens.
  std::vector<std::string> lattice_inputs() const;

 private:
  BigramModel model_;
  std::map<std::string, SynonymLattice> lattices_;
};

/// Bundled training sentences for the bigram model.
std::span<const std::string> toy_corpus();

/// Bundled scorer: the toy corpus model plus lattices for three German
/// news sentences.
std::shared_ptr<const LatticeBigramScorer> builtin_toy_scorer();

}  // namespace parascore

#endif  // PARASCORE_TOY_SCORER_HPP_
