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

// Bundled data for the builtin paraphrase provider: the bigram training
// corpus and synonym lattices for three German news sentences.

#include <sstream>
#include <string>
#include <vector>

#include "parascore/toy_scorer.hpp"

namespace parascore {
namespace detail {
extern const char kToyCorpusText[];
}  // namespace detail

namespace {

std::vector<std::string> split_corpus() {
  std::vector<std::string> sentences;
  std::istringstream in(detail::kToyCorpusText);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) sentences.push_back(line);
  }
  return sentences;
}

std::map<std::string, SynonymLattice> builtin_lattices() {
  const std::vector<std::pair<std::string, std::vector<LatticeTemplate>>> specs = {
      {"Gesucht wurde auch im nahen Ausland.",
       {{{"Es wurde"}, {"auch", "ebenfalls"}, {"im"}, {"nahen", "benachbarten"},
         {"Ausland"}, {"gesucht.", "verfolgt."}}}},
      {"Der Spatenstich fand im Oktober letzten Jahres statt.",
       {{{"Der Spatenstich"}, {"geschah", "erfolgte", "war"}, {"im"}, {"Oktober"},
         {"letzten", "vergangenen"}, {"Jahres."}}}},
      {"Überlegungen die Lage in Zukunft zu verbessern sind in Planung.",
       {{{"Überlegungen", "Erwägungen"}, {"zur Verbesserung der"},
         {"Lage", "Situation"}, {"sind"}, {"geplant.", "vorgesehen."}}}},
  };
  std::map<std::string, SynonymLattice> lattices;
  for (const auto& [input, templates] : specs) {
    lattices.emplace(join_tokens(word_tokens(input)), SynonymLattice(templates));
  }
  return lattices;
}

}  // namespace

std::span<const std::string> toy_corpus() {
  static const std::vector<std::string> sentences = split_corpus();
  return sentences;
}

std::shared_ptr<const LatticeBigramScorer> builtin_toy_scorer() {
  static const std::shared_ptr<const LatticeBigramScorer> scorer = [] {
    auto lattices = builtin_lattices();
    BigramModel model(toy_corpus());
    for (const auto& [input, lattice] : lattices) {
      for (const auto& path : lattice.paths()) {
        for (const auto& token : path) model.add_vocabulary(token);
      }
    }
    return std::make_shared<const LatticeBigramScorer>(std::move(model),
                                                       std::move(lattices));
  }();
  return scorer;
}

}  // namespace parascore
