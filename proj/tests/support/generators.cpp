// Copyright 2026 The subfst Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "generators.hpp"

#include <algorithm>
#include <set>

#include "subfst/ops.hpp"

namespace subfst::testing {
namespace {

const std::string kLetters = "abcdefgh";

}  // namespace

Vocabulary random_vocab(Gen& g, int sigma, int size, int max_len) {
  std::vector<std::string> tokens;
  std::set<std::string> seen;
  for (int i = 0; i < sigma; ++i) {
    tokens.emplace_back(1, kLetters[static_cast<std::size_t>(i)]);
    seen.insert(tokens.back());
  }
  for (int attempts = 0; static_cast<int>(tokens.size()) < size && attempts < 200; ++attempts) {
    int len = g.uniform(2, max_len);
    std::string t;
    for (int i = 0; i < len; ++i) t += kLetters[static_cast<std::size_t>(g.uniform(0, sigma - 1))];
    if (seen.insert(t).second) tokens.push_back(t);
  }
  std::shuffle(tokens.begin(), tokens.end(), g.engine());
  return Vocabulary::from_tokens(tokens);
}

BpeTokenizer random_bpe(Gen& g, int sigma, int num_merges) {
  std::vector<std::string> alphabet;
  for (int i = 0; i < sigma; ++i) alphabet.emplace_back(1, kLetters[static_cast<std::size_t>(i)]);
  std::set<std::string> seen(alphabet.begin(), alphabet.end());
  std::vector<std::pair<std::string, std::string>> merges;
  for (int attempts = 0; static_cast<int>(merges.size()) < num_merges && attempts < 500; ++attempts) {
    const std::string& l = g.pick(alphabet);
    const std::string& r = g.pick(alphabet);
    if (!seen.insert(l + r).second) continue;
    merges.emplace_back(l, r);
    alphabet.push_back(l + r);
  }
  Vocabulary vocab = Vocabulary::from_tokens(alphabet);
  std::vector<std::pair<Label, Label>> pairs;
  for (const auto& [l, r] : merges) pairs.emplace_back(vocab.find(l), vocab.find(r));
  return BpeTokenizer(vocab, pairs);
}

std::string random_text(Gen& g, const Vocabulary& vocab, int max_len) {
  std::string out;
  int len = g.uniform(0, max_len);
  for (int i = 0; i < len; ++i) out += vocab.str(g.pick(vocab.characters()));
  return out;
}

Dfa random_pattern(Gen& g, const Vocabulary& vocab, const PatternShape& shape) {
  const auto& chars = vocab.characters();
  while (true) {
    int n = g.uniform(1, shape.max_states);
    FstBuilder b(vocab.symbols());
    b.add_states(n);
    b.set_start(0);
    bool any_final = false;
    for (StateId s = 0; s < n; ++s) {
      if (g.coin(shape.final_prob)) {
        b.set_final(s);
        any_final = true;
      }
      std::vector<Label> labels = chars;
      std::shuffle(labels.begin(), labels.end(), g.engine());
      int degree = std::min(g.uniform(shape.min_degree, shape.max_degree), static_cast<int>(labels.size()));
      for (int i = 0; i < degree; ++i) b.add_arc(s, labels[static_cast<std::size_t>(i)],
                                                 labels[static_cast<std::size_t>(i)], g.uniform(0, n - 1));
    }
    if (!any_final) b.set_final(g.uniform(0, n - 1));
    b.set_input_alphabet(chars);
    b.set_output_alphabet(chars);
    Dfa d = minimize(Dfa::from_fst(std::move(b).build()));
    if (!d.is_empty()) return d;
  }
}

Fst random_fst(Gen& g, const SymbolTablePtr& symbols, const std::vector<Label>& labels,
               int max_states, bool acceptor, bool epsilons, bool phi, double final_prob,
               int max_degree) {
  int n = g.uniform(1, max_states);
  FstBuilder b(symbols);
  b.add_states(n);
  b.set_start(0);
  for (StateId s = 0; s < n; ++s) {
    if (g.coin(final_prob)) b.set_final(s);
    int degree = g.uniform(0, max_degree);
    for (int i = 0; i < degree; ++i) {
      Label in = g.pick(labels);
      Label out = acceptor ? in : g.pick(labels);
      if (epsilons && g.coin(0.2)) {
        // Epsilon arcs only point forward, so there are no epsilon cycles.
        if (s + 1 < n) {
          if (acceptor || g.coin(0.5)) in = kEpsilon;
          if (acceptor || g.coin(0.5)) out = kEpsilon;
          b.add_arc(s, in, out, g.uniform(s + 1, n - 1));
        }
        continue;
      }
      b.add_arc(s, in, out, g.uniform(0, n - 1));
    }
    if (phi && g.coin(0.3)) b.add_arc(s, kPhi, acceptor ? kEpsilon : g.pick(labels), g.uniform(0, n - 1));
  }
  return std::move(b).build();
}

}  // namespace subfst::testing
