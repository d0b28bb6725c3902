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

#include "fixtures.hpp"

#include <sstream>

#include "subfst/errors.hpp"

namespace subfst::testing {

Vocabulary vocab_of(std::initializer_list<std::string_view> tokens) {
  std::vector<std::string> v(tokens.begin(), tokens.end());
  return Vocabulary::from_tokens(v);
}

BpeTokenizer bpe_of(const Vocabulary& vocab,
                    std::initializer_list<std::pair<std::string_view, std::string_view>> merges) {
  std::vector<std::pair<Label, Label>> pairs;
  for (const auto& [l, r] : merges) pairs.emplace_back(vocab.find(l), vocab.find(r));
  return BpeTokenizer(vocab, pairs);
}

std::vector<Label> ids(const Vocabulary& vocab, std::string_view spaced) {
  std::vector<Label> out;
  std::istringstream in{std::string(spaced)};
  std::string piece;
  while (in >> piece) {
    Label id = vocab.find(piece);
    if (id == kNoLabel) throw ConfigError("fixture token '" + piece + "' is not in the vocabulary");
    out.push_back(id);
  }
  return out;
}

std::string spell(const Vocabulary& vocab, std::span<const Label> seq) {
  std::string out;
  for (Label t : seq) {
    if (!out.empty()) out += ' ';
    out += vocab.str(t);
  }
  return out;
}

Vocabulary bananas_vocab() { return vocab_of({"a", "b", "n", "s", "ba", "na", "ban", "bana"}); }
Vocabulary abaab_vocab() { return vocab_of({"a", "b", "ab", "aba"}); }
Vocabulary lattice_vocab() { return vocab_of({"a", "b", "c", "ab", "abc", "bc"}); }
Vocabulary loop_vocab() { return vocab_of({"a", "b", "aa", "ab"}); }
Vocabulary racecar_vocab() { return vocab_of({"r", "a", "c", "e", "race", "car", "ce"}); }

BpeTokenizer topology_bpe() {
  Vocabulary v = vocab_of({"t", "o", "p", "l", "g", "y", "to", "gy", "lo", "po", "logy"});
  return bpe_of(v, {{"t", "o"}, {"g", "y"}, {"l", "o"}, {"p", "o"}, {"lo", "gy"}});
}

BpeTokenizer bcab_bpe() {
  Vocabulary v = vocab_of({"a", "b", "c", "ab", "bc", "cc", "abc"});
  return bpe_of(v, {{"a", "b"}, {"b", "c"}, {"c", "c"}, {"ab", "c"}});
}

BpeTokenizer chain_bpe() {
  Vocabulary v = vocab_of({"a", "b", "c", "d", "aa", "ab", "db", "cdb"});
  return bpe_of(v, {{"a", "a"}, {"a", "b"}, {"d", "b"}, {"c", "db"}});
}

}  // namespace subfst::testing
