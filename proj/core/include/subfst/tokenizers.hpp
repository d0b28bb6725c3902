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

#ifndef SUBFST_TOKENIZERS_HPP_
#define SUBFST_TOKENIZERS_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "subfst/symbol_table.hpp"

namespace subfst {

// Subword vocabulary. Every token of the symbol table is a vocabulary entry
// and every character used inside a token is itself a token.
class Vocabulary {
 public:
  Vocabulary() = default;

  // Validates and takes the tokens in order (first token gets id 2). Throws
  // ValidationError on an empty or duplicate token, or a character with no
  // single-character token.
  static Vocabulary from_tokens(std::span<const std::string> tokens);

  const SymbolTablePtr& symbols() const { return symbols_; }
  // All token ids, ascending.
  const std::vector<Label>& tokens() const { return tokens_; }
  // Single-character token ids, ascending.
  const std::vector<Label>& characters() const { return characters_; }
  std::size_t size() const { return tokens_.size(); }
  // Longest token, in characters.
  std::size_t max_token_length() const { return max_token_length_; }

  Label find(std::string_view token) const { return symbols_->find(token); }
  const std::string& str(Label id) const { return symbols_->str(id); }
  bool is_character(Label id) const;
  std::size_t token_length(Label id) const { return lengths_.at(static_cast<std::size_t>(id)); }

  // Character ids of `text`. Throws InputError on a character outside the
  // alphabet.
  std::vector<Label> characters_of(std::string_view text) const;
  std::string concat(std::span<const Label> seq) const;

 private:
  SymbolTablePtr symbols_;
  std::vector<Label> tokens_;
  std::vector<Label> characters_;
  std::vector<std::size_t> lengths_;  // indexed by id
  std::size_t max_token_length_ = 0;
};

struct Merge {
  Label left = kNoLabel;
  Label right = kNoLabel;
  Label result = kNoLabel;

  friend bool operator==(const Merge&, const Merge&) = default;
};

// Trained BPE tokenizer: vocabulary plus ordered merge list (index 0 has the
// highest priority).
class BpeTokenizer {
 public:
  BpeTokenizer() = default;

  // Throws ValidationError when a merge result is not in the vocabulary,
  // results repeat, a merge uses a token that only a later merge creates, or
  // a multi-character token is produced by no merge.
  BpeTokenizer(Vocabulary vocab, std::span<const std::pair<Label, Label>> merges);

  const Vocabulary& vocab() const { return vocab_; }
  const std::vector<Merge>& merges() const { return merges_; }

  // Priority of the merge (left, right); -1 if it is not a merge.
  int rank(Label left, Label right) const;
  // Tokens that exist before merge `index` is applied: the characters plus
  // the results of merges [0, index).
  std::vector<Label> alphabet_before(std::size_t index) const;

 private:
  Vocabulary vocab_;
  std::vector<Merge> merges_;
  std::unordered_map<long long, int> ranks_;
};

// Greedy longest-match-first tokenization.
std::vector<Label> maxmatch_tokenize(const Vocabulary& vocab, std::string_view text);
std::vector<Label> maxmatch_tokenize(const Vocabulary& vocab, std::span<const Label> chars);

struct BpeTrainResult {
  BpeTokenizer tokenizer;
  // True when no mergeable pair remained before `num_merges` merges.
  bool exhausted = false;
};

// Learns `num_merges` merges by pair count. Ties go to the pair whose first
// occurrence (word order, then position) is earliest. Pairs whose
// concatenation is already a token are skipped. Throws InputError on an
// empty corpus.
BpeTrainResult bpe_train(std::span<const std::string> corpus, std::size_t num_merges);

// Repeatedly applies the highest-priority merge present, at all of its
// occurrences, until none applies.
std::vector<Label> bpe_tokenize(const BpeTokenizer& tok, std::string_view text);
std::vector<Label> bpe_tokenize(const BpeTokenizer& tok, std::span<const Label> chars);

// Applies every merge once, in priority order.
std::vector<Label> bpe_tokenize_iterative(const BpeTokenizer& tok, std::string_view text);
std::vector<Label> bpe_tokenize_iterative(const BpeTokenizer& tok, std::span<const Label> chars);

// One left-to-right pass replacing non-overlapping (left, right) pairs.
std::vector<Label> apply_merge(std::span<const Label> seq, const Merge& merge);

// Every segmentation of `text` into vocabulary tokens.
std::vector<std::vector<Label>> all_segmentations(const Vocabulary& vocab, std::string_view text);
std::vector<std::vector<Label>> all_segmentations(const Vocabulary& vocab,
                                                  std::span<const Label> chars);
std::size_t count_segmentations(const Vocabulary& vocab, std::string_view text);

}  // namespace subfst

#endif  // SUBFST_TOKENIZERS_HPP_
