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

#include "subfst/tokenizers.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "subfst/errors.hpp"

namespace subfst {
namespace {

long long pair_key(Label a, Label b) {
  return (static_cast<long long>(a) << 32) | static_cast<unsigned>(b);
}

std::string join(const Vocabulary& vocab, std::span<const Label> chars, std::size_t from,
                 std::size_t len) {
  std::string s;
  for (std::size_t k = from; k < from + len; ++k) s += vocab.str(chars[k]);
  return s;
}

}  // namespace

Vocabulary Vocabulary::from_tokens(std::span<const std::string> tokens) {
  auto table = std::make_shared<SymbolTable>();
  for (const auto& t : tokens) {
    if (t.empty()) throw ValidationError("vocabulary contains an empty token");
    if (table->contains(t)) throw ValidationError("duplicate token: " + t);
    table->add(t);
  }
  Vocabulary v;
  v.lengths_.assign(table->size(), 0);
  for (const auto& t : tokens) {
    Label id = table->find(t);
    auto chars = split_chars(t);
    for (const auto& c : chars) {
      if (!table->contains(c)) {
        throw ValidationError("character '" + c + "' (in token '" + t +
                              "') has no single-character token");
      }
    }
    v.tokens_.push_back(id);
    v.lengths_[static_cast<std::size_t>(id)] = chars.size();
    v.max_token_length_ = std::max(v.max_token_length_, chars.size());
    if (chars.size() == 1) v.characters_.push_back(id);
  }
  v.symbols_ = std::move(table);
  return v;
}

bool Vocabulary::is_character(Label id) const {
  return symbols_->is_token(id) && lengths_[static_cast<std::size_t>(id)] == 1;
}

std::vector<Label> Vocabulary::characters_of(std::string_view text) const {
  std::vector<Label> out;
  for (const auto& c : split_chars(text)) {
    Label id = symbols_->find(c);
    if (id == kNoLabel || !is_character(id)) {
      throw InputError("character '" + c + "' is not in the alphabet");
    }
    out.push_back(id);
  }
  return out;
}

std::string Vocabulary::concat(std::span<const Label> seq) const {
  std::string s;
  for (Label l : seq) s += str(l);
  return s;
}

BpeTokenizer::BpeTokenizer(Vocabulary vocab, std::span<const std::pair<Label, Label>> merges)
    : vocab_(std::move(vocab)) {
  std::set<Label> available(vocab_.characters().begin(), vocab_.characters().end());
  for (const auto& [left, right] : merges) {
    if (!vocab_.symbols()->is_token(left) || !vocab_.symbols()->is_token(right)) {
      throw ValidationError("merge refers to an unknown token id");
    }
    const std::string joined = vocab_.str(left) + vocab_.str(right);
    Label result = vocab_.find(joined);
    if (result == kNoLabel) {
      throw ValidationError("merge result '" + joined + "' is not in the vocabulary");
    }
    if (!available.contains(left) || !available.contains(right)) {
      throw ValidationError("merge (" + vocab_.str(left) + ", " + vocab_.str(right) +
                            ") uses a token that no earlier merge produces");
    }
    if (!available.insert(result).second) {
      throw ValidationError("token '" + joined + "' is produced by more than one merge");
    }
    ranks_.emplace(pair_key(left, right), static_cast<int>(merges_.size()));
    merges_.push_back(Merge{left, right, result});
  }
  for (Label t : vocab_.tokens()) {
    if (!available.contains(t)) {
      throw ValidationError("token '" + vocab_.str(t) + "' is not produced by any merge");
    }
  }
}

int BpeTokenizer::rank(Label left, Label right) const {
  auto it = ranks_.find(pair_key(left, right));
  return it == ranks_.end() ? -1 : it->second;
}

std::vector<Label> BpeTokenizer::alphabet_before(std::size_t index) const {
  std::vector<Label> out = vocab_.characters();
  for (std::size_t i = 0; i < index && i < merges_.size(); ++i) out.push_back(merges_[i].result);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Label> maxmatch_tokenize(const Vocabulary& vocab, std::string_view text) {
  return maxmatch_tokenize(vocab, vocab.characters_of(text));
}

std::vector<Label> maxmatch_tokenize(const Vocabulary& vocab, std::span<const Label> chars) {
  std::vector<Label> out;
  const std::size_t m = vocab.max_token_length();
  std::size_t i = 0;
  while (i < chars.size()) {
    Label z = chars[i];
    std::size_t len = 1;
    for (std::size_t j = 1; j <= m && i + j <= chars.size(); ++j) {
      Label t = vocab.find(join(vocab, chars, i, j));
      if (t != kNoLabel) {
        z = t;
        len = j;
      }
    }
    out.push_back(z);
    i += len;
  }
  return out;
}

std::vector<Label> apply_merge(std::span<const Label> seq, const Merge& merge) {
  std::vector<Label> out;
  out.reserve(seq.size());
  for (std::size_t i = 0; i < seq.size();) {
    if (i + 1 < seq.size() && seq[i] == merge.left && seq[i + 1] == merge.right) {
      out.push_back(merge.result);
      i += 2;
    } else {
      out.push_back(seq[i]);
      ++i;
    }
  }
  return out;
}

std::vector<Label> bpe_tokenize(const BpeTokenizer& tok, std::string_view text) {
  return bpe_tokenize(tok, tok.vocab().characters_of(text));
}

std::vector<Label> bpe_tokenize(const BpeTokenizer& tok, std::span<const Label> chars) {
  std::vector<Label> t(chars.begin(), chars.end());
  while (true) {
    int best = -1;
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      int r = tok.rank(t[i], t[i + 1]);
      if (r >= 0 && (best < 0 || r < best)) best = r;
    }
    if (best < 0) return t;
    t = apply_merge(t, tok.merges()[static_cast<std::size_t>(best)]);
  }
}

std::vector<Label> bpe_tokenize_iterative(const BpeTokenizer& tok, std::string_view text) {
  return bpe_tokenize_iterative(tok, tok.vocab().characters_of(text));
}

std::vector<Label> bpe_tokenize_iterative(const BpeTokenizer& tok, std::span<const Label> chars) {
  std::vector<Label> t(chars.begin(), chars.end());
  for (const Merge& m : tok.merges()) t = apply_merge(t, m);
  return t;
}

BpeTrainResult bpe_train(std::span<const std::string> corpus, std::size_t num_merges) {
  if (corpus.empty()) throw InputError("bpe_train: empty corpus");
  std::set<std::string> chars;
  for (const auto& w : corpus) {
    for (auto& c : split_chars(w)) chars.insert(std::move(c));
  }
  std::vector<std::string> tokens(chars.begin(), chars.end());
  SymbolTable table(tokens);

  std::vector<std::vector<Label>> words;
  for (const auto& w : corpus) {
    std::vector<Label> ids;
    for (const auto& c : split_chars(w)) ids.push_back(table.find(c));
    words.push_back(std::move(ids));
  }

  std::vector<std::pair<Label, Label>> merges;
  bool exhausted = false;
  for (std::size_t step = 0; step < num_merges; ++step) {
    struct Tally {
      std::size_t count = 0;
      std::pair<std::size_t, std::size_t> first;
    };
    std::map<std::pair<Label, Label>, Tally> tallies;
    for (std::size_t w = 0; w < words.size(); ++w) {
      for (std::size_t i = 0; i + 1 < words[w].size(); ++i) {
        auto key = std::make_pair(words[w][i], words[w][i + 1]);
        if (table.contains(table.str(key.first) + table.str(key.second))) continue;
        auto [it, inserted] = tallies.try_emplace(key);
        if (inserted) it->second.first = {w, i};
        ++it->second.count;
      }
    }
    if (tallies.empty()) {
      exhausted = true;
      break;
    }
    auto best = tallies.begin();
    for (auto it = tallies.begin(); it != tallies.end(); ++it) {
      if (it->second.count > best->second.count ||
          (it->second.count == best->second.count && it->second.first < best->second.first)) {
        best = it;
      }
    }
    auto [left, right] = best->first;
    Label result = table.add(table.str(left) + table.str(right));
    merges.emplace_back(left, right);
    for (auto& w : words) w = apply_merge(w, Merge{left, right, result});
  }

  Vocabulary vocab = Vocabulary::from_tokens(table.tokens());
  return BpeTrainResult{BpeTokenizer(std::move(vocab), merges), exhausted};
}

std::vector<std::vector<Label>> all_segmentations(const Vocabulary& vocab,
                                                  std::string_view text) {
  return all_segmentations(vocab, vocab.characters_of(text));
}

std::vector<std::vector<Label>> all_segmentations(const Vocabulary& vocab,
                                                  std::span<const Label> chars) {
  std::vector<std::vector<Label>> out;
  std::vector<Label> current;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == chars.size()) {
      out.push_back(current);
      return;
    }
    for (std::size_t j = 1; j <= vocab.max_token_length() && i + j <= chars.size(); ++j) {
      Label t = vocab.find(join(vocab, chars, i, j));
      if (t == kNoLabel) continue;
      current.push_back(t);
      self(self, i + j);
      current.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::size_t count_segmentations(const Vocabulary& vocab, std::string_view text) {
  auto chars = vocab.characters_of(text);
  std::vector<std::size_t> ways(chars.size() + 1, 0);
  ways[0] = 1;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    if (ways[i] == 0) continue;
    for (std::size_t j = 1; j <= vocab.max_token_length() && i + j <= chars.size(); ++j) {
      if (vocab.find(join(vocab, chars, i, j)) != kNoLabel) ways[i + j] += ways[i];
    }
  }
  return ways[chars.size()];
}

}  // namespace subfst
