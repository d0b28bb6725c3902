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

#include "subfst/verify.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <utility>

#include "subfst/errors.hpp"
#include "subfst/ops.hpp"

namespace subfst {
namespace {

std::string render(const Vocabulary& vocab, std::span<const Label> seq) {
  std::string out;
  for (Label t : seq) {
    if (!out.empty()) out += ' ';
    out += vocab.str(t);
  }
  return out;
}

bool spells_at(const std::vector<Label>& token_chars, std::span<const Label> w, std::size_t pos) {
  if (pos + token_chars.size() > w.size()) return false;
  return std::equal(token_chars.begin(), token_chars.end(), w.begin() + static_cast<std::ptrdiff_t>(pos));
}

class Speller {
 public:
  Speller(const Dfa& d, const Vocabulary& vocab) : d_(d) {
    chars_.resize(vocab.symbols()->size());
    for (Label t : vocab.tokens()) chars_[static_cast<std::size_t>(t)] = vocab.characters_of(vocab.str(t));
  }

  const std::vector<Label>& chars(Label t) const { return chars_[static_cast<std::size_t>(t)]; }

  // Number of accepted sequences spelling w.
  std::size_t count(std::span<const Label> w) const {
    std::vector<std::map<StateId, std::size_t>> at(w.size() + 1);
    if (d_.is_empty()) return 0;
    at[0][d_.start()] = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (const auto& [s, n] : at[i]) {
        for (const Arc& arc : d_.arcs(s)) {
          const auto& tc = chars(arc.in);
          if (spells_at(tc, w, i)) at[i + tc.size()][arc.dst] += n;
        }
      }
    }
    std::size_t total = 0;
    for (const auto& [s, n] : at[w.size()]) {
      if (d_.is_final(s)) total += n;
    }
    return total;
  }

  void all(std::span<const Label> w, std::vector<std::vector<Label>>& out) const {
    if (d_.is_empty()) return;
    std::vector<Label> prefix;
    walk(d_.start(), 0, w, prefix, out);
  }

 private:
  void walk(StateId s, std::size_t pos, std::span<const Label> w, std::vector<Label>& prefix,
            std::vector<std::vector<Label>>& out) const {
    if (pos == w.size()) {
      if (d_.is_final(s)) out.push_back(prefix);
      return;
    }
    for (const Arc& arc : d_.arcs(s)) {
      const auto& tc = chars(arc.in);
      if (!spells_at(tc, w, pos)) continue;
      prefix.push_back(arc.in);
      walk(arc.dst, pos + tc.size(), w, prefix, out);
      prefix.pop_back();
    }
  }

  const Dfa& d_;
  std::vector<std::vector<Label>> chars_;
};

// Walks the pattern over a token's characters; kNoState once it dies.
StateId advance(const Dfa& a, StateId q, const std::vector<Label>& chars) {
  for (Label c : chars) {
    if (q == kNoState) return q;
    q = a.next(q, c);
  }
  return q;
}

// Shortest accepted continuation from `s` in a trim DFA.
std::vector<Label> complete(const Dfa& d, StateId s) {
  std::vector<std::pair<StateId, Label>> parent(static_cast<std::size_t>(d.num_states()),
                                                {kNoState, kNoLabel});
  std::vector<bool> seen(static_cast<std::size_t>(d.num_states()), false);
  std::deque<StateId> queue{s};
  seen[static_cast<std::size_t>(s)] = true;
  while (!queue.empty()) {
    StateId u = queue.front();
    queue.pop_front();
    if (d.is_final(u)) {
      std::vector<Label> suffix;
      for (StateId v = u; v != s; v = parent[static_cast<std::size_t>(v)].first) {
        suffix.push_back(parent[static_cast<std::size_t>(v)].second);
      }
      std::reverse(suffix.begin(), suffix.end());
      return suffix;
    }
    for (const Arc& arc : d.arcs(u)) {
      if (seen[static_cast<std::size_t>(arc.dst)]) continue;
      seen[static_cast<std::size_t>(arc.dst)] = true;
      parent[static_cast<std::size_t>(arc.dst)] = {u, arc.in};
      queue.push_back(arc.dst);
    }
  }
  return {};
}

// Exact check that every sequence of `promoted` spells a pattern string, over
// the product of the two machines.
bool check_containment(const Dfa& pattern, const Dfa& promoted, const Speller& speller,
                       const Vocabulary& vocab, CheckReport& report) {
  if (promoted.is_empty()) return true;
  using Pair = std::pair<StateId, StateId>;
  std::map<Pair, std::pair<Pair, Label>> parent;
  Pair root{promoted.start(), pattern.is_empty() ? kNoState : pattern.start()};
  parent.emplace(root, std::pair{root, kNoLabel});
  std::deque<Pair> queue{root};
  auto path_to = [&](Pair p) {
    std::vector<Label> seq;
    while (p != root) {
      const auto& [prev, label] = parent.at(p);
      seq.push_back(label);
      p = prev;
    }
    std::reverse(seq.begin(), seq.end());
    return seq;
  };
  while (!queue.empty()) {
    Pair p = queue.front();
    queue.pop_front();
    auto [s, q] = p;
    if (q == kNoState || (promoted.is_final(s) && !pattern.is_final(q))) {
      std::vector<Label> seq = path_to(p);
      std::vector<Label> rest = complete(promoted, s);
      seq.insert(seq.end(), rest.begin(), rest.end());
      report.ok = false;
      report.counterexample = render(vocab, seq);
      report.reason = "accepted sequence spells '" + vocab.concat(seq) + "', which the pattern rejects";
      return false;
    }
    for (const Arc& arc : promoted.arcs(s)) {
      Pair next{arc.dst, advance(pattern, q, speller.chars(arc.in))};
      if (parent.emplace(next, std::pair{p, arc.in}).second) queue.push_back(next);
    }
  }
  return true;
}

}  // namespace

std::vector<std::vector<Label>> sequences_spelling(const Dfa& d, const Vocabulary& vocab,
                                                   std::span<const Label> chars) {
  std::vector<std::vector<Label>> out;
  Speller(d, vocab).all(chars, out);
  std::sort(out.begin(), out.end());
  return out;
}

CheckReport check_promotion(const Dfa& pattern, const Dfa& promoted, Mode mode,
                            const Vocabulary& vocab, const BpeTokenizer* tok, std::size_t max_len) {
  if (mode == Mode::kBpe && tok == nullptr) throw ConfigError("bpe check needs a merge list");
  CheckReport report;
  Speller speller(promoted, vocab);
  if (!check_containment(pattern, promoted, speller, vocab, report)) return report;

  for (const LabelSeq& w : enumerate_language(pattern, max_len)) {
    ++report.strings_checked;
    if (mode == Mode::kAgnostic) {
      std::size_t expected = count_segmentations(vocab, vocab.concat(w));
      if (speller.count(w) == expected) continue;
      // Accepted sequences spelling w are segmentations, so a short count
      // means a segmentation is missing.
      for (const auto& seg : all_segmentations(vocab, w)) {
        if (!promoted.accepts(seg)) {
          report.ok = false;
          report.counterexample = render(vocab, seg);
          report.reason = "segmentation of '" + vocab.concat(w) + "' is rejected";
          return report;
        }
      }
      continue;
    }
    std::vector<Label> oracle =
        mode == Mode::kMaxMatch ? maxmatch_tokenize(vocab, w) : bpe_tokenize(*tok, w);
    std::string name(mode_name(mode));
    if (!promoted.accepts(oracle)) {
      report.ok = false;
      report.counterexample = render(vocab, oracle);
      report.reason = name + " output for '" + vocab.concat(w) + "' is rejected";
      return report;
    }
    if (speller.count(w) != 1) {
      std::vector<std::vector<Label>> found;
      speller.all(w, found);
      for (const auto& seq : found) {
        if (seq != oracle) {
          report.ok = false;
          report.counterexample = render(vocab, seq);
          report.reason = "accepted sequence differs from the " + name + " output '" +
                          render(vocab, oracle) + "'";
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace subfst
