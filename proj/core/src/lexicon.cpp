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

#include "subfst/lexicon.hpp"

#include <algorithm>
#include <deque>

#include "subfst/errors.hpp"
#include "subfst/ops.hpp"

namespace subfst {

Fst build_lexicon_transducer(const Vocabulary& vocab) {
  FstBuilder b(vocab.symbols());
  b.set_input_alphabet(vocab.characters());
  b.set_output_alphabet(vocab.tokens());
  const StateId root = b.add_state();
  b.set_start(root);

  // Prefix states keyed by (parent, character) so shared prefixes share the
  // epsilon-output path.
  std::map<std::pair<StateId, Label>, StateId> prefix_child;
  for (Label token : vocab.tokens()) {
    const auto chars = vocab.characters_of(vocab.str(token));
    StateId cur = root;
    for (std::size_t i = 0; i + 1 < chars.size(); ++i) {
      auto [it, inserted] = prefix_child.try_emplace({cur, chars[i]}, kNoState);
      if (inserted) {
        it->second = b.add_state();
        b.add_arc(cur, chars[i], kEpsilon, it->second);
      }
      cur = it->second;
    }
    StateId end = b.add_state();
    b.add_arc(cur, chars.back(), token, end);
    b.set_final(end);
  }
  return kleene_star_closure(std::move(b).build());
}

int FailureTrie::find(std::string_view prefix) const {
  int cur = kRoot;
  for (const auto& c : split_chars(prefix)) {
    Label id = symbols_->find(c);
    if (id == kNoLabel) return kNoNode;
    const auto& children = nodes_[static_cast<std::size_t>(cur)].children;
    auto it = children.find(id);
    if (it == children.end()) return kNoNode;
    cur = it->second;
  }
  return cur;
}

FailureTrie build_failure_trie(const Vocabulary& vocab) {
  FailureTrie trie;
  trie.symbols_ = vocab.symbols();
  trie.characters_ = vocab.characters();
  trie.tokens_ = vocab.tokens();
  auto& nodes = trie.nodes_;
  nodes.emplace_back();

  for (Label token : vocab.tokens()) {
    int cur = FailureTrie::kRoot;
    for (Label c : vocab.characters_of(vocab.str(token))) {
      auto& children = nodes[static_cast<std::size_t>(cur)].children;
      auto it = children.find(c);
      int next;
      if (it == children.end()) {
        next = static_cast<int>(nodes.size());
        children.emplace(c, next);
        FailureTrie::Node child;
        child.prefix = nodes[static_cast<std::size_t>(cur)].prefix + vocab.str(c);
        nodes.push_back(std::move(child));
      } else {
        next = it->second;
      }
      cur = next;
    }
    nodes[static_cast<std::size_t>(cur)].final = true;
  }

  std::deque<int> queue{FailureTrie::kRoot};
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (const auto& [c, v] : nodes[static_cast<std::size_t>(u)].children) {
      auto& node = nodes[static_cast<std::size_t>(v)];
      if (node.final) {
        node.fail = FailureTrie::kRoot;
        node.pops = {vocab.find(node.prefix)};
      } else {
        int z = nodes[static_cast<std::size_t>(u)].fail;
        std::vector<Label> pops = nodes[static_cast<std::size_t>(u)].pops;
        while (z != FailureTrie::kNoNode &&
               !nodes[static_cast<std::size_t>(z)].children.contains(c)) {
          const auto& zn = nodes[static_cast<std::size_t>(z)];
          pops.insert(pops.end(), zn.pops.begin(), zn.pops.end());
          z = zn.fail;
        }
        if (z != FailureTrie::kNoNode) {
          node.fail = nodes[static_cast<std::size_t>(z)].children.at(c);
          node.pops = std::move(pops);
        }
      }
      queue.push_back(v);
    }
  }
  return trie;
}

Fst build_maxmatch_transducer(const FailureTrie& trie) {
  FstBuilder b(trie.symbols());
  b.set_input_alphabet(trie.characters_);
  b.set_output_alphabet(trie.tokens_);
  b.add_states(static_cast<StateId>(trie.nodes().size()));
  b.set_start(FailureTrie::kRoot);
  b.set_final(FailureTrie::kRoot);
  for (std::size_t v = 0; v < trie.nodes().size(); ++v) {
    const auto& node = trie.nodes()[v];
    const auto state = static_cast<StateId>(v);
    for (const auto& [c, child] : node.children) b.add_arc(state, c, kEpsilon, child);
    if (node.fail == FailureTrie::kNoNode) continue;
    if (node.pops.empty()) {
      b.add_arc(state, kPhi, kEpsilon, node.fail);
      continue;
    }
    StateId tmp = state;
    for (std::size_t i = 0; i < node.pops.size(); ++i) {
      StateId next = (i + 1 == node.pops.size()) ? node.fail : b.add_state();
      b.add_arc(tmp, kPhi, node.pops[i], next);
      tmp = next;
    }
  }
  return std::move(b).build();
}

MergeGadget build_merge_gadget(std::pair<Label, Label> pair, std::span<const Label> alphabet,
                               const SymbolTablePtr& symbols) {
  const auto [a, bb] = pair;
  const Label ab = symbols->find(symbols->str(a) + symbols->str(bb));
  if (ab == kNoLabel) {
    throw ConfigError("merge result '" + symbols->str(a) + symbols->str(bb) +
                      "' is not in the vocabulary");
  }
  FstBuilder b(symbols);
  b.add_states(3);
  const StateId q0 = MergeGadget::kInitial;
  const StateId q1 = MergeGadget::kActive;
  const StateId q2 = MergeGadget::kAbort;
  b.set_start(q0);
  b.set_final(q0);
  b.set_final(q2);

  std::vector<Label> in_alphabet;
  for (Label c : alphabet) {
    if (c == ab || c == kEpsilon || c == kPhi) continue;
    in_alphabet.push_back(c);
    if (c != a) b.add_arc(q0, c, c, q0);
    if (c != a && c != bb) b.add_arc(q2, c, c, q0);
  }
  b.add_arc(q0, a, kEpsilon, q1);
  b.add_arc(q1, bb, ab, q0);
  if (a != bb) b.add_arc(q1, a, a, q1);
  b.add_arc(q1, kPhi, a, q2);

  std::vector<Label> out_alphabet = in_alphabet;
  out_alphabet.push_back(ab);
  b.set_input_alphabet(std::move(in_alphabet));
  b.set_output_alphabet(std::move(out_alphabet));
  return MergeGadget{std::move(b).build(), Merge{a, bb, ab}};
}

}  // namespace subfst
