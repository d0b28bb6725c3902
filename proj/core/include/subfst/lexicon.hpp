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

#ifndef SUBFST_LEXICON_HPP_
#define SUBFST_LEXICON_HPP_

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "subfst/fst.hpp"
#include "subfst/tokenizers.hpp"

namespace subfst {

// Character-to-subword transducer relating every character sequence to all of
// its segmentations into vocabulary tokens. Token paths share epsilon-output
// prefixes, emit the token on the arc reading its last character, and are
// closed under concatenation.
Fst build_lexicon_transducer(const Vocabulary& vocab);

// Trie over the vocabulary with MaxMatch failure links. For a node spelling
// prefix p that cannot be extended by the next character, `pops` are the
// tokens greedy longest-match emits from p and `fail` is the node spelling
// what is left of p afterwards.
class FailureTrie {
 public:
  static constexpr int kRoot = 0;
  static constexpr int kNoNode = -1;

  struct Node {
    std::string prefix;
    std::map<Label, int> children;  // keyed by character id
    bool final = false;             // prefix is a token
    int fail = kNoNode;
    std::vector<Label> pops;
  };

  const SymbolTablePtr& symbols() const { return symbols_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(int id) const { return nodes_.at(static_cast<std::size_t>(id)); }
  // Node spelling `prefix`, or kNoNode.
  int find(std::string_view prefix) const;

 private:
  friend FailureTrie build_failure_trie(const Vocabulary& vocab);

  SymbolTablePtr symbols_;
  std::vector<Node> nodes_;
  std::vector<Label> characters_;
  std::vector<Label> tokens_;
  friend Fst build_maxmatch_transducer(const FailureTrie& trie);
};

// Breadth-first failure-link computation.
FailureTrie build_failure_trie(const Vocabulary& vocab);

// Transducer whose start state (the trie root) is its only final state.
// Character arcs descend the trie emitting epsilon; each non-root node gets
// a chain of phi arcs emitting its pops and ending at its failure node.
Fst build_maxmatch_transducer(const FailureTrie& trie);

// Three-state transducer rewriting every adjacent (left, right) into the
// merged token, left to right, and copying everything else.
struct MergeGadget {
  static constexpr StateId kInitial = 0;
  static constexpr StateId kActive = 1;
  static constexpr StateId kAbort = 2;

  Fst fst;
  Merge merge;
};

// `alphabet` is the set of tokens that can occur before this merge. Throws
// ConfigError when the concatenation of the pair is not a token.
MergeGadget build_merge_gadget(std::pair<Label, Label> pair, std::span<const Label> alphabet,
                               const SymbolTablePtr& symbols);

}  // namespace subfst

#endif  // SUBFST_LEXICON_HPP_
