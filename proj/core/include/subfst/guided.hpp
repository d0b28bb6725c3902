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

#ifndef SUBFST_GUIDED_HPP_
#define SUBFST_GUIDED_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "subfst/fst.hpp"

namespace subfst {

// Position in a constraint automaton. Values are immutable and share the
// automaton, so many decoding sessions can step through one DFA at once.
class ConstraintState {
 public:
  const Dfa& dfa() const { return *dfa_; }
  StateId state() const { return state_; }
  bool terminable() const { return dfa_->is_final(state_); }

 private:
  friend ConstraintState constraint_begin(std::shared_ptr<const Dfa> d);
  friend ConstraintState constraint_advance(const ConstraintState& s, Label token);
  ConstraintState(std::shared_ptr<const Dfa> d, StateId state)
      : dfa_(std::move(d)), state_(state) {}

  std::shared_ptr<const Dfa> dfa_;
  StateId state_;
};

// `d` must be trim. Throws ConstraintError when it accepts nothing.
ConstraintState constraint_begin(std::shared_ptr<const Dfa> d);

// Tokens that keep the output completable, ascending.
std::vector<Label> allowed_tokens(const ConstraintState& s);

// Throws ConstraintError when `token` is not allowed.
ConstraintState constraint_advance(const ConstraintState& s, Label token);

// Deterministic stand-in for a language model. Scores are pseudo-random in
// [0, 1) and depend only on the seed, the context and the candidate.
class StubLM {
 public:
  StubLM(std::uint64_t seed, std::size_t vocab_size) : seed_(seed), vocab_size_(vocab_size) {}

  std::uint64_t seed() const { return seed_; }
  std::size_t vocab_size() const { return vocab_size_; }

  double score(std::span<const Label> context, Label candidate) const;
  // Score of stopping after `context`.
  double end_score(std::span<const Label> context) const;

 private:
  std::uint64_t seed_;
  std::size_t vocab_size_;
};

struct DecodeOptions {
  std::size_t max_steps = 64;
  // When set, every `retokenize_every` steps the output so far is replaced by
  // retokenize(concat(output)) if the constraint still allows it.
  std::function<std::vector<Label>(std::string_view)> retokenize;
  std::size_t retokenize_every = 1;
};

// Greedy decoding under the constraint. At a final state the decoder stops
// once the end score is at least every allowed continuation's score. Throws
// ConstraintError on an empty automaton and IncompleteGenerationError when
// max_steps is reached at a non-final state.
std::vector<Label> constrained_decode(const StubLM& lm, std::shared_ptr<const Dfa> d,
                                      const DecodeOptions& options = {});

}  // namespace subfst

#endif  // SUBFST_GUIDED_HPP_
