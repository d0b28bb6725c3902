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

#ifndef SUBFST_VERIFY_HPP_
#define SUBFST_VERIFY_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "subfst/fst.hpp"
#include "subfst/promotion.hpp"
#include "subfst/tokenizers.hpp"

namespace subfst {

struct CheckReport {
  bool ok = true;
  // Pattern strings compared against the tokenizer oracle.
  std::size_t strings_checked = 0;
  // First mismatch, rendered as space-separated tokens.
  std::string counterexample;
  std::string reason;
};

// Compares a promoted automaton against the reference tokenizers.
//
// Every token sequence accepted by `promoted` must spell a string of
// L(pattern); this part is exact, not bounded. For every w in L(pattern) with
// at most `max_len` characters, the accepted sequences spelling w must be all
// segmentations of w (agnostic) or exactly the tokenizer output for w
// (maxmatch, bpe). `tok` is required for Mode::kBpe.
CheckReport check_promotion(const Dfa& pattern, const Dfa& promoted, Mode mode,
                            const Vocabulary& vocab, const BpeTokenizer* tok, std::size_t max_len);

// Accepted sequences of `d` whose concatenation is `chars`.
std::vector<std::vector<Label>> sequences_spelling(const Dfa& d, const Vocabulary& vocab,
                                                   std::span<const Label> chars);

}  // namespace subfst

#endif  // SUBFST_VERIFY_HPP_
