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

#ifndef SUBFST_PROMOTION_HPP_
#define SUBFST_PROMOTION_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "subfst/fst.hpp"
#include "subfst/tokenizers.hpp"

namespace subfst {

enum class Mode { kAgnostic, kMaxMatch, kBpe };

std::string_view mode_name(Mode mode);
// Accepts "agnostic", "maxmatch" and "bpe". Throws ConfigError otherwise.
Mode parse_mode(std::string_view name);

struct StageStats {
  std::string name;
  // Epsilon-free projection before determinization/minimization.
  StateId states_before = 0;
  std::size_t arcs_before = 0;
  // Whether that projection was already deterministic. When it was not, it
  // was determinized before minimization.
  bool deterministic = true;
  StateId states = 0;
  std::size_t arcs = 0;
  double seconds = 0.0;
};

struct PromotionResult {
  Dfa dfa;
  Mode mode = Mode::kAgnostic;
  std::vector<StageStats> stages;
};

struct PromotionOptions {
  // Keeps every intermediate minimized machine.
  bool keep_stages = false;
};

// Sequences of vocabulary tokens whose concatenation is in L(a).
PromotionResult promote_agnostic(const Dfa& a, const Vocabulary& vocab);
// Sequences t with concat(t) in L(a) and maxmatch(concat(t)) == t.
PromotionResult promote_maxmatch(const Dfa& a, const Vocabulary& vocab);
// Sequences t with concat(t) in L(a) and bpe(concat(t)) == t. One stage per
// merge, each minimized. `dumps` receives the stage machines when
// `options.keep_stages` is set.
PromotionResult promote_bpe(const Dfa& a, const BpeTokenizer& tok,
                            const PromotionOptions& options = {},
                            std::vector<Dfa>* dumps = nullptr);
// Same language as promote_bpe, composing every gadget before a single
// projection and minimization.
PromotionResult promote_bpe_chained(const Dfa& a, const BpeTokenizer& tok);

// Dispatches on `mode`; `tok` must be non-null for Mode::kBpe.
PromotionResult promote(const Dfa& a, Mode mode, const Vocabulary& vocab,
                        const BpeTokenizer* tok = nullptr);

// Minimized state count of every stage.
std::vector<std::size_t> promotion_stats(const PromotionResult& r);

}  // namespace subfst

#endif  // SUBFST_PROMOTION_HPP_
