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

#ifndef SUBFST_TESTS_FIXTURES_HPP_
#define SUBFST_TESTS_FIXTURES_HPP_

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "subfst/fst.hpp"
#include "subfst/tokenizers.hpp"

namespace subfst::testing {

Vocabulary vocab_of(std::initializer_list<std::string_view> tokens);
BpeTokenizer bpe_of(const Vocabulary& vocab,
                    std::initializer_list<std::pair<std::string_view, std::string_view>> merges);

// "bana na s" -> ids.
std::vector<Label> ids(const Vocabulary& vocab, std::string_view spaced);
// ids -> "bana na s".
std::string spell(const Vocabulary& vocab, std::span<const Label> seq);

// {a, b, n, s, ba, na, ban, bana}
Vocabulary bananas_vocab();
// {a, b, ab, aba}
Vocabulary abaab_vocab();
// {a, b, c, ab, abc, bc}
Vocabulary lattice_vocab();
// {a, b, aa, ab}
Vocabulary loop_vocab();
// {r, a, c, e, race, car, ce}
Vocabulary racecar_vocab();
// (t,o) (g,y) (l,o) (p,o) (lo,gy)
BpeTokenizer topology_bpe();
// (a,b) (b,c) (c,c) (ab,c)
BpeTokenizer bcab_bpe();
// (a,a) (a,b) (d,b) (c,db)
BpeTokenizer chain_bpe();

// Small looping patterns over the loop and chain fixtures.
inline constexpr std::string_view kLoopPattern = "(a|b)(ab|a)*b?";
inline constexpr std::string_view kChainPattern = "(cdb|aab|da)+c?";

}  // namespace subfst::testing

#endif  // SUBFST_TESTS_FIXTURES_HPP_
